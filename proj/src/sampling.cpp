#include "qmaps/sampling.hpp"

#include <algorithm>
#include <vector>

#include "qmaps/error.hpp"

namespace qmaps {

Point Sampler::point(std::size_t arity) {
  std::vector<Scalar> coords;
  coords.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) coords.push_back(rational());
  return Point(std::move(coords));
}

Point Sampler::point_other_than(const Point& excluded) {
  const auto coords = excluded.coords();
  if (max_value_ < 2 && std::all_of(coords.begin(), coords.end(),
                                    [](const Scalar& c) { return c.is_one(); })) {
    throw InvalidArgument("the sampler can only produce the excluded point");
  }
  while (true) {
    Point p = point(excluded.arity());
    if (p != excluded) return p;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qmaps
