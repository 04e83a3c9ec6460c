#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "qmaps/point.hpp"

namespace qmaps {

/// Deterministic generator of random positive rationals and points.
///
/// Numerators and denominators are drawn from 1..max_value. The stream
/// depends only on the seed (mt19937_64 is fully specified by the
/// standard, and the range reduction is done here, not by a distribution).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, unsigned max_value = 100)
      : engine_(seed), max_value_(max_value) {}

  unsigned integer(unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(engine_() % (hi - lo + 1));
  }

  Scalar rational() { return rational(max_value_); }
  Scalar rational(unsigned max_value) {
    const long num = integer(1, max_value);
    const long den = integer(1, max_value);
    return Scalar(num, den);
  }

  Point point(std::size_t arity);

  /// A planar point other than the given one (used to skip fixed points).
  Point point_other_than(const Point& excluded);

 private:
  std::mt19937_64 engine_;
  unsigned max_value_;
};

/// Independent stream for sub-task `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace qmaps
