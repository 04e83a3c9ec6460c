#include "qmaps/point.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>

#include "qmaps/error.hpp"

namespace qmaps {

std::string_view to_string(MapId id) { return id == MapId::F0 ? "f0" : "dp3"; }

MapId parse_map_id(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "f0") return MapId::F0;
  if (lower == "dp3") return MapId::DP3;
  throw ParseError("unknown map '" + std::string(text) + "' (expected f0 or dp3)");
}

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  const std::size_t n = coords_.size();
  if (n != 2 && n != 4 && n != 6) throw ArityMismatch(n < 4 ? 2 : (n < 6 ? 4 : 6), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!coords_[i].is_positive()) throw NonPositiveCoordinate(i, coords_[i].str());
  }
}

Point Point::parse(std::string_view csv) {
  std::vector<Scalar> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string_view item = csv.substr(start, comma - start);
    try {
      coords.push_back(Scalar::parse(item));
    } catch (const ParseError&) {
      throw ParseError("coordinate " + std::to_string(coords.size() + 1) + " is malformed: '" +
                       std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Point(std::move(coords));
}

std::size_t Point::bit_length() const {
  std::size_t bits = 0;
  for (const auto& c : coords_) bits = std::max(bits, c.bit_length());
  return bits;
}

std::string Point::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out += ", ";
    out += coords_[i].str();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Point& lhs, const Point& rhs) {
  return std::lexicographical_compare_three_way(lhs.coords_.begin(), lhs.coords_.end(),
                                                rhs.coords_.begin(), rhs.coords_.end());
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

void require_arity(const Point& p, std::size_t arity) {
  if (p.arity() != arity) throw ArityMismatch(arity, p.arity());
}

}  // namespace qmaps
