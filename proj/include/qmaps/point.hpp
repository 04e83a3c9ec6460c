#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmaps/scalar.hpp"

namespace qmaps {

/// The two map families under study.
enum class MapId { F0, DP3 };

/// Dimension N of the phase space of phi: 4 for F0, 6 for DP3.
constexpr std::size_t ambient_arity(MapId id) { return id == MapId::F0 ? 4 : 6; }

/// Global period m of psi and phi_hat: 4 for F0, 6 for DP3.
constexpr unsigned period(MapId id) { return id == MapId::F0 ? 4 : 6; }

std::string_view to_string(MapId id);

/// Accepts "f0" / "dp3" (case-insensitive); throws ParseError otherwise.
MapId parse_map_id(std::string_view text);

/// A point of the positive orthant, arity 2, 4 or 6.
///
/// Construction rejects other arities (ArityMismatch) and zero or negative
/// coordinates (NonPositiveCoordinate).
class Point {
 public:
  explicit Point(std::vector<Scalar> coords);
  Point(std::initializer_list<Scalar> coords) : Point(std::vector<Scalar>(coords)) {}

  /// Parses a comma-separated list of rationals.
  static Point parse(std::string_view csv);

  std::size_t arity() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  std::size_t bit_length() const;
  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& lhs, const Point& rhs);
  friend std::ostream& operator<<(std::ostream& os, const Point& p);

 private:
  std::vector<Scalar> coords_;
};

/// Throws ArityMismatch unless p has the given arity.
void require_arity(const Point& p, std::size_t arity);

}  // namespace qmaps
