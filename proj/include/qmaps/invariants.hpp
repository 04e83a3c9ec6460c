#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qmaps/jet.hpp"
#include "qmaps/point.hpp"

namespace qmaps {

/// A pair of first-integral values (J1, J2), (I1, I2) and so on.
struct IntegralValues {
  Scalar j1;
  Scalar j2;

  friend bool operator==(const IntegralValues&, const IntegralValues&) = default;
};

/// First integrals (I1, I2) of the periodic map of the family.
IntegralValues periodic_integrals(MapId id, const Point& p);

/// Lifted integrals J_k = I_k o pi of the quiver map.
IntegralValues lifted_integrals(MapId id, const Point& x);

/// Lifted F0 integrals from their expanded rational expressions in x1..x4,
/// without going through the projection.
IntegralValues lifted_integrals_f0_expanded(const Point& x);

enum class DP3Integrals {
  base,           ///< integrals of phi on C_(1,1)
  period_return,  ///< integrals of phi^6 on C_(a,b)
};

///   base:          (x2/x3 + x3/x2,  2 x2^2/(x1 x5) + x1 x5/x2^2)
///   period_return: (x3/x2,  x1 x5/x2^2)
IntegralValues restricted_integrals_dp3(DP3Integrals which, const Point& x);

/// The F0 integral Jacobian determinant in factored form:
/// (x-y)(xy-1)(x^2-1)(y^2-1) / (x^3 y^3).
Scalar integral_jacobian_det(const Point& p);

/// det Jac(I1, I2) at p computed by forward differentiation.
Jacobian2 integral_jacobian(MapId id, const Point& p);

/// Reflection in the diagonal: (x, y) -> (y, x).
Point reflect(const Point& p);

using DParams = std::array<Scalar, 4>;

/// The globally 6-periodic parameter map
/// (a, b, c, d) -> (b, b/a, 1/(a c), (a+1)/(a^2 d)).
DParams parameter_map(const DParams& q);

/// Points of the periodic-map orbit of p, in iteration order, without repeats.
std::vector<Point> periodic_orbit(MapId id, const Point& p);

/// The eight points (a,b), (b,1/a), (1/a,1/b), (1/b,a), (b,a), (a,1/b),
/// (1/b,1/a), (1/a,b) as a sorted set; coincident points collapse.
std::vector<Point> level_set_octet(const Scalar& a, const Scalar& b);

/// The two polynomial level-set equations in (u, v) for the F0 integrals
/// through P = (a, b); both residuals vanish exactly on the level set.
std::array<Scalar, 2> level_set_residuals(const Scalar& a, const Scalar& b, const Scalar& u,
                                          const Scalar& v);

/// Common level set of (I1, I2) through P, split into the periodic-map
/// orbits of P and of its reflection.
struct LevelSetSplit {
  Point P;
  std::vector<Point> orbit;            ///< orbit of P
  std::vector<Point> reflected_orbit;  ///< orbit of reflect(P)
  std::vector<Point> union_set;        ///< sorted union of both orbits
  Scalar jacobian;                     ///< det Jac(I1, I2) at P
  bool same_orbit;                     ///< the two orbits coincide
  bool disjoint;                       ///< the two orbits share no point

  /// On the vanishing locus of the Jacobian the level set is a single orbit
  /// (case i); off it, two disjoint orbits (case ii).
  bool on_locus() const { return jacobian.is_zero(); }
  bool dichotomy_holds() const { return on_locus() ? same_orbit : disjoint; }
};

LevelSetSplit split_level_set(MapId id, const Scalar& a, const Scalar& b);

/// Every (u, v) with u, v rationals of height <= max_height (numerator and
/// denominator both in 1..max_height) on which both integrals take the
/// values they take at P. Brute force; sorted.
std::vector<Point> enumerate_level_set(MapId id, const Scalar& a, const Scalar& b,
                                       unsigned max_height);

/// The index i in [0, m) with pi(x) = psi^i(P), or nullopt when x lies on
/// no sheet of S_P.
std::optional<unsigned> classify_sheet(MapId id, const Point& x, const Point& P);

/// Fiber C_(a,b) = { x : pi(x) = (a, b) } of the projection.
struct VarietyC {
  MapId id;
  Scalar a;
  Scalar b;

  bool contains(const Point& x) const;
};

/// dP3 sheet D_(a,b,c,d):
///   z4 = a z3 z5/z2,  z6 = b(a+1)/a * z2 z5/z1,  z3 = c z2,  z1 z5 = d z2^2.
struct VarietyD {
  DParams params;

  bool contains(const Point& z) const;
};

/// Parameters of the D sheet through z: pi(z), z3/z2 and z1 z5/z2^2.
DParams d_params_of(const Point& z);

/// Membership in the codimension-4 dP3 variety confining orbits on C_(1,1):
///   z4 = z3 z5/z2,  z6 = 2 z2 z5/z1,  z2^2 + z3^2 = c z2 z3,
///   2 z2^4 + z1^2 z5^2 = d z1 z2^2 z5.
bool on_base_confinement(const Scalar& c, const Scalar& d, const Point& z);

/// Exact point on a C fiber from free coordinates:
///   F0:  free (x1, x2); needs a/b and ab to be squares of rationals.
///   DP3: free (x1, x2, x3, x5).
Point sample_variety(const VarietyC& variety, std::span<const Scalar> free);

/// Exact point on a D sheet from free (z1, z2).
Point sample_variety(const VarietyD& variety, std::span<const Scalar> free);

}  // namespace qmaps
