#include "qmaps/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "qmaps/error.hpp"
#include "qmaps/formulas.hpp"
#include "qmaps/maps.hpp"

namespace qmaps {

namespace {

std::vector<Point> sorted_unique(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

void require_free_count(std::span<const Scalar> free, std::size_t count) {
  if (free.size() != count) throw ArityMismatch(count, free.size());
}

}  // namespace

IntegralValues periodic_integrals(MapId id, const Point& p) {
  require_arity(p, 2);
  auto [i1, i2] = formulas::integrals(id, formulas::Pair<Scalar>{p[0], p[1]});
  return {std::move(i1), std::move(i2)};
}

IntegralValues lifted_integrals(MapId id, const Point& x) {
  return periodic_integrals(id, project(id, x));
}

IntegralValues lifted_integrals_f0_expanded(const Point& x) {
  require_arity(x, 4);
  const Scalar& x1 = x[0];
  const Scalar& x2 = x[1];
  const Scalar& x3 = x[2];
  const Scalar& x4 = x[3];
  const Scalar s = x2 * x2 + x3 * x3;
  const Scalar t = x1 * x4;  // x1 x4
  const Scalar s2 = s * s;
  const Scalar t2 = t * t;
  const Scalar r = (x3 * x3) / (x2 * x2);
  return {(t2 + s2) / (x1 * x2 * x3 * x4), t2 / s2 + s2 / t2 + r + r.inverse()};
}

IntegralValues restricted_integrals_dp3(DP3Integrals which, const Point& x) {
  require_arity(x, 6);
  const Scalar& x1 = x[0];
  const Scalar& x2 = x[1];
  const Scalar& x3 = x[2];
  const Scalar& x5 = x[4];
  const Scalar ratio = x3 / x2;
  const Scalar w = x1 * x5 / (x2 * x2);
  if (which == DP3Integrals::period_return) return {ratio, w};
  return {ratio + ratio.inverse(), 2 * w.inverse() + w};
}

Scalar integral_jacobian_det(const Point& p) {
  require_arity(p, 2);
  const Scalar& x = p[0];
  const Scalar& y = p[1];
  const Scalar xy = x * y;
  return (x - y) * (xy - 1) * (x * x - 1) * (y * y - 1) / (xy * xy * xy);
}

Jacobian2 integral_jacobian(MapId id, const Point& p) {
  require_arity(p, 2);
  return jacobian_of(
      jet_eval([id](const auto& q) { return formulas::integrals(id, q); }, p[0], p[1]));
}

Point reflect(const Point& p) {
  require_arity(p, 2);
  return Point{p[1], p[0]};
}

DParams parameter_map(const DParams& q) {
  const auto& [a, b, c, d] = q;
  return {b, b / a, (a * c).inverse(), (a + 1) / (a * a * d)};
}

std::vector<Point> periodic_orbit(MapId id, const Point& p) {
  std::vector<Point> orbit{p};
  for (Point q = periodic_map(id, p); q != p; q = periodic_map(id, q)) orbit.push_back(q);
  return orbit;
}

std::vector<Point> level_set_octet(const Scalar& a, const Scalar& b) {
  const Scalar ai = a.inverse();
  const Scalar bi = b.inverse();
  return sorted_unique({Point{a, b}, Point{b, ai}, Point{ai, bi}, Point{bi, a}, Point{b, a},
                        Point{a, bi}, Point{bi, ai}, Point{ai, b}});
}

std::array<Scalar, 2> level_set_residuals(const Scalar& a, const Scalar& b, const Scalar& u,
                                          const Scalar& v) {
  const Scalar c1 = a + b + a.inverse() + b.inverse();
  const Scalar ab = a * b;
  const Scalar c2 = ab + ab.inverse() + a / b + b / a;
  const Scalar uv = u * v;
  return {u * uv + uv * v + u + v - c1 * uv, uv * uv + u * u + v * v + 1 - c2 * uv};
}

LevelSetSplit split_level_set(MapId id, const Scalar& a, const Scalar& b) {
  const Point P{a, b};
  LevelSetSplit split{P, periodic_orbit(id, P), periodic_orbit(id, reflect(P)), {}, 0, false,
                      false};
  std::vector<Point> all = split.orbit;
  all.insert(all.end(), split.reflected_orbit.begin(), split.reflected_orbit.end());
  split.union_set = sorted_unique(std::move(all));
  split.jacobian =
      id == MapId::F0 ? integral_jacobian_det(P) : integral_jacobian(id, P).det();
  const auto lhs = sorted_unique(split.orbit);
  const auto rhs = sorted_unique(split.reflected_orbit);
  split.same_orbit = lhs == rhs;
  std::vector<Point> common;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(common));
  split.disjoint = common.empty();
  return split;
}

std::vector<Point> enumerate_level_set(MapId id, const Scalar& a, const Scalar& b,
                                       unsigned max_height) {
  std::vector<Scalar> values;
  for (unsigned p = 1; p <= max_height; ++p) {
    for (unsigned q = 1; q <= max_height; ++q) {
      if (std::gcd(p, q) == 1) values.emplace_back(static_cast<long>(p), static_cast<long>(q));
    }
  }
  std::vector<Point> found;
  const IntegralValues target = periodic_integrals(id, Point{a, b});
  for (const auto& u : values) {
    for (const auto& v : values) {
      if (id == MapId::F0) {
        const auto r = level_set_residuals(a, b, u, v);
        if (r[0].is_zero() && r[1].is_zero()) found.push_back(Point{u, v});
      } else if (periodic_integrals(id, Point{u, v}) == target) {
        found.push_back(Point{u, v});
      }
    }
  }
  return sorted_unique(std::move(found));
}

std::optional<unsigned> classify_sheet(MapId id, const Point& x, const Point& P) {
  const Point image = project(id, x);
  Point sheet = P;
  for (unsigned i = 0; i < period(id); ++i) {
    if (image == sheet) return i;
    sheet = periodic_map(id, sheet);
  }
  return std::nullopt;
}

bool VarietyC::contains(const Point& x) const {
  return x.arity() == ambient_arity(id) && project(id, x) == Point{a, b};
}

bool VarietyD::contains(const Point& z) const {
  if (z.arity() != 6) return false;
  const auto& [a, b, c, d] = params;
  return z[3] == a * z[2] * z[4] / z[1] && z[5] == b * (a + 1) / a * z[1] * z[4] / z[0] &&
         z[2] == c * z[1] && z[0] * z[4] == d * z[1] * z[1];
}

DParams d_params_of(const Point& z) {
  require_arity(z, 6);
  const Point ab = project(MapId::DP3, z);
  return {ab[0], ab[1], z[2] / z[1], z[0] * z[4] / (z[1] * z[1])};
}

bool on_base_confinement(const Scalar& c, const Scalar& d, const Point& z) {
  require_arity(z, 6);
  const Scalar& z1 = z[0];
  const Scalar& z2 = z[1];
  const Scalar& z3 = z[2];
  const Scalar& z5 = z[4];
  const Scalar z2sq = z2 * z2;
  return z[3] == z3 * z5 / z2 && z[5] == 2 * z2 * z5 / z1 && z2sq + z3 * z3 == c * z2 * z3 &&
         2 * z2sq * z2sq + z1 * z1 * z5 * z5 == d * z1 * z2sq * z5;
}

Point sample_variety(const VarietyC& variety, std::span<const Scalar> free) {
  const Scalar& a = variety.a;
  const Scalar& b = variety.b;
  if (!a.is_positive() || !b.is_positive()) throw InvalidArgument("variety needs positive (a, b)");
  if (variety.id == MapId::F0) {
    require_free_count(free, 2);
    // x3 = sqrt(a/b) x2,  x2^2 + x3^2 = sqrt(ab) x1 x4
    const Scalar& x1 = free[0];
    const Scalar& x2 = free[1];
    const Scalar x3 = sqrt_exact(a / b) * x2;
    const Scalar x4 = (x2 * x2 + x3 * x3) / (sqrt_exact(a * b) * x1);
    return Point{x1, x2, x3, x4};
  }
  require_free_count(free, 4);
  const Scalar& x1 = free[0];
  const Scalar& x2 = free[1];
  const Scalar& x3 = free[2];
  const Scalar& x5 = free[3];
  return Point{x1, x2, x3, a * x3 * x5 / x2, x5, b * (a + 1) / a * x2 * x5 / x1};
}

Point sample_variety(const VarietyD& variety, std::span<const Scalar> free) {
  require_free_count(free, 2);
  const auto& [a, b, c, d] = variety.params;
  const Scalar& z1 = free[0];
  const Scalar& z2 = free[1];
  const Scalar z3 = c * z2;
  const Scalar z5 = d * z2 * z2 / z1;
  return Point{z1, z2, z3, a * z3 * z5 / z2, z5, b * (a + 1) / a * z2 * z5 / z1};
}

}  // namespace qmaps
