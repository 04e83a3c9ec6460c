#include "qmaps/closed_form.hpp"

#include <array>
#include <string>

#include "qmaps/error.hpp"
#include "qmaps/maps.hpp"

namespace qmaps {

namespace {

long triangular(long n) { return n * (n - 1) / 2; }

Point scale(const Scalar& factor, std::vector<Scalar> coords) {
  for (auto& c : coords) c *= factor;
  return Point(std::move(coords));
}

bool on_base_fiber(MapId id, const Point& x) { return project(id, x) == Point{1, 1}; }

// Probes for the eigenrelation check; the relation is an identity of
// rational functions, so any positive points will do.
const std::vector<Point>& probes(std::size_t arity) {
  static const std::vector<Point> four{
      Point{1, 1, 1, 2}, Point{2, 3, 5, 7}, Point{Scalar(3, 2), Scalar(5, 7), Scalar(11, 3), 2}};
  static const std::vector<Point> six{
      Point{1, 1, 1, 1, 1, 2}, Point{2, 3, 5, 7, 11, 13},
      Point{Scalar(3, 2), Scalar(5, 7), Scalar(11, 3), 2, Scalar(1, 9), 4}};
  return arity == 4 ? four : six;
}

}  // namespace

ScaledDiagonalMap ScaledDiagonalMap::create(std::vector<Scalar> diagonal, Factor factor,
                                            Scalar ratio, std::span<const Point> probes) {
  ScaledDiagonalMap g(std::move(diagonal), std::move(factor), std::move(ratio));
  for (const auto& p : probes) {
    if (!g.eigenrelation_holds(p)) {
      throw InvalidArgument("G(g(x)) != c G(x) at " + p.str());
    }
  }
  return g;
}

Point ScaledDiagonalMap::operator()(const Point& x) const {
  require_arity(x, diagonal_.size());
  const Scalar g = factor_(x);
  std::vector<Scalar> out(x.arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g * diagonal_[i] * x[i];
  return Point(std::move(out));
}

Point ScaledDiagonalMap::power(const Point& x, unsigned n) const {
  require_arity(x, diagonal_.size());
  const long steps = n;
  const Scalar g = pow(ratio_, triangular(steps)) * pow(factor_(x), steps);
  std::vector<Scalar> out(x.arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g * pow(diagonal_[i], steps) * x[i];
  return Point(std::move(out));
}

bool ScaledDiagonalMap::eigenrelation_holds(const Point& x) const {
  return factor_((*this)(x)) == ratio_ * factor_(x);
}

ScaledDiagonalMap f0_base_restriction() {
  return ScaledDiagonalMap::create(
      {1, 2, 2, 4}, [](const Point& x) { return x[1] / x[0]; }, 2, probes(4));
}

ScaledDiagonalMap dp3_base_restriction_squared() {
  return ScaledDiagonalMap::create(
      {1, 2, 2, 4, 4, 8}, [](const Point& x) { return x[4] / x[0]; }, 4, probes(6));
}

ScaledDiagonalMap f0_return_map(const Scalar& a, const Scalar& b) {
  const KConstants k = k_constants(MapId::F0, a, b);
  const Scalar ratio = pow(k.k2 / k.k1, 4);
  return ScaledDiagonalMap::create(
      {k.k1, k.k2, k.k2, k.k2 * k.k2 / k.k1},
      [](const Point& x) { return pow(x[1] / x[0], 4); }, ratio, probes(4));
}

ScaledDiagonalMap dp3_return_map(const Scalar& a, const Scalar& b) {
  const KConstants k = k_constants(MapId::DP3, a, b);
  const Scalar k1sq = k.k1 * k.k1;
  return ScaledDiagonalMap::create(
      {1, k.k1, k.k1, k1sq, k1sq, k1sq * k.k1},
      [k2 = k.k2](const Point& x) { return k2 * pow(x[4] / x[0], 3); }, pow(k.k1, 6),
      probes(6));
}

KConstants k_constants(MapId id, const Scalar& a, const Scalar& b) {
  if (!a.is_positive() || !b.is_positive()) {
    throw InvalidArgument("k constants need positive (a, b)");
  }
  if (id == MapId::F0) {
    const Scalar u = 1 + a * b;
    const Scalar v = a + b;
    return {id, a, b, pow(u, 2) * pow(v, 4) / (pow(a, 3) * pow(b, 5)),
            pow(u, 4) * pow(v, 6) / (pow(a, 5) * pow(b, 7))};
  }
  const Scalar ap1 = a + 1;
  const Scalar bp1 = b + 1;
  const Scalar v = a + b;
  return {id, a, b, ap1 * bp1 * v / (a * b), pow(ap1, 3) * pow(bp1, 2) * v / (a * a)};
}

bool closed_form_admissible(MapId id, const Point& x, unsigned n) {
  return n % period(id) == 0 || on_base_fiber(id, x);
}

Point closed_form_f0(const Point& x, unsigned n) {
  require_arity(x, 4);
  const Point ab = project(MapId::F0, x);
  if (ab == Point{1, 1}) {
    // 2^(n(n-1)/2) (x2/x1)^n (x1, 2^n x2, 2^n x3, 4^n x4)
    const long s = n;
    const Scalar two_n = pow(Scalar(2), s);
    return scale(pow(Scalar(2), triangular(s)) * pow(x[1] / x[0], s),
                 {x[0], two_n * x[1], two_n * x[2], two_n * two_n * x[3]});
  }
  if (n % 4 != 0) {
    throw NotOnBaseVariety("F0 closed form off C_(1,1) needs n divisible by 4, got " +
                           std::to_string(n));
  }
  const long q = n / 4;
  const KConstants k = k_constants(MapId::F0, ab[0], ab[1]);
  const Scalar k1n = pow(k.k1, q);
  const Scalar k2n = pow(k.k2, q);
  const Scalar lead = pow(k.k2 / k.k1, 2 * q * (q - 1)) * pow(x[1] / x[0], 4 * q);
  return scale(lead, {k1n * x[0], k2n * x[1], k2n * x[2], k2n * k2n / k1n * x[3]});
}

Point closed_form_dp3(const Point& x, unsigned n) {
  require_arity(x, 6);
  const Point ab = project(MapId::DP3, x);
  if (ab == Point{1, 1}) {
    const long m = n / 2;
    const Scalar lambda = pow(Scalar(2), m - 1) * x[4] / x[0];
    const Scalar two_m = pow(Scalar(2), m);
    const Scalar four_m = two_m * two_m;
    const Scalar eight_m = four_m * two_m;
    if (n % 2 == 0) {
      // lambda^m (x1, 2^m x2, 2^m x3, 4^m x4, 4^m x5, 8^m x6)
      return scale(pow(lambda, m), {x[0], two_m * x[1], two_m * x[2], four_m * x[3],
                                    four_m * x[4], eight_m * x[5]});
    }
    // (2 lambda)^m (x3, 2^m x4, 2^m x5, 4^m x6, 4^m 2 x3 x5 / x1, 8^m 4 x3 x5^2 / (x1 x2))
    const Scalar x3x5 = x[2] * x[4];
    return scale(pow(2 * lambda, m),
                 {x[2], two_m * x[3], two_m * x[4], four_m * x[5], four_m * 2 * x3x5 / x[0],
                  eight_m * 4 * x3x5 * x[4] / (x[0] * x[1])});
  }
  if (n % 6 != 0) {
    throw NotOnBaseVariety("dP3 closed form off C_(1,1) needs n divisible by 6, got " +
                           std::to_string(n));
  }
  const long q = n / 6;
  const KConstants k = k_constants(MapId::DP3, ab[0], ab[1]);
  const Scalar k1n = pow(k.k1, q);
  const Scalar k1_2n = k1n * k1n;
  const Scalar lead = pow(k.k1, 3 * q * (q - 1)) * pow(k.k2, q) * pow(x[4] / x[0], 3 * q);
  return scale(lead, {x[0], k1n * x[1], k1n * x[2], k1_2n * x[3], k1_2n * x[4], k1_2n * k1n * x[5]});
}

Point closed_form(MapId id, const Point& x, unsigned n) {
  return id == MapId::F0 ? closed_form_f0(x, n) : closed_form_dp3(x, n);
}

Point closed_form_orbit(MapId id, const Point& x, unsigned n) {
  if (on_base_fiber(id, x)) return closed_form(id, x, n);
  const unsigned m = period(id);
  const Point block = closed_form(id, x, n - n % m);
  return iterate(id, MapKind::quiver, block, n % m);
}

Point restricted_map(MapId id, Restriction which, const Scalar& a, const Scalar& b,
                     const Point& x) {
  require_arity(x, ambient_arity(id));
  const Point target{a, b};
  if (which == Restriction::base && target != Point{1, 1}) {
    throw NotOnVariety("the base restriction lives on C_(1,1), not C_" + target.str());
  }
  if (project(id, x) != target) {
    throw NotOnVariety(x.str() + " is not on C_" + target.str());
  }
  if (which == Restriction::base) {
    if (id == MapId::F0) return f0_base_restriction()(x);
    // (x3, x4, x5, x6, 2 x3 x5 / x1, 4 x3 x5^2 / (x1 x2))
    const Scalar x3x5 = x[2] * x[4];
    return Point{x[2], x[3], x[4], x[5], 2 * x3x5 / x[0], 4 * x3x5 * x[4] / (x[0] * x[1])};
  }
  return id == MapId::F0 ? f0_return_map(a, b)(x) : dp3_return_map(a, b)(x);
}

}  // namespace qmaps
