#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qmaps/point.hpp"

namespace qmaps {

/// A map of the form g(x) = G(x) * D * x with D a constant diagonal and a
/// scalar factor G satisfying G(g(x)) = c * G(x). For such maps the n-th
/// iterate has the closed form c^(n(n-1)/2) * G(x)^n * D^n * x.
class ScaledDiagonalMap {
 public:
  using Factor = std::function<Scalar(const Point&)>;

  /// Builds the map and checks the eigenrelation G(g(x)) == c G(x) exactly
  /// at every probe point; throws InvalidArgument if it fails anywhere.
  static ScaledDiagonalMap create(std::vector<Scalar> diagonal, Factor factor, Scalar ratio,
                                  std::span<const Point> probes);

  Point operator()(const Point& x) const;

  /// Closed-form n-th iterate.
  Point power(const Point& x, unsigned n) const;

  bool eigenrelation_holds(const Point& x) const;

  const std::vector<Scalar>& diagonal() const noexcept { return diagonal_; }
  const Scalar& ratio() const noexcept { return ratio_; }
  Scalar factor(const Point& x) const { return factor_(x); }

 private:
  ScaledDiagonalMap(std::vector<Scalar> diagonal, Factor factor, Scalar ratio)
      : diagonal_(std::move(diagonal)), factor_(std::move(factor)), ratio_(std::move(ratio)) {}

  std::vector<Scalar> diagonal_;
  Factor factor_;
  Scalar ratio_;
};

/// Free-function spelling of ScaledDiagonalMap::power.
inline Point scaled_diagonal_power(const ScaledDiagonalMap& g, const Point& x, unsigned n) {
  return g.power(x, n);
}

/// F0 restricted to C_(1,1): (x2/x1) * diag(1, 2, 2, 4) * x, ratio 2.
ScaledDiagonalMap f0_base_restriction();

/// Square of dP3 restricted to C_(1,1): (x5/x1) * diag(1, 2, 2, 4, 4, 8) * x, ratio 4.
ScaledDiagonalMap dp3_base_restriction_squared();

/// phi^4 restricted to the F0 fiber over (a, b).
ScaledDiagonalMap f0_return_map(const Scalar& a, const Scalar& b);

/// phi^6 restricted to the dP3 fiber over (a, b).
ScaledDiagonalMap dp3_return_map(const Scalar& a, const Scalar& b);

/// Constants governing the return map phi^m on the fiber over (a, b).
struct KConstants {
  MapId id;
  Scalar a;
  Scalar b;
  Scalar k1;
  Scalar k2;
};

///   F0:  k1 = (1+ab)^2 (a+b)^4 / (a^3 b^5),  k2 = (1+ab)^4 (a+b)^6 / (a^5 b^7)
///   DP3: k1 = (a+1)(b+1)(a+b) / (ab),        k2 = (a+1)^3 (b+1)^2 (a+b) / a^2
KConstants k_constants(MapId id, const Scalar& a, const Scalar& b);

/// Explicit phi^n for F0. On C_(1,1) every n is allowed; elsewhere n must
/// be a multiple of 4 (throws NotOnBaseVariety otherwise).
Point closed_form_f0(const Point& x, unsigned n);

/// Explicit phi^n for dP3. On C_(1,1) every n is allowed (even and odd
/// formulas); elsewhere n must be a multiple of 6.
Point closed_form_dp3(const Point& x, unsigned n);

/// Dispatches to closed_form_f0 / closed_form_dp3.
Point closed_form(MapId id, const Point& x, unsigned n);

/// phi^n for any n: the closed form for the largest admissible step count
/// followed by at most m-1 direct applications of phi.
Point closed_form_orbit(MapId id, const Point& x, unsigned n);

/// True when the step count n is covered by the explicit formula at x.
bool closed_form_admissible(MapId id, const Point& x, unsigned n);

enum class Restriction {
  base,           ///< phi on C_(1,1)
  period_return,  ///< phi^m on C_(a,b)
};

/// Evaluates the displayed restricted map at x after checking that x lies
/// on C_(a,b) (and that (a,b) = (1,1) for Restriction::base); throws
/// NotOnVariety otherwise.
Point restricted_map(MapId id, Restriction which, const Scalar& a, const Scalar& b,
                     const Point& x);

}  // namespace qmaps
