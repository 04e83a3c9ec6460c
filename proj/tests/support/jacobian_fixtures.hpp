#pragma once

// Hand-differentiated Jacobians of the registered planar maps, used as the
// independent reference for the jet-based derivatives.

#include "qmaps/jet.hpp"
#include "qmaps/point.hpp"

namespace qmaps::fixtures {

inline Jacobian2 reduced_f0(const Scalar& x, const Scalar& y) {
  const Scalar s = 1 + y * y;
  const Scalar x2 = x * x;
  return {{{{-2 * y * s * s / (x2 * x), (x2 + 5 * pow(y, 4) + 6 * y * y + 1) / x2},
            {-s / x2, 2 * y / x}}}};
}

inline Jacobian2 reduced_dp3(const Scalar& x, const Scalar& y) {
  const Scalar xp1 = x + 1;
  return {{{{-y / (xp1 * xp1), xp1.inverse()},
            {-y * (2 * x * x + 3 * x * y + 3 * x + y + 1) / (x * x * pow(xp1, 3)),
             (x + 2 * y + 1) / (x * xp1 * xp1)}}}};
}

inline Jacobian2 periodic_f0(const Scalar& x, const Scalar&) {
  return {{{{0, 1}, {-(x * x).inverse(), 0}}}};
}

inline Jacobian2 periodic_dp3(const Scalar& x, const Scalar& y) {
  return {{{{0, 1}, {-y / (x * x), x.inverse()}}}};
}

inline Jacobian2 integrals_f0(const Scalar& x, const Scalar& y) {
  const Scalar x2 = x * x;
  const Scalar y2 = y * y;
  return {{{{1 - x2.inverse(), 1 - y2.inverse()},
            {y - (x2 * y).inverse() + y.inverse() - y / x2,
             x - (x * y2).inverse() - x / y2 + x.inverse()}}}};
}

inline Jacobian2 integrals_dp3(const Scalar& x, const Scalar& y) {
  const Scalar x2 = x * x;
  const Scalar y2 = y * y;
  const Scalar x3 = x2 * x;
  const Scalar y3 = y2 * y;
  return {{{{1 - x2.inverse() - y / x2 + y.inverse(), 1 - y2.inverse() + x.inverse() - x / y2},
            {2 * x - 2 / x3 + 2 * x / y2 - 2 * y2 / x3, 2 * y - 2 / y3 - 2 * x2 / y3 + 2 * y / x2}}}};
}

}  // namespace qmaps::fixtures
