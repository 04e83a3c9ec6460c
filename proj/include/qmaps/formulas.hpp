#pragma once

// Planar rational maps written once over a generic field type T, so the
// same expression evaluates on Scalar (values) and on Jet2 (exact
// Jacobians). T must support + - * / and construction from long.

#include <array>

#include "qmaps/point.hpp"

namespace qmaps::formulas {

template <class T>
using Pair = std::array<T, 2>;

template <class T>
Pair<T> identity(const Pair<T>& p) {
  return p;
}

/// Reduced symplectic map of F0.
template <class T>
Pair<T> reduced_f0(const Pair<T>& p) {
  const T& x = p[0];
  const T& y = p[1];
  const T s = T(1) + y * y;
  return {y * (T(1) + s * s / (x * x)), s / x};
}

/// Reduced symplectic map of dP3.
template <class T>
Pair<T> reduced_dp3(const Pair<T>& p) {
  const T& x = p[0];
  const T& y = p[1];
  const T xp1 = T(1) + x;
  return {y / xp1, y * (xp1 + y) / (x * xp1 * xp1)};
}

/// Globally 4-periodic map (x, y) -> (y, 1/x).
template <class T>
Pair<T> periodic_f0(const Pair<T>& p) {
  return {p[1], T(1) / p[0]};
}

/// Globally 6-periodic map (x, y) -> (y, y/x).
template <class T>
Pair<T> periodic_dp3(const Pair<T>& p) {
  return {p[1], p[1] / p[0]};
}

/// Conjugacy carrying the reduced F0 map onto periodic_f0.
template <class T>
Pair<T> conjugacy_f0(const Pair<T>& p) {
  const T& x = p[0];
  const T& y = p[1];
  const T s = T(1) + y * y;
  return {y * s / x, s / (x * y)};
}

/// Conjugacy carrying the reduced dP3 map onto periodic_dp3.
template <class T>
Pair<T> conjugacy_dp3(const Pair<T>& p) {
  return {p[0], p[1] / (T(1) + p[0])};
}

/// First integrals of periodic_f0:
///   I1 = x + y + 1/x + 1/y,  I2 = xy + 1/(xy) + x/y + y/x.
template <class T>
Pair<T> integrals_f0(const Pair<T>& p) {
  const T& x = p[0];
  const T& y = p[1];
  const T xy = x * y;
  return {x + y + T(1) / x + T(1) / y, xy + T(1) / xy + x / y + y / x};
}

/// First integrals of periodic_dp3:
///   I1 = x + y + 1/x + 1/y + y/x + x/y,
///   I2 = x^2 + y^2 + 1/x^2 + 1/y^2 + x^2/y^2 + y^2/x^2.
template <class T>
Pair<T> integrals_dp3(const Pair<T>& p) {
  const T& x = p[0];
  const T& y = p[1];
  const T x2 = x * x;
  const T y2 = y * y;
  return {x + y + T(1) / x + T(1) / y + y / x + x / y,
          x2 + y2 + T(1) / x2 + T(1) / y2 + x2 / y2 + y2 / x2};
}

template <class T>
Pair<T> reduced(MapId id, const Pair<T>& p) {
  return id == MapId::F0 ? reduced_f0(p) : reduced_dp3(p);
}

template <class T>
Pair<T> periodic(MapId id, const Pair<T>& p) {
  return id == MapId::F0 ? periodic_f0(p) : periodic_dp3(p);
}

template <class T>
Pair<T> conjugacy(MapId id, const Pair<T>& p) {
  return id == MapId::F0 ? conjugacy_f0(p) : conjugacy_dp3(p);
}

template <class T>
Pair<T> integrals(MapId id, const Pair<T>& p) {
  return id == MapId::F0 ? integrals_f0(p) : integrals_dp3(p);
}

}  // namespace qmaps::formulas
