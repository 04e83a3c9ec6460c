#pragma once

#include <string_view>
#include <utility>

#include "qmaps/jet.hpp"
#include "qmaps/point.hpp"

namespace qmaps {

/// Which of the three related maps of a family to apply.
enum class MapKind {
  quiver,    ///< the birational map phi on the N-dimensional orthant
  reduced,   ///< the reduced symplectic map on the plane
  periodic,  ///< the globally periodic map conjugate to `reduced`
};

std::string_view to_string(MapKind kind);

/// Accepts the CLI spellings "phi", "phihat" and "psi".
MapKind parse_map_kind(std::string_view text);

/// Arity of the points `kind` acts on.
constexpr std::size_t arity(MapId id, MapKind kind) {
  return kind == MapKind::quiver ? ambient_arity(id) : 2;
}

/// The birational map phi of the family (arity 4 for F0, 6 for DP3).
Point quiver_map(MapId id, const Point& x);

/// The reduced planar map phi_hat.
Point reduced_map(MapId id, const Point& p);

/// The globally periodic planar map psi.
Point periodic_map(MapId id, const Point& p);

/// Semiconjugacy Pi from the orthant to the plane with
/// reduce(quiver_map(x)) == reduced_map(reduce(x)).
Point reduce(MapId id, const Point& x);

/// Conjugacy Pi~ with conjugacy(reduced_map(p)) == periodic_map(conjugacy(p)).
Point conjugacy(MapId id, const Point& p);

/// Inverse of `conjugacy`. For F0 this needs sqrt(x/y), so it throws
/// NotPerfectSquare unless x/y is the square of a rational.
Point conjugacy_inverse(MapId id, const Point& p);

/// The composed semiconjugacy pi = Pi~ o Pi, evaluated from its direct
/// closed-form expression.
Point project(MapId id, const Point& x);

/// The same projection evaluated as conjugacy(reduce(x)).
Point project_composed(MapId id, const Point& x);

Point apply(MapId id, MapKind kind, const Point& p);

/// n-fold composition; n == 0 returns p.
template <class Map>
Point iterate_map(Map&& f, Point p, unsigned n) {
  for (unsigned i = 0; i < n; ++i) p = f(p);
  return p;
}

inline Point iterate(MapId id, MapKind kind, Point p, unsigned n) {
  return iterate_map([&](const Point& q) { return apply(id, kind, q); }, std::move(p), n);
}

/// Exact Jacobian of the reduced (or periodic) map at p via Jet2.
Jacobian2 jacobian(MapId id, MapKind kind, const Point& p);

}  // namespace qmaps
