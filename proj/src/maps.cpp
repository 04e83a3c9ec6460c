#include "qmaps/maps.hpp"

#include <string>

#include "qmaps/error.hpp"
#include "qmaps/formulas.hpp"

namespace qmaps {

namespace {

formulas::Pair<Scalar> as_pair(const Point& p) {
  require_arity(p, 2);
  return {p[0], p[1]};
}

Point from_pair(formulas::Pair<Scalar>&& q) { return Point{std::move(q[0]), std::move(q[1])}; }

Point quiver_f0(const Point& x) {
  require_arity(x, 4);
  const Scalar& x1 = x[0];
  const Scalar& x2 = x[1];
  const Scalar& x3 = x[2];
  const Scalar& x4 = x[3];
  const Scalar s = x2 * x2 + x3 * x3;
  const Scalar x1sq = x1 * x1;
  return Point{x3, x4, s / x1, (x1sq * x4 * x4 + s * s) / (x1sq * x2)};
}

Point quiver_dp3(const Point& x) {
  require_arity(x, 6);
  const Scalar& x1 = x[0];
  const Scalar& x2 = x[1];
  const Scalar& x3 = x[2];
  const Scalar& x4 = x[3];
  const Scalar& x5 = x[4];
  const Scalar& x6 = x[5];
  return Point{x3,
               x4,
               x5,
               x6,
               (x2 * x4 + x3 * x5) / x1,
               (x1 * x4 * x6 + x2 * x4 * x5 + x3 * x5 * x5) / (x1 * x2)};
}

}  // namespace

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::quiver:
      return "phi";
    case MapKind::reduced:
      return "phihat";
    case MapKind::periodic:
      return "psi";
  }
  return "?";
}

MapKind parse_map_kind(std::string_view text) {
  if (text == "phi") return MapKind::quiver;
  if (text == "phihat") return MapKind::reduced;
  if (text == "psi") return MapKind::periodic;
  throw ParseError("unknown map kind '" + std::string(text) + "' (expected phi, phihat or psi)");
}

Point quiver_map(MapId id, const Point& x) {
  return id == MapId::F0 ? quiver_f0(x) : quiver_dp3(x);
}

Point reduced_map(MapId id, const Point& p) { return from_pair(formulas::reduced(id, as_pair(p))); }

Point periodic_map(MapId id, const Point& p) {
  return from_pair(formulas::periodic(id, as_pair(p)));
}

Point reduce(MapId id, const Point& x) {
  require_arity(x, ambient_arity(id));
  if (id == MapId::F0) {
    // (x1 x4 / x2^2, x3 / x2)
    return Point{x[0] * x[3] / (x[1] * x[1]), x[2] / x[1]};
  }
  // (x2 x4 / (x3 x5), x1 x4 x6 / (x3 x5^2))
  const Scalar x3x5 = x[2] * x[4];
  return Point{x[1] * x[3] / x3x5, x[0] * x[3] * x[5] / (x3x5 * x[4])};
}

Point conjugacy(MapId id, const Point& p) {
  return from_pair(formulas::conjugacy(id, as_pair(p)));
}

Point conjugacy_inverse(MapId id, const Point& p) {
  require_arity(p, 2);
  const Scalar& x = p[0];
  const Scalar& y = p[1];
  if (id == MapId::DP3) return Point{x, (1 + x) * y};
  const Scalar root = sqrt_exact(x / y);  // sqrt(x/y); sqrt(y/x) is its inverse
  return Point{(x + y) / (y * y) / root, root};
}

Point project(MapId id, const Point& x) {
  require_arity(x, ambient_arity(id));
  if (id == MapId::F0) {
    const Scalar& x1 = x[0];
    const Scalar& x2 = x[1];
    const Scalar& x3 = x[2];
    const Scalar& x4 = x[3];
    const Scalar s = x2 * x2 + x3 * x3;
    return Point{x3 * s / (x1 * x2 * x4), x2 * s / (x1 * x3 * x4)};
  }
  const Scalar& x1 = x[0];
  const Scalar& x2 = x[1];
  const Scalar& x3 = x[2];
  const Scalar& x4 = x[3];
  const Scalar& x5 = x[4];
  const Scalar& x6 = x[5];
  return Point{x2 * x4 / (x3 * x5), x1 * x4 * x6 / (x5 * (x2 * x4 + x3 * x5))};
}

Point project_composed(MapId id, const Point& x) { return conjugacy(id, reduce(id, x)); }

Point apply(MapId id, MapKind kind, const Point& p) {
  switch (kind) {
    case MapKind::quiver:
      return quiver_map(id, p);
    case MapKind::reduced:
      return reduced_map(id, p);
    case MapKind::periodic:
      return periodic_map(id, p);
  }
  throw InvalidArgument("unknown map kind");
}

Jacobian2 jacobian(MapId id, MapKind kind, const Point& p) {
  require_arity(p, 2);
  switch (kind) {
    case MapKind::reduced:
      return jacobian_of(
          jet_eval([id](const auto& q) { return formulas::reduced(id, q); }, p[0], p[1]));
    case MapKind::periodic:
      return jacobian_of(
          jet_eval([id](const auto& q) { return formulas::periodic(id, q); }, p[0], p[1]));
    case MapKind::quiver:
      break;
  }
  throw InvalidArgument("jacobian is only available for the planar maps");
}

}  // namespace qmaps
