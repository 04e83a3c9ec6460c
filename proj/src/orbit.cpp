#include "qmaps/orbit.hpp"

#include <algorithm>
#include <map>

#include "qmaps/closed_form.hpp"
#include "qmaps/error.hpp"

namespace qmaps {

namespace {

IntegralValues integrals_for(MapId id, MapKind kind, const Point& p) {
  switch (kind) {
    case MapKind::quiver:
      return lifted_integrals(id, p);
    case MapKind::reduced:
      return periodic_integrals(id, conjugacy(id, p));
    case MapKind::periodic:
      return periodic_integrals(id, p);
  }
  throw InvalidArgument("unknown map kind");
}

Scalar min_ratio(const Point& later, const Point& earlier) {
  Scalar best = later[0] / earlier[0];
  for (std::size_t i = 1; i < later.arity(); ++i) best = std::min(best, later[i] / earlier[i]);
  return best;
}

}  // namespace

Orbit run_orbit(MapId id, MapKind kind, const Point& x0, unsigned steps) {
  require_arity(x0, arity(id, kind));
  Orbit orbit{id, kind, {}, {}};
  orbit.records.reserve(steps + 1);
  orbit.summary.steps = steps;

  const std::optional<Point> base =
      kind == MapKind::quiver ? std::optional<Point>(project(id, x0)) : std::nullopt;
  // Exact revisit detection: first index at which each point was seen.
  std::map<Point, unsigned> seen;

  Point current = x0;
  for (unsigned n = 0; n <= steps; ++n) {
    if (n > 0) current = apply(id, kind, current);
    if (!orbit.summary.period_found) {
      const auto [it, inserted] = seen.emplace(current, n);
      if (!inserted) orbit.summary.period_found = n - it->second;
    }
    std::optional<unsigned> sheet;
    if (base) sheet = classify_sheet(id, current, *base);
    orbit.summary.bitlength_series.emplace_back(n, current.bit_length());
    orbit.records.push_back({n, current, sheet, integrals_for(id, kind, current)});
  }

  const unsigned m = period(id);
  for (unsigned n = 0; n + m <= steps; ++n) {
    orbit.summary.min_component_growth.emplace_back(
        n, min_ratio(orbit.records[n + m].point, orbit.records[n].point));
  }
  return orbit;
}

ClosedFormMismatch::ClosedFormMismatch(unsigned n, Point closed, Point iterated)
    : Error("closed form disagrees with iteration at n = " + std::to_string(n) +
            ": closed " + closed.str() + ", iterated " + iterated.str()),
      n_(n),
      closed_(std::move(closed)),
      iterated_(std::move(iterated)) {}

ClosedFormReport validate_closed_form(MapId id, const Point& x0, unsigned n_max) {
  require_arity(x0, ambient_arity(id));
  if (n_max < 1) throw InvalidArgument("validate_closed_form needs n_max >= 1");
  ClosedFormReport report{id, x0, {}};
  Point iterated = x0;
  for (unsigned n = 1; n <= n_max; ++n) {
    iterated = quiver_map(id, iterated);
    if (!closed_form_admissible(id, x0, n)) continue;
    Point closed = closed_form(id, x0, n);
    if (closed != iterated) throw ClosedFormMismatch(n, std::move(closed), iterated);
    report.checks.push_back({n, true, iterated.bit_length()});
  }
  return report;
}

bool growth_probe(MapId id, MapKind kind, const Point& x0, unsigned burn_in, unsigned probes) {
  if (kind != MapKind::quiver) {
    throw InvalidArgument("growth_probe: periodic maps have no growth");
  }
  if (probes < 2) throw InvalidArgument("growth_probe needs at least 2 probes");
  require_arity(x0, ambient_arity(id));
  const unsigned m = period(id);
  std::vector<Point> points{x0};
  const unsigned last = burn_in + probes - 1 + m;
  for (unsigned n = 1; n <= last; ++n) points.push_back(quiver_map(id, points.back()));
  for (unsigned n = burn_in; n < burn_in + probes; ++n) {
    for (std::size_t i = 0; i < x0.arity(); ++i) {
      if (!(points[n + m][i] > points[n][i])) return false;
    }
  }
  return true;
}

bool projection_matches_periodic_orbit(MapId id, const Point& x0, unsigned steps) {
  std::vector<Point> projected;
  std::vector<Point> periodic;
  Point x = x0;
  Point p = project(id, x0);
  for (unsigned n = 0; n <= steps; ++n) {
    if (n > 0) {
      x = quiver_map(id, x);
      p = periodic_map(id, p);
    }
    projected.push_back(project(id, x));
    periodic.push_back(p);
  }
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
  std::sort(periodic.begin(), periodic.end());
  periodic.erase(std::unique(periodic.begin(), periodic.end()), periodic.end());
  return projected == periodic;
}

}  // namespace qmaps
