#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmaps/error.hpp"
#include "qmaps/invariants.hpp"
#include "qmaps/maps.hpp"

namespace qmaps {

inline constexpr unsigned kDefaultQuiverSteps = 24;
inline constexpr unsigned kDefaultPeriodicSteps = 64;
inline constexpr unsigned kDefaultBurnIn = 8;

/// One step of an orbit.
struct OrbitRecord {
  unsigned n;
  Point point;
  /// Sheet index relative to P = pi(x0); only set for quiver-map orbits.
  std::optional<unsigned> sheet;
  /// Lifted integrals for phi, (I1, I2) for psi, (I1, I2) o Pi~ for phi_hat.
  IntegralValues integrals;
};

struct OrbitSummary {
  unsigned steps = 0;
  /// Least k > 0 with x_(j+k) == x_j for some stored j, if any revisit occurred.
  std::optional<unsigned> period_found;
  /// (n, min_i x_(n+m)[i] / x_n[i]) for every n with n + m <= steps.
  std::vector<std::pair<unsigned, Scalar>> min_component_growth;
  /// (n, max bit length over the coordinates of x_n).
  std::vector<std::pair<unsigned, std::size_t>> bitlength_series;
};

struct Orbit {
  MapId id;
  MapKind kind;
  std::vector<OrbitRecord> records;
  OrbitSummary summary;
};

/// Iterates `kind` from x0 for `steps` steps, recording every point.
Orbit run_orbit(MapId id, MapKind kind, const Point& x0, unsigned steps);

/// One exact closed-form-vs-iteration comparison.
struct ClosedFormCheck {
  unsigned n;
  bool matches;
  std::size_t bit_length;
};

struct ClosedFormReport {
  MapId id;
  Point x0;
  std::vector<ClosedFormCheck> checks;
};

/// Raised by validate_closed_form on the first disagreement.
class ClosedFormMismatch : public Error {
 public:
  ClosedFormMismatch(unsigned n, Point closed, Point iterated);

  unsigned n() const noexcept { return n_; }
  const Point& closed() const noexcept { return closed_; }
  const Point& iterated() const noexcept { return iterated_; }

 private:
  unsigned n_;
  Point closed_;
  Point iterated_;
};

/// Compares the explicit closed form with brute iteration at every
/// admissible n in 1..n_max (all n on C_(1,1), multiples of m elsewhere).
ClosedFormReport validate_closed_form(MapId id, const Point& x0, unsigned n_max);

/// True iff every coordinate strictly grows over each stride of m steps,
/// x_(n+m) > x_n, for n = burn_in, ..., burn_in + probes - 1. Only the
/// quiver map is accepted; the planar maps are periodic.
bool growth_probe(MapId id, MapKind kind, const Point& x0, unsigned burn_in = kDefaultBurnIn,
                  unsigned probes = 3);

/// The set of projections of an n-step phi orbit equals the first n + 1
/// points of the psi orbit of pi(x0).
bool projection_matches_periodic_orbit(MapId id, const Point& x0, unsigned steps);

}  // namespace qmaps
