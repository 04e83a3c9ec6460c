#include <gtest/gtest.h>

#include "qmaps/error.hpp"
#include "qmaps/orbit.hpp"
#include "qmaps/sampling.hpp"

using qmaps::MapId;
using qmaps::MapKind;
using qmaps::Point;
using qmaps::Scalar;

TEST(RunOrbit, PeriodicMapHasPeriodSix) {
  const auto orbit = qmaps::run_orbit(MapId::DP3, MapKind::periodic, {2, 3}, 6);
  EXPECT_EQ(orbit.records.size(), 7U);
  EXPECT_EQ(orbit.summary.period_found, 6U);
  EXPECT_EQ(orbit.records.back().point, orbit.records.front().point);
  EXPECT_FALSE(orbit.records.front().sheet.has_value());
}

TEST(RunOrbit, ReducedFixedPoint) {
  const auto orbit = qmaps::run_orbit(MapId::F0, MapKind::reduced, {2, 1}, 4);
  for (const auto& r : orbit.records) EXPECT_EQ(r.point, (Point{2, 1}));
  EXPECT_EQ(orbit.summary.period_found, 1U);
}

TEST(RunOrbit, QuiverOrbitOverFixedProjection) {
  const auto orbit = qmaps::run_orbit(MapId::F0, MapKind::quiver, {1, 1, 1, 2}, 8);
  EXPECT_FALSE(orbit.summary.period_found.has_value());
  for (const auto& r : orbit.records) EXPECT_EQ(r.sheet, 0U);
  EXPECT_EQ(orbit.records[2].point, (Point{2, 8, 8, 64}));
  EXPECT_EQ(orbit.summary.bitlength_series.size(), 9U);
  EXPECT_EQ(orbit.summary.min_component_growth.size(), 5U);
}

TEST(RunOrbit, ZeroSteps) {
  const auto orbit = qmaps::run_orbit(MapId::F0, MapKind::quiver, {1, 2, 3, 4}, 0);
  ASSERT_EQ(orbit.records.size(), 1U);
  EXPECT_EQ(orbit.records[0].n, 0U);
  EXPECT_EQ(orbit.records[0].sheet, 0U);
  EXPECT_FALSE(orbit.summary.period_found.has_value());
}

TEST(RunOrbit, ArityMismatch) {
  EXPECT_THROW(qmaps::run_orbit(MapId::DP3, MapKind::quiver, {1, 2, 3, 4}, 3),
               qmaps::ArityMismatch);
}

TEST(ValidateClosedForm, Examples) {
  const auto f0 = qmaps::validate_closed_form(MapId::F0, {1, 1, 1, 2}, 8);
  EXPECT_EQ(f0.checks.size(), 8U);
  const std::vector<Scalar> free{Scalar(2), Scalar(3, 5)};
  const Point x = qmaps::sample_variety(qmaps::VarietyC{MapId::F0, 4, 1}, free);
  const auto general = qmaps::validate_closed_form(MapId::F0, x, 8);
  ASSERT_EQ(general.checks.size(), 2U);
  EXPECT_EQ(general.checks[0].n, 4U);
  EXPECT_EQ(general.checks[1].n, 8U);
  const auto dp3 = qmaps::validate_closed_form(MapId::DP3, {1, 1, 1, 1, 1, 2}, 7);
  EXPECT_EQ(dp3.checks.size(), 7U);
  for (const auto& c : dp3.checks) EXPECT_TRUE(c.matches);
  EXPECT_THROW(qmaps::validate_closed_form(MapId::F0, {1, 1, 1, 2}, 0), qmaps::InvalidArgument);
}

TEST(GrowthProbe, Examples) {
  EXPECT_TRUE(qmaps::growth_probe(MapId::F0, MapKind::quiver, {1, 1, 1, 2}, 8, 3));
  EXPECT_TRUE(qmaps::growth_probe(MapId::DP3, MapKind::quiver, {1, 1, 1, 1, 1, 2}, 8, 3));
  EXPECT_THROW(qmaps::growth_probe(MapId::F0, MapKind::periodic, {2, 3}), qmaps::InvalidArgument);
  EXPECT_THROW(qmaps::growth_probe(MapId::F0, MapKind::quiver, {1, 1, 1, 2}, 8, 1),
               qmaps::InvalidArgument);
}

TEST(OrbitProperty, RecordsCarryConstantIntegralsAndCyclingSheets) {
  qmaps::Sampler rng(51, 20);
  for (MapId id : {MapId::F0, MapId::DP3}) {
    const unsigned m = qmaps::period(id);
    for (int i = 0; i < 10; ++i) {
      const auto orbit =
          qmaps::run_orbit(id, MapKind::quiver, rng.point(qmaps::ambient_arity(id)), 12);
      for (const auto& r : orbit.records) {
        ASSERT_EQ(r.integrals, orbit.records[0].integrals);
        ASSERT_TRUE(r.sheet.has_value());
        // P = pi(x0) may have a shorter psi orbit only at the fixed point.
        if (orbit.records[0].integrals != qmaps::periodic_integrals(id, {1, 1})) {
          ASSERT_EQ(*r.sheet, r.n % m);
        }
      }
      ASSERT_FALSE(orbit.summary.period_found.has_value());
    }
  }
}

TEST(OrbitProperty, PlanarOrbitsHavePeriodOneOrM) {
  qmaps::Sampler rng(52);
  for (MapId id : {MapId::F0, MapId::DP3}) {
    const unsigned m = qmaps::period(id);
    for (int i = 0; i < 50; ++i) {
      const auto psi = qmaps::run_orbit(id, MapKind::periodic, rng.point_other_than({1, 1}), 12);
      ASSERT_EQ(psi.summary.period_found, m);
      const auto hat = qmaps::run_orbit(id, MapKind::reduced, rng.point(2), 12);
      ASSERT_TRUE(hat.summary.period_found == 1U || hat.summary.period_found == m);
      for (const auto& r : hat.records) ASSERT_EQ(r.integrals, hat.records[0].integrals);
    }
  }
}

TEST(OrbitProperty, ProjectionsTraceThePeriodicOrbit) {
  qmaps::Sampler rng(53, 20);
  for (MapId id : {MapId::F0, MapId::DP3}) {
    for (int i = 0; i < 10; ++i) {
      ASSERT_TRUE(
          qmaps::projection_matches_periodic_orbit(id, rng.point(qmaps::ambient_arity(id)), 10));
    }
  }
}

TEST(OrbitProperty, GrowthAfterBurnIn) {
  qmaps::Sampler rng(54, 20);
  for (MapId id : {MapId::F0, MapId::DP3}) {
    for (int i = 0; i < 10; ++i) {
      ASSERT_TRUE(qmaps::growth_probe(id, MapKind::quiver, rng.point(qmaps::ambient_arity(id))));
    }
  }
}
