#include <gtest/gtest.h>

#include <vector>

#include "qmaps/closed_form.hpp"
#include "qmaps/error.hpp"
#include "qmaps/invariants.hpp"
#include "qmaps/maps.hpp"
#include "qmaps/sampling.hpp"

using qmaps::MapId;
using qmaps::MapKind;
using qmaps::Point;
using qmaps::Scalar;

namespace {

Point brute(MapId id, const Point& x, unsigned n) {
  return qmaps::iterate(id, MapKind::quiver, x, n);
}

Point base_point(MapId id, qmaps::Sampler& rng) {
  const unsigned free_count = id == MapId::F0 ? 2 : 4;
  std::vector<Scalar> free;
  for (unsigned i = 0; i < free_count; ++i) free.push_back(rng.rational(20));
  return qmaps::sample_variety(qmaps::VarietyC{id, 1, 1}, free);
}

}  // namespace

TEST(ScaledDiagonalMap, PowerExamples) {
  const auto g = qmaps::f0_base_restriction();
  EXPECT_EQ(g.power({1, 1, 1, 2}, 0), (Point{1, 1, 1, 2}));
  EXPECT_EQ(g.power({1, 1, 1, 2}, 2), (Point{2, 8, 8, 64}));
  const auto h = qmaps::dp3_base_restriction_squared();
  EXPECT_EQ(h.power({1, 1, 1, 1, 1, 2}, 1), (Point{1, 2, 2, 4, 4, 16}));
  EXPECT_EQ(qmaps::scaled_diagonal_power(h, {1, 1, 1, 1, 1, 2}, 0), (Point{1, 1, 1, 1, 1, 2}));
}

TEST(ScaledDiagonalMap, RejectsFalseEigenrelation) {
  const Point probe{1, 2, 3, 4};
  const auto wrong_ratio = [&] {
    qmaps::ScaledDiagonalMap::create({1, 2, 2, 4}, [](const Point& x) { return x[1] / x[0]; },
                                     Scalar(3), std::span<const Point>(&probe, 1));
  };
  EXPECT_THROW(wrong_ratio(), qmaps::InvalidArgument);
}

// Generic engine: power(x, n) agrees with n applications of operator().
TEST(ScaledDiagonalMapProperty, PowerMatchesIteration) {
  qmaps::Sampler rng(31, 20);
  const auto g = qmaps::f0_return_map(4, 1);
  const auto h = qmaps::dp3_return_map(Scalar(2, 3), 5);
  for (int i = 0; i < 30; ++i) {
    const Point x = rng.point(4);
    const Point z = rng.point(6);
    Point gx = x;
    Point hz = z;
    for (unsigned n = 0; n <= 4; ++n) {
      ASSERT_EQ(g.power(x, n), gx);
      ASSERT_EQ(h.power(z, n), hz);
      gx = g(gx);
      hz = h(hz);
    }
  }
}

TEST(KConstants, Examples) {
  auto k = qmaps::k_constants(MapId::F0, 1, 1);
  EXPECT_EQ(k.k1, Scalar(64));
  EXPECT_EQ(k.k2, Scalar(1024));
  k = qmaps::k_constants(MapId::F0, 2, 1);
  EXPECT_EQ(k.k1, Scalar(729, 8));
  EXPECT_EQ(k.k2, Scalar(59049, 32));
  k = qmaps::k_constants(MapId::DP3, 1, 1);
  EXPECT_EQ(k.k1, Scalar(8));
  EXPECT_EQ(k.k2, Scalar(64));
  k = qmaps::k_constants(MapId::DP3, 2, 1);
  EXPECT_EQ(k.k1, Scalar(9));
  EXPECT_EQ(k.k2, Scalar(81));
  EXPECT_THROW(qmaps::k_constants(MapId::F0, 0, 1), qmaps::InvalidArgument);
}

TEST(KConstantsProperty, ExceedThresholds) {
  qmaps::Sampler rng(32);
  for (int i = 0; i < 500; ++i) {
    const Point p = rng.point_other_than(Point{1, 1});
    const auto f = qmaps::k_constants(MapId::F0, p[0], p[1]);
    ASSERT_GT(f.k1, Scalar(1));
    ASSERT_GT(f.k2, Scalar(1));
    ASSERT_GT(f.k2 / f.k1, Scalar(1));
    const auto d = qmaps::k_constants(MapId::DP3, p[0], p[1]);
    ASSERT_GT(d.k1, Scalar(2));
    ASSERT_GT(d.k2, Scalar(3));
  }
}

TEST(ClosedFormF0, Examples) {
  EXPECT_EQ(qmaps::closed_form_f0({1, 1, 1, 2}, 1), (Point{1, 2, 2, 8}));
  EXPECT_EQ(qmaps::closed_form_f0({1, 1, 1, 2}, 2), (Point{2, 8, 8, 64}));
  EXPECT_EQ(qmaps::closed_form_f0({1, 1, 1, 2}, 0), (Point{1, 1, 1, 2}));
}

TEST(ClosedFormDP3, Examples) {
  EXPECT_EQ(qmaps::closed_form_dp3({1, 1, 1, 1, 1, 2}, 2), (Point{1, 2, 2, 4, 4, 16}));
  EXPECT_EQ(qmaps::closed_form_dp3({1, 1, 1, 1, 1, 2}, 1), (Point{1, 1, 1, 2, 2, 4}));
  EXPECT_EQ(qmaps::closed_form_dp3({1, 1, 1, 1, 1, 2}, 3), (Point{2, 4, 4, 16, 16, 64}));
}

TEST(ClosedForm, OffBaseRequiresMultipleOfPeriod) {
  const Point x{1, 2, 3, 4};
  ASSERT_NE(qmaps::project(MapId::F0, x), (Point{1, 1}));
  EXPECT_FALSE(qmaps::closed_form_admissible(MapId::F0, x, 3));
  EXPECT_TRUE(qmaps::closed_form_admissible(MapId::F0, x, 8));
  EXPECT_THROW(qmaps::closed_form(MapId::F0, x, 3), qmaps::NotOnBaseVariety);
  EXPECT_THROW(qmaps::closed_form(MapId::DP3, {1, 2, 3, 4, 5, 6}, 4), qmaps::NotOnBaseVariety);
}

TEST(ClosedForm, GeneralFibersMatchIteration) {
  const Point x{1, 2, 3, 4};
  EXPECT_EQ(qmaps::closed_form(MapId::F0, x, 8), brute(MapId::F0, x, 8));
  const Point z{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(qmaps::closed_form(MapId::DP3, z, 12), brute(MapId::DP3, z, 12));
  EXPECT_EQ(qmaps::closed_form_orbit(MapId::DP3, z, 9), brute(MapId::DP3, z, 9));
}

TEST(ClosedForm, PeriodCaseAgreesWithBaseCaseAtOneOne) {
  qmaps::Sampler rng(33);
  for (int i = 0; i < 10; ++i) {
    const Point x = base_point(MapId::F0, rng);
    const auto g = qmaps::f0_return_map(1, 1);
    for (unsigned n = 1; n <= 3; ++n) {
      ASSERT_EQ(g.power(x, n), qmaps::closed_form_f0(x, 4 * n));
    }
    const Point z = base_point(MapId::DP3, rng);
    const auto h = qmaps::dp3_return_map(1, 1);
    for (unsigned n = 1; n <= 3; ++n) {
      ASSERT_EQ(h.power(z, n), qmaps::closed_form_dp3(z, 6 * n));
    }
  }
}

TEST(RestrictedMap, Examples) {
  using qmaps::Restriction;
  EXPECT_EQ(qmaps::restricted_map(MapId::F0, Restriction::base, 1, 1, {1, 1, 1, 2}),
            (Point{1, 2, 2, 8}));
  EXPECT_EQ(qmaps::restricted_map(MapId::F0, Restriction::period_return, 1, 1, {1, 1, 1, 2}),
            brute(MapId::F0, {1, 1, 1, 2}, 4));
  EXPECT_EQ(
      qmaps::restricted_map(MapId::DP3, Restriction::period_return, 1, 1, {1, 1, 1, 1, 1, 2}),
      brute(MapId::DP3, {1, 1, 1, 1, 1, 2}, 6));
  EXPECT_EQ(qmaps::restricted_map(MapId::DP3, Restriction::base, 1, 1, {1, 1, 1, 1, 1, 2}),
            brute(MapId::DP3, {1, 1, 1, 1, 1, 2}, 1));
}

TEST(RestrictedMap, RejectsPointsOffTheFiber) {
  using qmaps::Restriction;
  EXPECT_THROW(qmaps::restricted_map(MapId::F0, Restriction::base, 1, 1, {1, 2, 3, 4}),
               qmaps::NotOnVariety);
  EXPECT_THROW(qmaps::restricted_map(MapId::F0, Restriction::period_return, 4, 1, {1, 1, 1, 2}),
               qmaps::NotOnVariety);
}

TEST(ClosedFormProperty, BaseFiberAllStepCounts) {
  qmaps::Sampler rng(34);
  for (MapId id : {MapId::F0, MapId::DP3}) {
    for (int i = 0; i < 10; ++i) {
      const Point x = base_point(id, rng);
      Point it = x;
      for (unsigned n = 1; n <= 12; ++n) {
        it = qmaps::quiver_map(id, it);
        ASSERT_EQ(qmaps::closed_form(id, x, n), it) << x << " n=" << n;
      }
    }
  }
}

TEST(ClosedFormProperty, GeneralFibersAtMultiplesOfPeriod) {
  qmaps::Sampler rng(35, 10);
  for (int i = 0; i < 10; ++i) {
    const Point z = rng.point(6);
    ASSERT_EQ(qmaps::closed_form(MapId::DP3, z, 6), brute(MapId::DP3, z, 6)) << z;
    const Scalar s = rng.rational(5);
    const Scalar t = rng.rational(5);
    const std::vector<Scalar> free{rng.rational(), rng.rational()};
    const Point x = qmaps::sample_variety(qmaps::VarietyC{MapId::F0, s * s, t * t}, free);
    ASSERT_EQ(qmaps::closed_form(MapId::F0, x, 8), brute(MapId::F0, x, 8)) << x;
  }
}
