#include <gtest/gtest.h>

#include "jacobian_fixtures.hpp"
#include "qmaps/error.hpp"
#include "qmaps/formulas.hpp"
#include "qmaps/invariants.hpp"
#include "qmaps/maps.hpp"
#include "qmaps/sampling.hpp"

using qmaps::Jacobian2;
using qmaps::Jet2;
using qmaps::MapId;
using qmaps::Scalar;
namespace formulas = qmaps::formulas;

namespace {

template <class Map>
Jacobian2 jet_jacobian(Map f, const Scalar& x, const Scalar& y) {
  return qmaps::jacobian_of(qmaps::jet_eval(f, x, y));
}

}  // namespace

TEST(Jet2, ProductAndQuotientRules) {
  const Jet2 x = Jet2::variable_x(3);
  const Jet2 y = Jet2::variable_y(5);
  const Jet2 prod = x * y;
  EXPECT_EQ(prod, Jet2(15, 5, 3));
  const Jet2 quot = x / y;  // d/dx = 1/y, d/dy = -x/y^2
  EXPECT_EQ(quot, Jet2(Scalar(3, 5), Scalar(1, 5), Scalar(-3, 25)));
  EXPECT_EQ(x + 1, Jet2(4, 1, 0));
  EXPECT_EQ(-y, Jet2(-5, 0, -1));
}

TEST(Jet2, DivisionByZeroThrows) {
  const Jet2 x = Jet2::variable_x(0);
  EXPECT_THROW(Jet2(1) / x, qmaps::DivisionByZero);
}

TEST(JetEval, IdentityMapGivesIdentityJacobian) {
  const auto jets = qmaps::jet_eval(
      [](const auto& p) { return formulas::identity(p); }, Scalar(3), Scalar(5));
  EXPECT_EQ(jets[0].value(), Scalar(3));
  EXPECT_EQ(jets[1].value(), Scalar(5));
  EXPECT_EQ(qmaps::jacobian_of(jets), (Jacobian2{{{{1, 0}, {0, 1}}}}));
}

TEST(JetEval, FirstIntegralIsCriticalAtOne) {
  const auto jets = qmaps::jet_eval(
      [](const auto& p) { return formulas::integrals_f0(p); }, Scalar(1), Scalar(1));
  EXPECT_EQ(jets[0], Jet2(4, 0, 0));
}

TEST(JetEval, PeriodicF0AtTwoThree) {
  const Jacobian2 j = qmaps::jacobian(MapId::F0, qmaps::MapKind::periodic, qmaps::Point{2, 3});
  EXPECT_EQ(j, (Jacobian2{{{{0, 1}, {Scalar(-1, 4), 0}}}}));
}

TEST(JetEval, QuiverMapHasNoPlanarJacobian) {
  EXPECT_THROW(qmaps::jacobian(MapId::F0, qmaps::MapKind::quiver, qmaps::Point{1, 1}),
               qmaps::InvalidArgument);
}

// Every registered planar map: jets agree with the hand-derived Jacobians.
TEST(JetEvalProperty, MatchesHandDerivedJacobians) {
  qmaps::Sampler rng(5);
  for (int i = 0; i < 300; ++i) {
    const Scalar x = rng.rational();
    const Scalar y = rng.rational();
    ASSERT_EQ(jet_jacobian([](const auto& p) { return formulas::reduced_f0(p); }, x, y),
              qmaps::fixtures::reduced_f0(x, y));
    ASSERT_EQ(jet_jacobian([](const auto& p) { return formulas::reduced_dp3(p); }, x, y),
              qmaps::fixtures::reduced_dp3(x, y));
    ASSERT_EQ(jet_jacobian([](const auto& p) { return formulas::periodic_f0(p); }, x, y),
              qmaps::fixtures::periodic_f0(x, y));
    ASSERT_EQ(jet_jacobian([](const auto& p) { return formulas::periodic_dp3(p); }, x, y),
              qmaps::fixtures::periodic_dp3(x, y));
    ASSERT_EQ(qmaps::integral_jacobian(MapId::F0, qmaps::Point{x, y}),
              qmaps::fixtures::integrals_f0(x, y));
    ASSERT_EQ(qmaps::integral_jacobian(MapId::DP3, qmaps::Point{x, y}),
              qmaps::fixtures::integrals_dp3(x, y));
  }
}

// Jets of a composition obey the chain rule: J(g o f)(p) = J(g)(f(p)) J(f)(p).
TEST(JetEvalProperty, ChainRule) {
  qmaps::Sampler rng(6);
  for (int i = 0; i < 200; ++i) {
    const Scalar x = rng.rational();
    const Scalar y = rng.rational();
    const auto composed = jet_jacobian(
        [](const auto& p) { return formulas::conjugacy_f0(formulas::reduced_f0(p)); }, x, y);
    const auto inner = qmaps::fixtures::reduced_f0(x, y);
    const auto fp = formulas::reduced_f0(formulas::Pair<Scalar>{x, y});
    const auto outer =
        jet_jacobian([](const auto& p) { return formulas::conjugacy_f0(p); }, fp[0], fp[1]);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        ASSERT_EQ(composed(r, c), outer(r, 0) * inner(0, c) + outer(r, 1) * inner(1, c));
      }
    }
  }
}
