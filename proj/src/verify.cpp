#include "qmaps/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "qmaps/closed_form.hpp"
#include "qmaps/error.hpp"
#include "qmaps/invariants.hpp"
#include "qmaps/maps.hpp"
#include "qmaps/orbit.hpp"
#include "qmaps/sampling.hpp"

namespace qmaps {

namespace {

using CheckBody = std::function<void(Sampler&, unsigned, CheckResult&)>;

struct CheckDef {
  Suite suite;
  std::string name;
  CheckBody body;
};

constexpr MapId kMaps[] = {MapId::F0, MapId::DP3};

std::string tag(MapId id) { return std::string(to_string(id)); }

// Random point on C_(1,1).
Point base_fiber_point(MapId id, Sampler& rng) {
  if (id == MapId::F0) {
    const Scalar x1 = rng.rational();
    const Scalar x2 = rng.rational();
    return sample_variety(VarietyC{id, 1, 1}, std::vector<Scalar>{x1, x2});
  }
  std::vector<Scalar> free;
  for (int i = 0; i < 4; ++i) free.push_back(rng.rational());
  return sample_variety(VarietyC{id, 1, 1}, free);
}

std::vector<CheckDef> periodicity_checks() {
  std::vector<CheckDef> checks;
  for (MapId id : kMaps) {
    for (MapKind kind : {MapKind::periodic, MapKind::reduced}) {
      checks.push_back({Suite::periodicity,
                        tag(id) + " " + std::string(to_string(kind)) + "^m = id",
                        [id, kind](Sampler& rng, unsigned k, CheckResult& r) {
                          for (unsigned i = 0; i < k; ++i) {
                            const Point p = rng.point(2);
                            r.record(iterate(id, kind, p, period(id)) == p, p.str());
                          }
                        }});
      checks.push_back(
          {Suite::periodicity, tag(id) + " " + std::string(to_string(kind)) + " minimal period",
           [id, kind](Sampler& rng, unsigned k, CheckResult& r) {
             const Point fixed = kind == MapKind::periodic
                                     ? Point{1, 1}
                                     : (id == MapId::F0 ? Point{2, 1} : Point{1, 2});
             for (unsigned i = 0; i < k; ++i) {
               const Point p = rng.point_other_than(fixed);
               Point q = p;
               bool ok = true;
               for (unsigned j = 1; j < period(id); ++j) {
                 q = apply(id, kind, q);
                 ok = ok && q != p;
               }
               r.record(ok, p.str());
             }
           }});
    }
    checks.push_back({Suite::periodicity, tag(id) + " fixed points",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        const Point fixed = id == MapId::F0 ? Point{2, 1} : Point{1, 2};
                        r.record(reduced_map(id, fixed) == fixed, fixed.str());
                        r.record(periodic_map(id, Point{1, 1}) == Point{1, 1}, "(1, 1)");
                        for (unsigned i = 0; i < k; ++i) {
                          const Point p = rng.point_other_than(fixed);
                          r.record(reduced_map(id, p) != p && (p == Point{1, 1} ||
                                                               periodic_map(id, p) != p),
                                   p.str());
                        }
                      }});
  }
  return checks;
}

std::vector<CheckDef> conjugacy_checks() {
  std::vector<CheckDef> checks;
  for (MapId id : kMaps) {
    checks.push_back({Suite::conjugacy, tag(id) + " Pi o phi = phihat o Pi",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point x = rng.point(ambient_arity(id));
                          r.record(reduce(id, quiver_map(id, x)) == reduced_map(id, reduce(id, x)),
                                   x.str());
                        }
                      }});
    checks.push_back({Suite::conjugacy, tag(id) + " Pi~ o phihat = psi o Pi~",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point p = rng.point(2);
                          r.record(conjugacy(id, reduced_map(id, p)) ==
                                       periodic_map(id, conjugacy(id, p)),
                                   p.str());
                        }
                      }});
    checks.push_back({Suite::conjugacy, tag(id) + " pi o phi = psi o pi, pi = Pi~ o Pi",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point x = rng.point(ambient_arity(id));
                          const Point px = project(id, x);
                          r.record(px == project_composed(id, x) &&
                                       project(id, quiver_map(id, x)) == periodic_map(id, px),
                                   x.str());
                        }
                      }});
    checks.push_back({Suite::conjugacy, tag(id) + " Pi~ inverse round trips",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          // The F0 image always has x/y = y^2, a rational square.
                          const Point p = rng.point(2);
                          const Point image = conjugacy(id, p);
                          r.record(conjugacy_inverse(id, image) == p &&
                                       conjugacy(id, conjugacy_inverse(id, image)) == image,
                                   p.str());
                        }
                      }});
  }
  return checks;
}

std::vector<CheckDef> symplectic_checks() {
  std::vector<CheckDef> checks;
  for (MapId id : kMaps) {
    checks.push_back({Suite::symplectic, tag(id) + " det Jac(phihat) x y = x' y'",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point p = rng.point(2);
                          const Point q = reduced_map(id, p);
                          const Scalar det = jacobian(id, MapKind::reduced, p).det();
                          r.record(det * p[0] * p[1] == q[0] * q[1], p.str());
                        }
                      }});
  }
  return checks;
}

std::vector<CheckDef> closedform_checks() {
  std::vector<CheckDef> checks;
  for (MapId id : kMaps) {
    checks.push_back({Suite::closedform, tag(id) + " closed form on C_(1,1), n <= 12",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point x = base_fiber_point(id, rng);
                          try {
                            validate_closed_form(id, x, 12);
                            r.record(true, "");
                          } catch (const ClosedFormMismatch& e) {
                            r.record(false, e.what());
                          }
                        }
                      }});
    checks.push_back({Suite::closedform, tag(id) + " closed form off C_(1,1), n <= 2m",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point x = rng.point(ambient_arity(id));
                          try {
                            validate_closed_form(id, x, 2 * period(id));
                            r.record(true, "");
                          } catch (const ClosedFormMismatch& e) {
                            r.record(false, e.what());
                          }
                        }
                      }});
    checks.push_back(
        {Suite::closedform, tag(id) + " scaled-diagonal power = iteration",
         [id](Sampler& rng, unsigned k, CheckResult& r) {
           for (unsigned i = 0; i < k; ++i) {
             const Point x = rng.point(ambient_arity(id));
             const Point ab = project(id, x);
             const ScaledDiagonalMap g = id == MapId::F0 ? f0_return_map(ab[0], ab[1])
                                                         : dp3_return_map(ab[0], ab[1]);
             const unsigned n = 1 + i % 3;
             r.record(g.power(x, n) == iterate_map(g, x, n), x.str());
           }
         }});
    checks.push_back({Suite::closedform, tag(id) + " k-constant inequalities",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Scalar a = rng.rational();
                          const Scalar b = rng.rational();
                          if (a.is_one() && b.is_one()) continue;
                          const KConstants kc = k_constants(id, a, b);
                          const bool ok = id == MapId::F0
                                              ? kc.k1 > 1 && kc.k2 > 1 && kc.k2 / kc.k1 > 1
                                              : kc.k1 > 2 && kc.k2 > 3;
                          r.record(ok, Point{a, b}.str());
                        }
                      }});
    checks.push_back({Suite::closedform, tag(id) + " no revisits and stride-m growth",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point x = rng.point(ambient_arity(id));
                          const Orbit o = run_orbit(id, MapKind::quiver, x, kDefaultQuiverSteps);
                          r.record(!o.summary.period_found &&
                                       growth_probe(id, MapKind::quiver, x, kDefaultBurnIn, 3),
                                   x.str());
                        }
                      }});
  }
  return checks;
}

std::vector<CheckDef> integral_checks() {
  std::vector<CheckDef> checks;
  for (MapId id : kMaps) {
    checks.push_back({Suite::integrals, tag(id) + " lifted integrals constant along phi",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point x = rng.point(ambient_arity(id));
                          const IntegralValues j0 = lifted_integrals(id, x);
                          Point y = x;
                          bool ok = true;
                          for (unsigned n = 0; n < period(id) + 2; ++n) {
                            y = quiver_map(id, y);
                            ok = ok && lifted_integrals(id, y) == j0;
                          }
                          if (id == MapId::F0) ok = ok && lifted_integrals_f0_expanded(x) == j0;
                          r.record(ok, x.str());
                        }
                      }});
  }
  checks.push_back({Suite::integrals, "dp3 restricted integrals",
                    [](Sampler& rng, unsigned k, CheckResult& r) {
                      for (unsigned i = 0; i < k; ++i) {
                        const Point base = base_fiber_point(MapId::DP3, rng);
                        const Point x = rng.point(6);
                        const bool ok =
                            restricted_integrals_dp3(DP3Integrals::base,
                                                     quiver_map(MapId::DP3, base)) ==
                                restricted_integrals_dp3(DP3Integrals::base, base) &&
                            restricted_integrals_dp3(DP3Integrals::period_return,
                                                     iterate(MapId::DP3, MapKind::quiver, x, 6)) ==
                                restricted_integrals_dp3(DP3Integrals::period_return, x);
                        r.record(ok, base.str() + " / " + x.str());
                      }
                    }});
  checks.push_back({Suite::integrals, "f0 integral Jacobian display = jet determinant",
                    [](Sampler& rng, unsigned k, CheckResult& r) {
                      for (unsigned i = 0; i < k; ++i) {
                        const Point p = rng.point(2);
                        r.record(integral_jacobian_det(p) ==
                                     integral_jacobian(MapId::F0, p).det(),
                                 p.str());
                      }
                    }});
  return checks;
}

std::vector<CheckDef> variety_checks() {
  std::vector<CheckDef> checks;
  for (MapId id : kMaps) {
    checks.push_back({Suite::varieties, tag(id) + " sheet index advances by one",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Point x = rng.point(ambient_arity(id));
                          const Point P = project(id, x);
                          const bool fixed = P == Point{1, 1};
                          Point y = x;
                          bool ok = true;
                          for (unsigned n = 0; n <= 2 * period(id); ++n) {
                            const auto s = classify_sheet(id, y, P);
                            ok = ok && s && *s == (fixed ? 0U : n % period(id));
                            y = quiver_map(id, y);
                          }
                          ok = ok && project(id, iterate(id, MapKind::quiver, x, period(id))) == P;
                          r.record(ok, x.str());
                        }
                      }});
    checks.push_back({Suite::varieties, tag(id) + " level set splits into two orbits",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        for (unsigned i = 0; i < k; ++i) {
                          const Scalar a = rng.rational(6);
                          const Scalar b = rng.rational(6);
                          const LevelSetSplit s = split_level_set(id, a, b);
                          const IntegralValues c = periodic_integrals(id, s.P);
                          bool ok = s.dichotomy_holds();
                          for (const auto& q : s.union_set) ok = ok && periodic_integrals(id, q) == c;
                          if (id == MapId::F0) ok = ok && level_set_octet(a, b) == s.union_set;
                          r.record(ok, s.P.str());
                        }
                      }});
    checks.push_back({Suite::varieties, tag(id) + " no level-set points beyond the two orbits",
                      [id](Sampler& rng, unsigned k, CheckResult& r) {
                        const unsigned count = std::min(k, 20U);
                        for (unsigned i = 0; i < count; ++i) {
                          const Scalar a = rng.rational(6);
                          const Scalar b = rng.rational(6);
                          const auto found = enumerate_level_set(id, a, b, 12);
                          auto expected = split_level_set(id, a, b).union_set;
                          std::erase_if(expected, [](const Point& q) {
                            return q[0].height() > 12 || q[1].height() > 12;
                          });
                          r.record(found == expected, Point{a, b}.str());
                        }
                      }});
  }
  checks.push_back({Suite::varieties, "dp3 D sheets cycle under the parameter map",
                    [](Sampler& rng, unsigned k, CheckResult& r) {
                      for (unsigned i = 0; i < k; ++i) {
                        DParams q{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
                        const Scalar z1 = rng.rational();
                        const Scalar z2 = rng.rational();
                        Point z = sample_variety(VarietyD{q}, std::vector<Scalar>{z1, z2});
                        bool ok = VarietyD{q}.contains(z);
                        const DParams q0 = q;
                        for (int n = 0; n < 6; ++n) {
                          z = quiver_map(MapId::DP3, z);
                          q = parameter_map(q);
                          ok = ok && VarietyD{q}.contains(z);
                        }
                        r.record(ok && q == q0, z.str());
                      }
                    }});
  checks.push_back({Suite::varieties, "dp3 C_(1,1) orbits stay on the codimension-4 variety",
                    [](Sampler& rng, unsigned k, CheckResult& r) {
                      for (unsigned i = 0; i < k; ++i) {
                        Point z = base_fiber_point(MapId::DP3, rng);
                        const IntegralValues c = restricted_integrals_dp3(DP3Integrals::base, z);
                        bool ok = true;
                        for (int n = 0; n <= 12; ++n) {
                          ok = ok && on_base_confinement(c.j1, c.j2, z);
                          z = quiver_map(MapId::DP3, z);
                        }
                        r.record(ok, z.str());
                      }
                    }});
  return checks;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

std::vector<CheckDef> all_checks() {
  std::vector<CheckDef> all;
  for (auto&& group : {periodicity_checks(), conjugacy_checks(), symplectic_checks(),
                       closedform_checks(), integral_checks(), variety_checks()}) {
    all.insert(all.end(), group.begin(), group.end());
  }
  return all;
}

}  // namespace

void CheckResult::record(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (!counterexample) counterexample = what;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::periodicity:
      return "periodicity";
    case Suite::conjugacy:
      return "conjugacy";
    case Suite::closedform:
      return "closedform";
    case Suite::integrals:
      return "integrals";
    case Suite::varieties:
      return "varieties";
    case Suite::symplectic:
      return "symplectic";
    case Suite::all:
      return "all";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::periodicity, Suite::conjugacy, Suite::closedform, Suite::integrals,
                  Suite::varieties, Suite::symplectic, Suite::all}) {
    if (text == to_string(s)) return s;
  }
  throw ParseError("unknown suite '" + std::string(text) + "'");
}

std::vector<CheckResult> run_verification(Suite suite, std::uint64_t seed, unsigned samples,
                                          unsigned threads) {
  if (samples < 1) throw InvalidArgument("verification needs at least one sample");
  std::vector<CheckDef> checks = all_checks();
  if (suite != Suite::all) {
    std::erase_if(checks, [suite](const CheckDef& c) { return c.suite != suite; });
  }

  std::vector<CheckResult> results(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    results[i].suite = std::string(to_string(checks[i].suite));
    results[i].name = checks[i].name;
  }

  // Each check owns its sampler, seeded by its position in the full list,
  // so the outcome is independent of scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      Sampler rng(derive_seed(seed, fnv1a(checks[i].name)));
      try {
        checks[i].body(rng, samples, results[i]);
      } catch (const std::exception& e) {
        results[i].record(false, std::string("exception: ") + e.what());
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(checks.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();  // joins
  return results;
}

}  // namespace qmaps
