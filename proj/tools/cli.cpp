#include "cli.hpp"

#include <mpfr.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>

#include "qmaps/closed_form.hpp"
#include "qmaps/error.hpp"
#include "qmaps/invariants.hpp"
#include "qmaps/maps.hpp"
#include "qmaps/orbit.hpp"
#include "qmaps/verify.hpp"

namespace qmaps::cli {

namespace {

struct IterateOptions {
  std::string map;
  std::string which = "phi";
  std::string point;
  std::optional<unsigned> steps;
  std::string format = "csv";
  std::string out;  // export-plot only
};

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  unsigned samples = 100;
  unsigned threads = 0;
};

struct PlaneOptions {
  std::string map = "f0";
  std::string P;
  std::string point;  // classify only
};

/// Parses --P as a planar point.
Point parse_plane_point(const std::string& text) {
  Point p = Point::parse(text);
  require_arity(p, 2);
  return p;
}

std::string sheet_str(const std::optional<unsigned>& sheet) {
  return sheet ? std::to_string(*sheet) : std::string();
}

Orbit orbit_from(const IterateOptions& opt) {
  const MapId id = parse_map_id(opt.map);
  const MapKind kind = parse_map_kind(opt.which);
  const Point x0 = Point::parse(opt.point);
  require_arity(x0, arity(id, kind));
  const unsigned steps =
      opt.steps.value_or(kind == MapKind::quiver ? kDefaultQuiverSteps : kDefaultPeriodicSteps);
  return run_orbit(id, kind, x0, steps);
}

void write_csv(const Orbit& orbit, std::ostream& out) {
  const std::size_t arity = orbit.records.front().point.arity();
  out << "n";
  for (std::size_t i = 1; i <= arity; ++i) out << ",x" << i;
  out << ",sheet,J1,J2\n";
  for (const auto& r : orbit.records) {
    out << r.n;
    for (const auto& c : r.point.coords()) out << ',' << c.str();
    out << ',' << sheet_str(r.sheet) << ',' << r.integrals.j1.str() << ','
        << r.integrals.j2.str() << '\n';
  }
}

void write_json(const Orbit& orbit, std::ostream& out) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& r : orbit.records) {
    nlohmann::ordered_json rec;
    rec["n"] = r.n;
    auto& coords = rec["point"] = nlohmann::ordered_json::array();
    for (const auto& c : r.point.coords()) coords.push_back(c.str());
    rec["sheet"] = r.sheet ? nlohmann::ordered_json(*r.sheet) : nlohmann::ordered_json(nullptr);
    rec["J1"] = r.integrals.j1.str();
    rec["J2"] = r.integrals.j2.str();
    records.push_back(std::move(rec));
  }
  out << records.dump(2) << '\n';
}

int cmd_iterate(const IterateOptions& opt, std::ostream& out) {
  const Orbit orbit = orbit_from(opt);
  if (opt.format == "json") {
    write_json(orbit, out);
  } else {
    write_csv(orbit, out);
  }
  return kOk;
}

int cmd_export_plot(const IterateOptions& opt, std::ostream& err) {
  const Orbit orbit = orbit_from(opt);
  std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << opt.out << '\n';
    return kUnwritable;
  }
  const std::size_t arity = orbit.records.front().point.arity();
  file << "n";
  for (std::size_t i = 1; i <= arity; ++i) file << ",log10_x" << i;
  file << ",sheet";
  for (std::size_t i = 1; i <= arity; ++i) file << ",x" << i;
  file << '\n';
  for (const auto& r : orbit.records) {
    file << r.n;
    for (const auto& c : r.point.coords()) file << ',' << log10_fixed12(c);
    file << ',' << sheet_str(r.sheet);
    for (const auto& c : r.point.coords()) file << ',' << c.str();
    file << '\n';
  }
  file.flush();
  if (!file) {
    err << "error: failed writing " << opt.out << '\n';
    return kUnwritable;
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const Suite suite = parse_suite(opt.suite);
  const auto results = run_verification(suite, opt.seed, opt.samples, opt.threads);
  unsigned failed_checks = 0;
  for (const auto& r : results) {
    out << (r.ok() ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name << "  ("
        << r.passed << " passed, " << r.failed << " failed)\n";
    if (!r.ok()) {
      ++failed_checks;
      out << "      first counterexample: " << *r.counterexample << '\n';
    }
  }
  out << (failed_checks == 0 ? "all " : "") << results.size() - failed_checks << "/"
      << results.size() << " checks passed (suite " << opt.suite << ", seed " << opt.seed
      << ", samples " << opt.samples << ")\n";
  return failed_checks == 0 ? kOk : kCheckFailed;
}

void print_points(std::ostream& out, const std::vector<Point>& points) {
  for (const auto& p : points) out << "  " << p << '\n';
}

int cmd_levelset(const PlaneOptions& opt, std::ostream& out) {
  const MapId id = parse_map_id(opt.map);
  const Point P = parse_plane_point(opt.P);
  const LevelSetSplit split = split_level_set(id, P[0], P[1]);
  out << "map: " << to_string(id) << '\n';
  out << "P = " << P << '\n';
  const IntegralValues c = periodic_integrals(id, P);
  out << "I1 = " << c.j1 << ", I2 = " << c.j2 << '\n';
  out << "jacobian = " << split.jacobian << '\n';
  if (split.on_locus()) {
    out << "case i: P on the Jacobian locus, the level set is one orbit\n";
  } else {
    out << "case ii: P off the Jacobian locus, the level set is two disjoint orbits\n";
  }
  out << "level set (" << split.union_set.size() << " points):\n";
  print_points(out, split.union_set);
  out << "orbit of P (" << split.orbit.size() << "):\n";
  print_points(out, split.orbit);
  out << "orbit of sigma(P) (" << split.reflected_orbit.size() << "):\n";
  print_points(out, split.reflected_orbit);
  if (!split.dichotomy_holds()) {
    out << "warning: orbit structure does not match the Jacobian case\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_constants(const PlaneOptions& opt, std::ostream& out) {
  const MapId id = parse_map_id(opt.map);
  const Point P = parse_plane_point(opt.P);
  const KConstants k = k_constants(id, P[0], P[1]);
  out << "map: " << to_string(id) << '\n';
  out << "P = " << P << '\n';
  out << "k1 = " << k.k1 << '\n';
  out << "k2 = " << k.k2 << '\n';
  out << "k2/k1 = " << k.k2 / k.k1 << '\n';
  return kOk;
}

int cmd_classify(const PlaneOptions& opt, std::ostream& out) {
  const MapId id = parse_map_id(opt.map);
  const Point x = Point::parse(opt.point);
  require_arity(x, ambient_arity(id));
  const Point image = project(id, x);
  const Point P = opt.P.empty() ? image : parse_plane_point(opt.P);
  out << "pi(x) = " << image << '\n';
  out << "P = " << P << '\n';
  if (const auto sheet = classify_sheet(id, x, P)) {
    out << "sheet = " << *sheet << '\n';
  } else {
    out << "sheet = none (x is not in S_P)\n";
  }
  return kOk;
}

}  // namespace

std::string log10_fixed12(const Scalar& value) {
  if (!value.is_positive()) throw InvalidArgument("log10 of a non-positive value");
  mpfr_t v;
  mpfr_init2(v, 256);
  mpfr_set_q(v, value.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_log10(v, v, MPFR_RNDN);
  char* text = nullptr;
  mpfr_asprintf(&text, "%.12RNf", v);
  std::string out(text);
  mpfr_free_str(text);
  mpfr_clear(v);
  if (out == "-0.000000000000") out = "0.000000000000";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dynamics of the F0 and dP3 birational maps"};
  app.require_subcommand(1);

  IterateOptions iterate_opt;
  auto* iterate_cmd = app.add_subcommand("iterate", "Iterate a map and print every step");
  iterate_cmd->add_option("--map", iterate_opt.map, "f0 or dp3")->required();
  iterate_cmd->add_option("--which", iterate_opt.which, "phi, phihat or psi");
  iterate_cmd->add_option("--point", iterate_opt.point, "comma-separated rationals")->required();
  iterate_cmd->add_option("--steps", iterate_opt.steps, "number of steps");
  iterate_cmd->add_option("--format", iterate_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  IterateOptions export_opt;
  auto* export_cmd = app.add_subcommand("export-plot", "Write plot-ready orbit CSV");
  export_cmd->add_option("--map", export_opt.map, "f0 or dp3")->required();
  export_cmd->add_option("--which", export_opt.which, "phi, phihat or psi");
  export_cmd->add_option("--point", export_opt.point, "comma-separated rationals")->required();
  export_cmd->add_option("--steps", export_opt.steps, "number of steps");
  export_cmd->add_option("--out", export_opt.out, "output CSV path")->required();

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Run exact-identity checks on random samples");
  verify_cmd->add_option("--suite", verify_opt.suite,
                         "periodicity|conjugacy|closedform|integrals|varieties|symplectic|all");
  verify_cmd->add_option("--seed", verify_opt.seed, "random seed");
  verify_cmd->add_option("--samples", verify_opt.samples, "samples per check")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", verify_opt.threads, "worker threads (0 = all cores)");

  PlaneOptions levelset_opt;
  auto* levelset_cmd = app.add_subcommand("levelset", "Common level set of the integrals at P");
  levelset_cmd->add_option("--map", levelset_opt.map, "f0 or dp3");
  levelset_cmd->add_option("--P", levelset_opt.P, "a,b")->required();

  PlaneOptions constants_opt;
  auto* constants_cmd = app.add_subcommand("constants", "Return-map constants k1, k2 at P");
  constants_cmd->add_option("--map", constants_opt.map, "f0 or dp3")->required();
  constants_cmd->add_option("--P", constants_opt.P, "a,b")->required();

  PlaneOptions classify_opt;
  auto* classify_cmd = app.add_subcommand("classify", "Sheet of S_P containing a point");
  classify_cmd->add_option("--map", classify_opt.map, "f0 or dp3")->required();
  classify_cmd->add_option("--point", classify_opt.point, "comma-separated rationals")
      ->required();
  classify_cmd->add_option("--P", classify_opt.P, "a,b (defaults to pi(x))");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*iterate_cmd) return cmd_iterate(iterate_opt, out);
    if (*export_cmd) return cmd_export_plot(export_opt, err);
    if (*verify_cmd) return cmd_verify(verify_opt, out);
    if (*levelset_cmd) return cmd_levelset(levelset_opt, out);
    if (*constants_cmd) return cmd_constants(constants_opt, out);
    if (*classify_cmd) return cmd_classify(classify_opt, out);
  } catch (const NonPositiveCoordinate& e) {
    err << "error: " << e.what() << '\n';
    return kNonPositive;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArityMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace qmaps::cli
