#include "galmag/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "galmag/error.hpp"
#include "galmag/frenet.hpp"
#include "galmag/kernels.hpp"
#include "galmag/oracle.hpp"

namespace galmag::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad_input(const std::string& what) {
  throw Error(ErrorKind::InvalidConfig, what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

double parse_real(std::string_view text) {
  std::string_view t = trim(text);
  double scale = 1.0;
  if (t.size() >= 2 && t.substr(t.size() - 2) == "pi") {
    scale = std::numbers::pi;
    t.remove_suffix(2);
    if (t.empty() || t == "+") return scale;
    if (t == "-") return -scale;
  }
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() ||
      !std::isfinite(v)) {
    bad_input("not a number: '" + std::string(text) + "'");
  }
  return v * scale;
}

KillingField parse_field(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) bad_input("--v expects v1,v2,v3");
  return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
}

NMagneticIC parse_ic(std::string_view text, Mode mode) {
  NMagneticIC ic;
  if (trim(text).empty()) return ic;
  for (std::string_view item : split(text, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      bad_input("--ic entries must be key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = trim(item.substr(0, eq));
    const double value = parse_real(item.substr(eq + 1));
    if (key == "y0") {
      ic.y0 = value;
    } else if (key == "Y0") {
      ic.Y0 = value;
    } else if (key == "z0") {
      ic.z0 = value;
    } else if (key == "Z0") {
      ic.Z0 = value;
    } else if ((key == "T0" || key == "U0") && mode == Mode::NMagnetic) {
      (key == "T0" ? ic.T0 : ic.U0) = value;
    } else {
      bad_input("unknown initial condition '" + std::string(key) + "'");
    }
  }
  return ic;
}

void parse_range(std::string_view text, RunSpec& spec) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3) {
    bad_input("--range expects a:b or a:b:step");
  }
  spec.s_start = parse_real(parts[0]);
  spec.s_end = parse_real(parts[1]);
  if (!(spec.s_end > spec.s_start)) bad_input("--range needs b > a");
  if (parts.size() == 3) {
    const double step = parse_real(parts[2]);
    if (!(step > 0.0)) bad_input("--range step must be > 0");
    spec.sample_step = step;
  }
}

std::string format_real(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<double> sample_grid(const RunSpec& spec) {
  if (spec.sample_step) return make_grid(spec.s_start, spec.s_end, *spec.sample_step);
  return linspace(spec.s_start, spec.s_end, spec.samples);
}

namespace {

struct RawOptions {
  std::string mode = "magnetic";
  std::string v;
  std::string v1, v2, v3;
  std::string ic;
  std::string range;
  std::size_t samples = 1001;
  std::string format = "csv";
  std::string output = "-";
  // verify only
  std::string step = "1e-3";
  std::string tol;
  std::string residual_tol;
};

void add_run_options(CLI::App* sub, RawOptions& o) {
  sub->add_option("--mode", o.mode, "magnetic | nmagnetic")
      ->check(CLI::IsMember({"magnetic", "nmagnetic"}));
  sub->add_option("--v", o.v, "Killing field coefficients v1,v2,v3");
  sub->add_option("--v1", o.v1, "overrides the first --v coefficient");
  sub->add_option("--v2", o.v2, "overrides the second --v coefficient");
  sub->add_option("--v3", o.v3, "overrides the third --v coefficient");
  sub->add_option("--ic", o.ic, "initial data, e.g. y0=1,Y0=5,z0=4,Z0=3");
  sub->add_option("--range", o.range, "a:b or a:b:step")->required();
  sub->add_option("--samples", o.samples, "sample count when --range has no step")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  sub->add_option("--format", o.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output,-o", o.output, "output path, - for stdout");
}

RunSpec to_spec(const RawOptions& o) {
  RunSpec spec;
  spec.mode = o.mode == "nmagnetic" ? Mode::NMagnetic : Mode::Magnetic;
  if (!o.v.empty()) spec.field = parse_field(o.v);
  if (!o.v1.empty()) spec.field.v1 = parse_real(o.v1);
  if (!o.v2.empty()) spec.field.v2 = parse_real(o.v2);
  if (!o.v3.empty()) spec.field.v3 = parse_real(o.v3);
  spec.ic = parse_ic(o.ic, spec.mode);
  parse_range(o.range, spec);
  spec.samples = o.samples;
  spec.format = o.format == "json" ? Format::Json : Format::Csv;
  spec.output = o.output;
  return spec;
}

ClosedFormCurve solve_spec(const RunSpec& spec) {
  if (spec.mode == Mode::Magnetic) {
    const MagneticIC ic{spec.ic.y0, spec.ic.Y0, spec.ic.z0, spec.ic.Z0};
    return solve_magnetic(spec.field, ic);
  }
  return solve_n_magnetic(spec.field, spec.ic);
}

json nullable(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> torsion_at(const C3Curve& c, double s) {
  if (curvature(c, s) == 0.0) return std::nullopt;
  return torsion(c, s);
}

std::string opt_text(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string("undefined");
}

/// Either stdout or a file, per --output.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path != "-") {
      file_.open(path);
      if (!file_) bad_input("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void report_warnings(const ClosedFormCurve& c, std::ostream& err) {
  for (const auto& w : c.warnings()) err << "warning: " << w << '\n';
}

int cmd_solve(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const ClosedFormCurve curve = solve_spec(spec);
  const auto grid = sample_grid(spec);
  const auto samples = sample_positions(curve, grid);

  const double kappa = curvature(curve, spec.s_start);
  const std::optional<double> tau = torsion_at(curve, spec.s_start);
  std::optional<HelixData> helix;
  if (is_helix_case(curve.kind())) helix = helix_decomposition(curve);

  report_warnings(curve, err);
  err << "case=" << to_string(curve.kind()) << '\n'
      << "kappa=" << format_real(kappa) << '\n'
      << "tau=" << opt_text(tau) << '\n';
  if (helix) {
    err << "r=" << format_real(helix->r) << '\n'
        << "axis=" << format_real(helix->axis.a) << ',' << format_real(helix->axis.b)
        << ',' << format_real(helix->axis.c) << ',' << format_real(helix->axis.d)
        << '\n';
  }

  Sink sink(spec.output, out);
  std::ostream& os = sink.stream();
  if (spec.format == Format::Csv) {
    os << "s,x,y,z\n";
    for (const auto& p : samples) {
      os << format_real(p[0]) << ',' << format_real(p[1]) << ','
         << format_real(p[2]) << ',' << format_real(p[3]) << '\n';
    }
  } else {
    json doc;
    doc["case"] = std::string(to_string(curve.kind()));
    doc["kappa"] = kappa;
    doc["tau"] = nullable(tau);
    if (helix) {
      doc["helix"] = {{"r", helix->r},
                      {"line",
                       {{"a", helix->axis.a},
                        {"b", helix->axis.b},
                        {"c", helix->axis.c},
                        {"d", helix->axis.d}}}};
    } else {
      doc["helix"] = nullptr;
    }
    json rows = json::array();
    for (const auto& p : samples) rows.push_back({p[0], p[1], p[2], p[3]});
    doc["samples"] = std::move(rows);
    os << doc.dump() << '\n';
  }
  return kExitOk;
}

struct VerifyReport {
  std::string kind;
  double deviation = 0.0;
  double residual = 0.0;
  ValueRange kappa;
  std::optional<double> tau;
  std::optional<double> radius;
  std::optional<double> helix_spread;
  double step = 0.0;
  double tol = 0.0;
  double residual_tol = 0.0;
  bool pass = false;
};

int cmd_verify(const RunSpec& spec, double step, double tol, double residual_tol,
               std::ostream& out, std::ostream& err) {
  const ClosedFormCurve curve = solve_spec(spec);
  report_warnings(curve, err);
  const auto grid = sample_grid(spec);

  VerifyReport rep;
  rep.kind = std::string(to_string(curve.kind()));
  rep.step = step;
  rep.tol = tol;
  rep.residual_tol = residual_tol;

  if (spec.mode == Mode::Magnetic) {
    const auto& ic = std::get<MagneticIC>(curve.initial_data());
    const auto sampled = integrate_from_origin(
        magnetic_system(curve.field()), initial_state(ic), spec.s_start, spec.s_end, step);
    rep.deviation = max_deviation(curve, sampled);
    rep.residual = max_lorentz_residual(curve, grid);
  } else {
    const auto& ic = std::get<NMagneticIC>(curve.initial_data());
    const auto sampled = integrate_from_origin(
        n_magnetic_system(curve.field(), *curve.kappa0()), initial_state(ic),
        spec.s_start, spec.s_end, step);
    rep.deviation = max_deviation(curve, sampled);
    rep.residual = max_n_magnetic_residual(curve, grid);
  }
  rep.kappa = curvature_range(curve, grid);
  rep.tau = torsion_at(curve, spec.s_start);
  if (is_helix_case(curve.kind())) {
    const HelixData h = helix_decomposition(curve);
    rep.radius = h.r;
    rep.helix_spread = helix_distance_range(curve, h, grid).spread();
  }

  rep.pass = rep.deviation < tol && rep.residual < residual_tol &&
             rep.kappa.spread() < residual_tol &&
             (!rep.helix_spread || *rep.helix_spread < residual_tol);

  if (spec.format == Format::Csv) {
    out << "metric,value\n"
        << "case," << rep.kind << '\n'
        << "deviation," << format_real(rep.deviation) << '\n'
        << "residual," << format_real(rep.residual) << '\n'
        << "kappa_min," << format_real(rep.kappa.min) << '\n'
        << "kappa_max," << format_real(rep.kappa.max) << '\n'
        << "kappa_spread," << format_real(rep.kappa.spread()) << '\n'
        << "tau," << opt_text(rep.tau) << '\n'
        << "r," << opt_text(rep.radius) << '\n'
        << "helix_spread," << opt_text(rep.helix_spread) << '\n'
        << "step," << format_real(rep.step) << '\n'
        << "tol," << format_real(rep.tol) << '\n'
        << "residual_tol," << format_real(rep.residual_tol) << '\n'
        << "status," << (rep.pass ? "pass" : "fail") << '\n';
  } else {
    json doc = {{"case", rep.kind},
                {"deviation", rep.deviation},
                {"residual", rep.residual},
                {"kappa_min", rep.kappa.min},
                {"kappa_max", rep.kappa.max},
                {"kappa_spread", rep.kappa.spread()},
                {"tau", nullable(rep.tau)},
                {"r", nullable(rep.radius)},
                {"helix_spread", nullable(rep.helix_spread)},
                {"step", rep.step},
                {"tol", rep.tol},
                {"residual_tol", rep.residual_tol},
                {"status", rep.pass ? "pass" : "fail"}};
    out << doc.dump() << '\n';
  }
  if (!rep.pass) err << "verification failed\n";
  return rep.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_frenet(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const ClosedFormCurve curve = solve_spec(spec);
  report_warnings(curve, err);
  const auto grid = sample_grid(spec);
  const auto table = frame_table(curve, grid);

  Sink sink(spec.output, out);
  std::ostream& os = sink.stream();
  if (spec.format == Format::Csv) {
    os << "s,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau\n";
    for (const auto& row : table) {
      const auto& f = row.frame;
      os << format_real(row.s);
      for (const GVector3* v : {&f.T, &f.N, &f.B}) {
        os << ',' << format_real(v->x1) << ',' << format_real(v->x2) << ','
           << format_real(v->x3);
      }
      os << ',' << format_real(f.kappa) << ',' << format_real(f.tau) << '\n';
    }
  } else {
    auto vec = [](const GVector3& v) { return json::array({v.x1, v.x2, v.x3}); };
    json frames = json::array();
    for (const auto& row : table) {
      frames.push_back({{"s", row.s},
                        {"T", vec(row.frame.T)},
                        {"N", vec(row.frame.N)},
                        {"B", vec(row.frame.B)},
                        {"kappa", row.frame.kappa},
                        {"tau", row.frame.tau}});
    }
    json doc = {{"case", std::string(to_string(curve.kind()))},
                {"frames", std::move(frames)}};
    os << doc.dump() << '\n';
  }
  return kExitOk;
}

double default_tolerance() {
  if (const char* env = std::getenv("GALMAG_TOL"); env != nullptr && *env != '\0') {
    const double v = parse_real(env);
    if (v < 0.0) bad_input("GALMAG_TOL must be >= 0");
    return v;
  }
  return 1e-9;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magnetic and N-magnetic trajectories in the Galilean 3-space",
               "galmag"};
  app.require_subcommand(1);

  RawOptions solve_opts;
  RawOptions verify_opts;
  RawOptions frenet_opts;
  auto* solve = app.add_subcommand("solve", "sample the closed-form trajectory");
  auto* verify = app.add_subcommand("verify", "check the closed form against RK4");
  auto* frenet = app.add_subcommand("frenet", "tabulate the Frenet trihedron");
  add_run_options(solve, solve_opts);
  add_run_options(verify, verify_opts);
  add_run_options(frenet, frenet_opts);
  verify->add_option("--step", verify_opts.step, "RK4 step (default 1e-3)");
  verify->add_option("--tol", verify_opts.tol,
                     "deviation tolerance (default 1e-9 or $GALMAG_TOL)");
  verify->add_option("--residual-tol", verify_opts.residual_tol,
                     "residual and spread tolerance (default 1e-9 or $GALMAG_TOL)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: invalid-argument: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(to_spec(solve_opts), out, err);
    if (frenet->parsed()) return cmd_frenet(to_spec(frenet_opts), out, err);

    const RunSpec spec = to_spec(verify_opts);
    const double step = parse_real(verify_opts.step);
    const double fallback = default_tolerance();
    const double tol = verify_opts.tol.empty() ? fallback : parse_real(verify_opts.tol);
    const double rtol = verify_opts.residual_tol.empty()
                            ? fallback
                            : parse_real(verify_opts.residual_tol);
    if (tol < 0.0 || rtol < 0.0) bad_input("tolerances must be >= 0");
    return cmd_verify(spec, step, tol, rtol, out, err);
  } catch (const Error& e) {
    const std::string_view reason =
        e.kind() == ErrorKind::InvalidConfig ? "invalid-argument" : to_string(e.kind());
    err << "error: " << reason << ": " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace galmag::cli
