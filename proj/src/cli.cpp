#include "chsh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "chsh/fock.hpp"
#include "chsh/kg.hpp"
#include "chsh/rindler.hpp"
#include "chsh/spin.hpp"

namespace chsh::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
/// Matrix and closed-form spin values must agree to this.
constexpr double kSpinAgreement = 1e-12;
/// Relative self-convergence required of kg-norm under resolution doubling.
constexpr double kNormConvergence = 1e-8;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

double parse_real(std::string_view text, std::string_view what) {
  const std::string s = trim(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(value)) {
    throw ConfigError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// A cell is either numeric or text; CSV prints numbers with 17 significant digits.
using Cell = std::variant<double, long long, bool, std::string>;

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      c);
}

json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return json(v); }, c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Key/value output grouped by section; rendered as a section,quantity,value
/// table in CSV and as a nested object in JSON.
struct Report {
  std::vector<std::tuple<std::string, std::string, Cell>> entries;

  void add(std::string section, std::string quantity, Cell value) {
    entries.emplace_back(std::move(section), std::move(quantity), std::move(value));
  }
};

enum class Format { csv, json };

struct Output {
  Format format = Format::csv;
  std::string path;
};

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << csv_escape(t.columns[i]);
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << csv_escape(cell_text(row[i]));
    }
    os << '\n';
  }
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void emit(const Output& out, std::ostream& stdout_stream, const std::string& text) {
  if (out.path.empty()) {
    stdout_stream << text;
    return;
  }
  const std::filesystem::path p = resolve_output(out.path);
  std::ofstream file(p, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + p.string() + "'");
  file << text;
}

void emit_table(const Output& out, std::ostream& os, const std::string& command, const Table& t,
                json meta, bool passed) {
  std::ostringstream buf;
  if (out.format == Format::csv) {
    write_csv(buf, t);
  } else {
    meta["command"] = command;
    meta["passed"] = passed;
    meta["rows"] = table_json(t);
    buf << meta.dump(2) << '\n';
  }
  emit(out, os, buf.str());
}

void emit_report(const Output& out, std::ostream& os, const std::string& command,
                 const Report& r, bool passed) {
  std::ostringstream buf;
  if (out.format == Format::csv) {
    Table t{{"section", "quantity", "value"}, {}};
    for (const auto& [section, quantity, value] : r.entries) {
      t.rows.push_back({section, quantity, value});
    }
    t.rows.push_back({std::string("run"), std::string("passed"), passed});
    write_csv(buf, t);
  } else {
    json doc = json::object();
    doc["command"] = command;
    for (const auto& [section, quantity, value] : r.entries) {
      doc[section][quantity] = cell_json(value);
    }
    doc["passed"] = passed;
    buf << doc.dump(2) << '\n';
  }
  emit(out, os, buf.str());
}

void add_angles(Report& r, const std::string& section, const AngleSet& a) {
  r.add(section, "alpha1", a.alpha1());
  r.add(section, "alpha2", a.alpha2());
  r.add(section, "beta1", a.beta1());
  r.add(section, "beta2", a.beta2());
}

void add_validation(Report& r, const std::string& section, const ValidationReport& v) {
  r.add(section, "hermiticity_deviation", v.hermiticity);
  r.add(section, "involution_deviation", v.involution);
  r.add(section, "commutator_deviation", v.commutator);
  r.add(section, "validation_tolerance", v.tolerance);
  r.add(section, "validation_passed", v.passed);
}

// ---------------------------------------------------------------- spin

struct SpinConfig {
  std::optional<std::string> angles;
  bool corrupt_phase = false;
};

int cmd_spin(const SpinConfig& cfg, const Output& out, std::ostream& os, std::ostream& err) {
  const std::optional<AngleSet> override_angles =
      cfg.angles ? std::optional<AngleSet>(parse_angles(*cfg.angles)) : std::nullopt;
  Report r;
  bool passed = true;

  // Spin 1.
  const spin::SingletState s1 = spin::singlet(spin::Spin::one);
  for (int ma : {1, 0, -1}) {
    for (int mb : {1, 0, -1}) {
      const Complex amp = s1.ket[spin::index_of(spin::Spin::one, ma) * 3 +
                                 spin::index_of(spin::Spin::one, mb)];
      if (amp != Complex(0.0)) {
        r.add("spin_one_singlet",
              "amplitude(" + std::to_string(ma) + "," + std::to_string(mb) + ")", amp.real());
      }
    }
  }
  const AngleSet a1 = override_angles.value_or(spin::spin_one_demo_angles());
  ChshQuadruple q1 = spin::quadruple(spin::Spin::one, a1);
  if (cfg.corrupt_phase) q1.a1 *= Complex(1.01);
  const ValidationReport v1 = validate_quadruple(q1);
  const double closed1 = spin::spin_one_chsh_closed(a1);
  const double matrix1 = chsh_value(s1.ket, q1);
  add_angles(r, "spin_one", a1);
  r.add("spin_one", "chsh_closed", closed1);
  r.add("spin_one", "chsh_matrix", matrix1);
  add_validation(r, "spin_one", v1);
  if (!v1.passed) {
    err << "spin one quadruple failed validation: involution " << v1.involution
        << ", hermiticity " << v1.hermiticity << ", commutator " << v1.commutator
        << " (tolerance " << v1.tolerance << ")\n";
    passed = false;
  }
  if (!cfg.corrupt_phase && std::abs(closed1 - matrix1) > kSpinAgreement) {
    err << "spin one closed form and matrix value disagree\n";
    passed = false;
  }

  // Spin 1/2.
  const spin::SingletState sh = spin::singlet(spin::Spin::half);
  r.add("spin_half_singlet", "amplitude(+,-)", sh.ket[1].real());
  r.add("spin_half_singlet", "amplitude(-,+)", sh.ket[2].real());
  const AngleSet ah = override_angles.value_or(spin::tsirelson_angles());
  const ChshQuadruple qh = spin::quadruple(spin::Spin::half, ah);
  const ValidationReport vh = validate_quadruple(qh);
  const double matrixh = chsh_value(sh.ket, qh);
  const double closedh = spin::spin_half_pair_correlator(ah.alpha1(), ah.beta1()) +
                         spin::spin_half_pair_correlator(ah.alpha2(), ah.beta1()) +
                         spin::spin_half_pair_correlator(ah.alpha1(), ah.beta2()) -
                         spin::spin_half_pair_correlator(ah.alpha2(), ah.beta2());
  add_angles(r, "spin_half", ah);
  r.add("spin_half", "chsh_closed", closedh);
  r.add("spin_half", "chsh_matrix", matrixh);
  r.add("spin_half", "abs_chsh", std::abs(matrixh));
  r.add("spin_half", "tsirelson_bound", 2.0 * kSqrt2);
  add_validation(r, "spin_half", vh);
  if (!vh.passed || std::abs(closedh - matrixh) > kSpinAgreement) {
    err << "spin one-half checks failed\n";
    passed = false;
  }

  const OptimizationResult best = optimize_angles(spin::spin_one_closed_form());
  add_angles(r, "spin_one_optimizer", best.angles);
  r.add("spin_one_optimizer", "value", best.value);

  emit_report(out, os, "spin", r, passed);
  return passed ? kSuccess : kValidationFailure;
}

// ---------------------------------------------------------------- squeeze-scan

struct SqueezeConfig {
  std::string eta_range = "0.05:0.95:19";
  std::size_t cutoff = fock::kDefaultCutoff;
  std::optional<std::string> angles;
};

int cmd_squeeze_scan(const SqueezeConfig& cfg, const Output& out, std::ostream& os,
                     std::ostream& err) {
  if (cfg.cutoff < 4 || cfg.cutoff % 2 != 0) {
    throw ConfigError("--cutoff must be even and at least 4");
  }
  const fock::FockSpace space(cfg.cutoff);
  const AngleSet angles = cfg.angles ? parse_angles(*cfg.angles) : squeezed_optimal_angles();
  std::vector<double> etas = parse_range(cfg.eta_range);
  for (double eta : etas) {
    if (!(eta > 0.0 && eta < 1.0)) {
      throw ConfigError("eta values must lie in the open interval (0, 1), got " +
                        format_real(eta));
    }
  }
  const auto [window_lo, window_hi] = fock::violation_window();
  (void)window_hi;
  // The upper endpoint η = 1 is excluded from the state family; 0.999 stands in for it.
  const std::vector<std::pair<double, std::string>> annotated = {
      {window_lo, "window_lower"}, {0.999, "window_upper_approach"}};

  std::vector<std::pair<double, std::string>> points;
  for (double eta : etas) points.emplace_back(eta, "");
  points.insert(points.end(), annotated.begin(), annotated.end());
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  Table t{{"eta", "chsh_closed", "chsh_oracle", "abs_diff", "tolerance", "violates", "annotation"},
          {}};
  bool passed = true;
  for (const auto& [eta, note] : points) {
    const double closed = fock::chsh_closed(eta, angles);
    const double oracle = fock::chsh_oracle(eta, angles, space);
    const double diff = std::abs(closed - oracle);
    const double tol =
        std::max(1e-8, 20.0 * std::pow(eta, 2.0 * static_cast<double>(space.cutoff())));
    if (diff > tol) {
      err << "eta " << format_real(eta) << ": |closed - oracle| = " << diff
          << " exceeds tolerance " << tol << '\n';
      passed = false;
    }
    t.rows.push_back({eta, closed, oracle, diff, tol, std::abs(closed) > 2.0, note});
  }
  json meta = {{"cutoff", static_cast<long long>(space.cutoff())},
               {"window", {window_lo, 1.0}},
               {"angles", {angles.alpha1(), angles.alpha2(), angles.beta1(), angles.beta2()}}};
  emit_table(out, os, "squeeze-scan", t, std::move(meta), passed);
  return passed ? kSuccess : kValidationFailure;
}

// ---------------------------------------------------------------- optimize

struct OptimizeConfig {
  std::string form = "all";
  double eta = 0.999;
  int grid = 24;
};

int cmd_optimize(const OptimizeConfig& cfg, const Output& out, std::ostream& os) {
  if (cfg.grid < 1) throw ConfigError("--grid must be at least 1");
  if (cfg.form == "squeezed" || cfg.form == "all") {
    if (!(cfg.eta > 0.0 && cfg.eta < 1.0)) throw ConfigError("--eta must lie in (0, 1)");
  }
  Report r;
  const OptimizerOptions opts{cfg.grid};
  if (cfg.form == "spin-one" || cfg.form == "all") {
    const ClosedFormCorrelator cf = spin::spin_one_closed_form();
    const OptimizationResult res = optimize_angles(cf, opts);
    add_angles(r, "spin_one", res.angles);
    r.add("spin_one", "value", res.value);
    r.add("spin_one", "signed_value", cf(res.angles));
  }
  if (cfg.form == "squeezed" || cfg.form == "all") {
    const ClosedFormCorrelator cf = fock::closed_form(cfg.eta);
    const OptimizationResult res = optimize_angles(cf, opts);
    r.add("squeezed", "eta", cfg.eta);
    add_angles(r, "squeezed", res.angles);
    r.add("squeezed", "value", res.value);
    r.add("squeezed", "signed_value", cf(res.angles));
    r.add("squeezed", "analytic_maximum", 2.0 * kSqrt2 * fock::correlation_prefactor(cfg.eta));
  }
  emit_report(out, os, "optimize", r, true);
  return kSuccess;
}

// ---------------------------------------------------------------- kg-norm

struct KgConfig {
  double mass = 1.0;
  std::string center = "0,0,0";
  std::optional<double> energy;
  double width = 1.0;
  std::string amplitude = "1";
  std::string quad = "128,32";
  double k_max = 0.0;
  double tolerance = 1e-10;
  bool normalize = false;
};

int cmd_kg_norm(const KgConfig& cfg, const Output& out, std::ostream& os, std::ostream& err) {
  kg::TestFunction f;
  f.mass = cfg.mass;
  f.width = cfg.width;
  f.center_energy = cfg.energy;
  const std::vector<double> c = parse_list(cfg.center);
  if (c.size() != 3) throw ConfigError("--center expects three components kx,ky,kz");
  f.center = {c[0], c[1], c[2]};
  const std::vector<double> amp = parse_list(cfg.amplitude);
  if (amp.empty() || amp.size() > 2) throw ConfigError("--amplitude expects re or re,im");
  f.amplitude = Complex(amp[0], amp.size() == 2 ? amp[1] : 0.0);
  try {
    f.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  const std::vector<double> qn = parse_list(cfg.quad);
  if (qn.size() != 2 || qn[0] < 1 || qn[1] < 1 || qn[0] != std::floor(qn[0]) ||
      qn[1] != std::floor(qn[1])) {
    throw ConfigError("--quad expects two positive integers R,A");
  }
  kg::ShellQuadrature q;
  q.radial = static_cast<int>(qn[0]);
  q.angular = static_cast<int>(qn[1]);
  q.k_max = cfg.k_max;
  q.tolerance = cfg.tolerance;

  if (cfg.normalize) f = kg::normalize(f, q);
  const kg::NormEstimate est = kg::test_norm(f, q);
  const double relative = est.value > 0.0 ? est.error / est.value : est.error;
  const double scale = 1.0 / std::sqrt(est.value);
  const Complex normalized_amp = f.amplitude * scale;

  Report r;
  r.add("packet", "mass", f.mass);
  r.add("packet", "width", f.width);
  r.add("packet", "center_energy", f.energy_center());
  r.add("packet", "amplitude_re", f.amplitude.real());
  r.add("packet", "amplitude_im", f.amplitude.imag());
  r.add("quadrature", "radial_nodes", static_cast<long long>(q.radial));
  r.add("quadrature", "angular_nodes", static_cast<long long>(q.angular));
  r.add("norm", "norm_squared", est.value);
  r.add("norm", "error_estimate", est.error);
  r.add("norm", "relative_error", relative);
  r.add("norm", "scale_factor", scale);
  r.add("norm", "normalized_amplitude_re", normalized_amp.real());
  r.add("norm", "normalized_amplitude_im", normalized_amp.imag());
  const bool passed = relative <= kNormConvergence;
  if (!passed) {
    err << "norm not converged: relative change " << relative << " under resolution doubling\n";
  }
  emit_report(out, os, "kg-norm", r, passed);
  return passed ? kSuccess : kValidationFailure;
}

// ---------------------------------------------------------------- rindler-scan

struct RindlerConfig {
  std::string modes = "1";
  std::optional<std::string> temp_range;
  std::optional<std::string> accel_range;
};

int cmd_rindler_scan(const RindlerConfig& cfg, const Output& out, std::ostream& os) {
  const std::vector<double> omegas = parse_list(cfg.modes);
  if (omegas.empty()) throw ConfigError("--modes must list at least one frequency");
  for (double w : omegas) {
    if (!(w > 0.0)) throw ConfigError("mode frequencies must be positive");
  }
  if (!std::is_sorted(omegas.begin(), omegas.end())) {
    throw ConfigError("mode frequencies must be listed in ascending order");
  }
  std::vector<double> temps;
  if (cfg.accel_range) {
    for (double a : parse_range(*cfg.accel_range)) {
      if (!(a > 0.0)) throw ConfigError("accelerations must be positive");
      temps.push_back(a / (2.0 * kPi));
    }
  } else {
    temps = parse_range(cfg.temp_range.value_or("0.05:5:100"));
  }
  for (std::size_t i = 0; i < temps.size(); ++i) {
    if (!(temps[i] > 0.0)) throw ConfigError("temperatures must be positive");
    if (i > 0 && !(temps[i] > temps[i - 1])) {
      throw ConfigError("temperature grid must be strictly ascending");
    }
  }
  const std::vector<rindler::ScanRow> rows = rindler::temperature_scan(omegas, temps);
  Table t{{"T", "tau", "chsh", "flag"}, {}};
  for (const auto& row : rows) t.rows.push_back({row.temperature, row.tau, row.chsh, row.flag});
  json meta = {{"modes", omegas}};
  emit_table(out, os, "rindler-scan", t, std::move(meta), true);
  return kSuccess;
}

void add_output_options(CLI::App* sub, Output& out, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", out.path,
                  std::string("Output file (relative paths resolve against $") + kOutputDirEnv +
                      "); standard output when omitted");
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s = trim(text);
  std::erase(s, ' ');
  if (s.empty()) throw ConfigError("empty angle");
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return parse_real(s, "angle");
    const double den = parse_real(s.substr(slash + 1), "angle denominator");
    if (den == 0.0) throw ConfigError("angle denominator is zero in '" + s + "'");
    return parse_real(s.substr(0, slash), "angle") / den;
  }
  std::string coef = s.substr(0, pi_pos);
  const std::string rest = s.substr(pi_pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (coef == "+") {
    factor = 1.0;
  } else if (!coef.empty()) {
    factor = parse_real(coef, "angle coefficient");
  }
  double den = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError("cannot parse angle '" + s + "'");
    den = parse_real(rest.substr(1), "angle denominator");
    if (den == 0.0) throw ConfigError("angle denominator is zero in '" + s + "'");
  }
  return factor * kPi / den;
}

AngleSet parse_angles(std::string_view text) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 4) throw ConfigError("--angles expects four values a1,a2,b1,b2");
  return AngleSet(parse_angle(parts[0]), parse_angle(parts[1]), parse_angle(parts[2]),
                  parse_angle(parts[3]));
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> values;
  for (const std::string& p : split(text, ',')) values.push_back(parse_real(p, "list value"));
  return values;
}

std::vector<double> parse_range(std::string_view text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("range '" + std::string(text) + "' is not LO:HI:STEPS");
  const double lo = parse_real(parts[0], "range start");
  const double hi = parse_real(parts[1], "range end");
  const double steps_real = parse_real(parts[2], "range steps");
  if (steps_real < 1.0 || steps_real != std::floor(steps_real)) {
    throw ConfigError("range steps must be a positive integer");
  }
  if (hi < lo) throw ConfigError("range '" + std::string(text) + "' is empty (HI < LO)");
  const auto steps = static_cast<std::size_t>(steps_real);
  std::vector<double> values(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    values[i] = steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  if (steps > 1) values.back() = hi;
  return values;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell-CHSH correlators for spin singlets, squeezed oscillators, smeared fields "
               "and Rindler modes"};
  app.require_subcommand(1);

  Output output;
  std::string format = "csv";

  SpinConfig spin_cfg;
  auto* spin_cmd = app.add_subcommand("spin", "Spin-1 and spin-1/2 singlet CHSH values");
  spin_cmd->add_option("--angles", spin_cfg.angles, "Angle override a1,a2,b1,b2 (radians)");
  spin_cmd->add_flag("--debug-corrupt-phase", spin_cfg.corrupt_phase,
                     "Scale A1 off the unit circle to exercise validation failure");
  add_output_options(spin_cmd, output, format);

  SqueezeConfig sq_cfg;
  auto* sq_cmd = app.add_subcommand("squeeze-scan", "Closed form vs Fock-matrix CHSH over eta");
  sq_cmd->add_option("--eta-range", sq_cfg.eta_range, "LO:HI:STEPS")->capture_default_str();
  sq_cmd->add_option("--cutoff", sq_cfg.cutoff, "Fock levels per mode (even, >= 4)")
      ->capture_default_str();
  sq_cmd->add_option("--angles", sq_cfg.angles, "Angle override a1,a2,b1,b2 (radians)");
  add_output_options(sq_cmd, output, format);

  OptimizeConfig opt_cfg;
  auto* opt_cmd = app.add_subcommand("optimize", "Maximize |CHSH| over measurement angles");
  opt_cmd->add_option("--form", opt_cfg.form, "Correlator to optimize")
      ->check(CLI::IsMember({"spin-one", "squeezed", "all"}))
      ->capture_default_str();
  opt_cmd->add_option("--eta", opt_cfg.eta, "Squeezing parameter in (0, 1)")
      ->capture_default_str();
  opt_cmd->add_option("--grid", opt_cfg.grid, "Grid points per angle")->capture_default_str();
  add_output_options(opt_cmd, output, format);

  KgConfig kg_cfg;
  auto* kg_cmd = app.add_subcommand("kg-norm", "Mass-shell norm of a Gaussian test function");
  kg_cmd->add_option("--mass", kg_cfg.mass, "Field mass")->capture_default_str();
  kg_cmd->add_option("--center", kg_cfg.center, "Center momentum kx,ky,kz")
      ->capture_default_str();
  kg_cmd->add_option("--energy", kg_cfg.energy, "Center energy (default: on shell)");
  kg_cmd->add_option("--width", kg_cfg.width, "Spacetime width sigma_x")->capture_default_str();
  kg_cmd->add_option("--amplitude", kg_cfg.amplitude, "Amplitude re or re,im")
      ->capture_default_str();
  kg_cmd->add_option("--quad", kg_cfg.quad, "Radial,angular node counts")->capture_default_str();
  kg_cmd->add_option("--kmax", kg_cfg.k_max, "Radial cutoff (0 = automatic)")
      ->capture_default_str();
  kg_cmd->add_option("--tolerance", kg_cfg.tolerance, "Absolute quadrature tail tolerance")
      ->capture_default_str();
  kg_cmd->add_flag("--normalize", kg_cfg.normalize, "Normalize before reporting");
  add_output_options(kg_cmd, output, format);

  RindlerConfig r_cfg;
  auto* r_cmd = app.add_subcommand("rindler-scan", "Form factor and CHSH versus Unruh temperature");
  r_cmd->add_option("--modes", r_cfg.modes, "Mode frequencies w1,w2,... (ascending)")
      ->capture_default_str();
  auto* temp_opt = r_cmd->add_option("--temp-range", r_cfg.temp_range, "LO:HI:STEPS in T");
  auto* accel_opt = r_cmd->add_option("--accel-range", r_cfg.accel_range, "LO:HI:STEPS in a");
  temp_opt->excludes(accel_opt);
  add_output_options(r_cmd, output, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }
  output.format = format == "json" ? Format::json : Format::csv;

  try {
    if (spin_cmd->parsed()) return cmd_spin(spin_cfg, output, out, err);
    if (sq_cmd->parsed()) return cmd_squeeze_scan(sq_cfg, output, out, err);
    if (opt_cmd->parsed()) return cmd_optimize(opt_cfg, output, out);
    if (kg_cmd->parsed()) return cmd_kg_norm(kg_cfg, output, out, err);
    if (r_cmd->parsed()) return cmd_rindler_scan(r_cfg, output, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kValidationFailure;
  }
  return kConfigError;
}

}  // namespace chsh::cli
