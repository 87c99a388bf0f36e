#include "rotameniscus/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "rotameniscus/approximant.hpp"
#include "rotameniscus/asymptotics.hpp"
#include "rotameniscus/bubble_series.hpp"
#include "rotameniscus/errors.hpp"
#include "rotameniscus/format.hpp"
#include "rotameniscus/meniscus_series.hpp"
#include "rotameniscus/shape.hpp"
#include "rotameniscus/tensiometer.hpp"

namespace rotameniscus {

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kDigits = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json summary;  // JSON only
};

// Options shared by every subcommand.
struct Common {
  std::string format = "csv";
  std::string out;
  double tol = 1e-10;
};

struct Run {
  std::ostream& out;
  std::ostream& err;
  Common common;
  std::string command;
};

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v, kDigits);
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

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return round_significant(v, kDigits);
        } else {
          return v;
        }
      },
      c);
}

void write_table(const Table& t, Run& run) {
  std::ostringstream text;
  if (run.common.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = run.command;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& c : row) r.push_back(json_cell(c));
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (!t.summary.is_null()) j["summary"] = t.summary;
    text << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < t.columns.size(); ++i) text << (i ? "," : "") << t.columns[i];
    text << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) text << (i ? "," : "") << csv_cell(row[i]);
      text << '\n';
    }
  }
  if (run.common.out.empty()) {
    run.out << text.str();
    return;
  }
  std::ofstream file(run.common.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + run.common.out + "'");
  file << text.str();
}

void write_text(const std::string& text, Run& run) {
  if (run.common.out.empty()) {
    run.out << text;
    return;
  }
  std::ofstream file(run.common.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + run.common.out + "'");
  file << text;
}

double parse_or_throw(const std::string& s, const std::string& what) {
  auto v = parse_number(s);
  if (!v) throw UsageError("bad number '" + s + "' in " + what);
  return *v;
}

/// "a:b:n" -> n evenly spaced values from a to b inclusive.
std::vector<double> parse_range(const std::string& text, const std::string& what, bool geometric = false) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError(what + " must have the form a:b:n");
  const double a = parse_or_throw(parts[0], what);
  const double b = parse_or_throw(parts[1], what);
  const double n = parse_or_throw(parts[2], what);
  if (!(n >= 1) || n != std::floor(n) || n > 1e7) throw UsageError(what + ": n must be a positive integer");
  if (geometric && !(a > 0 && b > 0)) throw UsageError(what + ": geometric range needs positive ends");
  const auto count = static_cast<std::size_t>(n);
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    v[i] = geometric ? a * std::pow(b / a, f) : a + (b - a) * f;
  }
  v.back() = count == 1 ? a : b;
  return v;
}

SolvePrecision precision_from_env() {
  const char* env = std::getenv("ROTAMENISCUS_PRECISION");
  if (!env || !*env) return SolvePrecision::automatic;
  const std::string v(env);
  if (v == "extended") return SolvePrecision::extended;
  if (v == "double") return SolvePrecision::double_precision;
  throw UsageError("ROTAMENISCUS_PRECISION must be 'extended' or 'double'");
}

quadrature::Options quad_options(const Common& c) {
  quadrature::Options opt;
  opt.rel_tol = c.tol;
  opt.abs_tol = c.tol * 1e-2;
  return opt;
}

// Geometry/contact angle flags shared by several subcommands.
struct GeometryFlags {
  std::string geometry = "meniscus";
  double alpha_deg = 90.0;
  CLI::Option* alpha_opt = nullptr;

  void add(CLI::App* app) {
    app->add_option("--geometry", geometry, "meniscus or bubble")
        ->check(CLI::IsMember({"meniscus", "bubble"}))
        ->capture_default_str();
    alpha_opt = app->add_option("--alpha", alpha_deg, "contact angle in degrees (meniscus)")
                    ->check(CLI::Range(0.0, 180.0))
                    ->capture_default_str();
  }

  Interface interface() const {
    if (geometry == "bubble") {
      if (alpha_opt->count() > 0 && alpha_deg != 0.0) {
        throw UsageError("a bubble has alpha = 0; --alpha is only for the meniscus");
      }
      return Interface::bubble();
    }
    return Interface::meniscus(ContactAngle::degrees(alpha_deg));
  }
};

struct LambdaFlags {
  std::vector<double> lambdas;
  std::string range;

  void add(CLI::App* app, bool required = true) {
    auto* l = app->add_option("--lambda", lambdas, "rotational Bond number (repeatable)");
    auto* r = app->add_option("--lambda-range", range, "a:b:n evenly spaced values");
    if (required) {
      auto* group = app->add_option_group("lambda");
      group->add_option(l);
      group->add_option(r);
      group->require_option(1);
    }
  }

  std::vector<double> values() const {
    std::vector<double> v = lambdas;
    if (!range.empty()) {
      auto r = parse_range(range, "--lambda-range");
      v.insert(v.end(), r.begin(), r.end());
    }
    return v;
  }
};

Table critical_table(double alpha_deg, const std::vector<double>& lambdas) {
  const auto alpha = ContactAngle::degrees(alpha_deg);
  const auto cp = critical_params(alpha);
  Table t;
  if (lambdas.empty()) {
    t.columns = {"alpha_deg", "lambda_c", "r_c", "lambda_min", "r_w"};
    t.rows.push_back({alpha_deg, cp.lambda_c, cp.r_c, lambda_min(alpha), master_rescale(alpha).r_w});
    return t;
  }
  // Location and value of the slope maximum; below lambda_min it sits at the wall.
  t.columns = {"alpha_deg", "lambda", "r_max", "max_sin_theta"};
  for (double lambda : lambdas) {
    if (!(lambda >= 0.0)) throw DomainError("rotational Bond number must be non-negative");
    if (lambda > lambda_min(alpha)) {
      t.rows.push_back({alpha_deg, lambda, inflection_radius(alpha, lambda), max_sin_theta(alpha, lambda)});
    } else {
      t.rows.push_back({alpha_deg, lambda, 1.0, sin_theta(1.0, alpha, lambda)});
    }
  }
  return t;
}

Table shape_table(const Interface& iface, const std::vector<double>& lambdas,
                  std::size_t nodes, bool full, bool sin_only, const quadrature::Options& opt) {
  Table t;
  if (sin_only) {
    t.columns = {"lambda", "r", "sin_theta"};
    const auto grid = make_grid(nodes, Clustering::uniform);
    for (double lambda : lambdas) {
      if (!(lambda >= 0.0)) throw DomainError("rotational Bond number must be non-negative");
      for (double r : grid) t.rows.push_back({lambda, r, sin_theta(r, iface.alpha, lambda)});
    }
    return t;
  }
  t.columns = {"lambda", "r", "h", "sin_theta"};
  for (double lambda : lambdas) {
    const auto p = profile(iface, lambda, GridSpec{nodes, std::nullopt}, opt);
    const auto samples = (full && iface.geometry == Geometry::bubble) ? p.full_outline() : p.samples;
    for (const auto& s : samples) t.rows.push_back({lambda, s.r, s.h, s.sin_theta});
  }
  return t;
}

std::size_t default_order(Geometry g) { return g == Geometry::bubble ? 15 : 20; }

Approximant approximant_for(Geometry g, std::size_t N, const BuildOptions& opt) {
  return g == Geometry::bubble ? bubble_approximant(N, opt) : meniscus_approximant(N, opt);
}

void require_normal(const GeometryFlags& gf, const std::string& what) {
  if (gf.geometry == "meniscus" && gf.alpha_deg != 90.0) {
    throw UsageError(what + " is available for the meniscus only at alpha = 90");
  }
}

Table length_table(Run& run, const GeometryFlags& gf, const std::vector<double>& lambdas,
                   const std::string& method, std::optional<std::size_t> terms) {
  const auto iface = gf.interface();
  const bool bubble = iface.geometry == Geometry::bubble;
  Table t;
  if (method == "quadrature") {
    t.columns = {"lambda", "H"};
    for (double lambda : lambdas) {
      t.rows.push_back({lambda, axial_length_quadrature(iface, lambda, quad_options(run.common))});
    }
    return t;
  }
  require_normal(gf, "--method " + method);
  if (method == "series") {
    t.columns = {"lambda", "H", "tail_estimate", "terms", "converged"};
    for (double lambda : lambdas) {
      SeriesSum s;
      if (terms) {
        s = bubble ? bubble_H_series(lambda, *terms) : meniscus_H_series(lambda, *terms);
      } else {
        const SeriesControl control{std::max(run.common.tol * 1e-3, 1e-16), 5000};
        s = bubble ? bubble_H_series(lambda, control) : meniscus_H_series(lambda, control);
      }
      if (s.divergent) {
        run.err << "warning: series diverges at lambda = " << format_number(lambda, kDigits) << '\n';
      } else if (!terms && !s.converged) {
        run.err << "warning: series not converged at lambda = " << format_number(lambda, kDigits)
                << " (tail estimate " << format_number(s.tail_estimate, 3) << ")\n";
      }
      t.rows.push_back({lambda, s.value, s.tail_estimate, static_cast<long long>(s.terms), s.converged});
    }
    return t;
  }
  if (method == "asymptotic") {
    t.columns = {"lambda", "H", "valid"};
    const auto law = bubble ? bubble_law() : meniscus_law();
    for (double lambda : lambdas) {
      const auto a = bubble ? bubble_H_asymptotic(lambda) : meniscus_H_asymptotic(lambda);
      if (!a.valid) {
        run.err << "warning: asymptotic law outside its validity range at lambda = "
                << format_number(lambda, kDigits) << " (lambda_c - lambda > "
                << format_number(law.valid_below, kDigits) << ")\n";
      }
      t.rows.push_back({lambda, a.H, a.valid});
    }
    return t;
  }
  // approximant
  const auto appr = approximant_for(iface.geometry, terms.value_or(default_order(iface.geometry)),
                                    {ApproximantMode::pinned_constant, precision_from_env()});
  t.columns = {"lambda", "H"};
  for (double lambda : lambdas) t.rows.push_back({lambda, eval_approximant(appr, lambda)});
  return t;
}

Table series_table(const GeometryFlags& gf, std::size_t terms, bool explicit_path) {
  require_normal(gf, "the series");
  const bool bubble = gf.geometry == "bubble";
  Table t;
  if (bubble) {
    const auto s = bubble_power_series(terms);
    const auto scaled = bubble_scaled_coefficients(terms);
    t.columns = {"n", "coefficient", "scaled_coefficient"};
    if (explicit_path) t.columns.push_back("explicit_coefficient");
    for (std::size_t n = 0; n <= terms; ++n) {
      std::vector<Cell> row{static_cast<long long>(n), s.coefficients[n], scaled[n]};
      if (explicit_path) row.push_back(explicit_Cp(n));
      t.rows.push_back(std::move(row));
    }
    return t;
  }
  if (explicit_path) throw UsageError("--explicit applies to the bubble series");
  const auto c = meniscus_coefficients_extended(terms);
  const auto scaled = meniscus_scaled_coefficients(terms);
  t.columns = {"n", "coefficient", "scaled_coefficient"};
  for (std::size_t n = 0; n <= terms; ++n) {
    t.rows.push_back({static_cast<long long>(n), static_cast<double>(c[n]), scaled[n]});
  }
  return t;
}

Table approximant_coefficients(const Approximant& a) {
  Table t;
  t.columns = {"n", "A_n"};
  for (std::size_t n = 0; n < a.A.size(); ++n) t.rows.push_back({static_cast<long long>(n), a.A[n]});
  t.summary["lambda_c"] = round_significant(a.lambda_c, kDigits);
  t.summary["A_L"] = round_significant(a.A_L, kDigits);
  t.summary["B_L"] = round_significant(a.B_L, kDigits);
  t.summary["N"] = a.order();
  t.summary["mode"] = a.mode == ApproximantMode::pinned_constant ? "pinned" : "free";
  return t;
}

Approximant read_approximant(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read approximant file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

Table asymptote_table(Run& run, const std::string& geometry, const std::string& eps_range) {
  const bool bubble = geometry == "bubble";
  Table t;
  if (eps_range.empty()) {
    const auto& c = bubble ? compute_bubble_constant() : compute_meniscus_H0();
    const auto law = bubble ? bubble_law() : meniscus_law();
    t.columns = {"geometry", "lambda_c", "log_coefficient", "closed_form", "correction", "constant",
                 "published_constant"};
    t.rows.push_back({std::string(bubble ? "bubble" : "meniscus"), law.lambda_c, law.log_coefficient,
                      c.closed_form, c.correction, c.value, law.constant});
    auto eps = nlohmann::ordered_json::array();
    auto corr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.eps.size(); ++i) {
      eps.push_back(round_significant(c.eps[i], kDigits));
      corr.push_back(round_significant(c.corrections[i], kDigits));
    }
    t.summary["eps"] = eps;
    t.summary["correction_integrals"] = corr;
    t.summary["extrapolation_spread"] = round_significant(c.spread, kDigits);
    return t;
  }
  const auto law = bubble ? bubble_law() : meniscus_law();
  const Interface iface =
      bubble ? Interface::bubble() : Interface::meniscus(ContactAngle::degrees(90.0));
  t.columns = {"eps", "lambda", "H_quadrature", "H_asymptotic"};
  for (double eps : parse_range(eps_range, "--eps-range", true)) {
    const double lambda = law.lambda_c - eps;
    t.rows.push_back({eps, lambda, axial_length_quadrature(iface, lambda, quad_options(run.common)), law(lambda)});
  }
  return t;
}

Table volume_table(Run& run, const std::vector<double>& lambdas) {
  Table t;
  t.columns = {"lambda", "H", "V", "pi_H", "V_minus_pi_H"};
  const auto opt = quad_options(run.common);
  for (double lambda : lambdas) {
    const double H = axial_length_quadrature(Interface::bubble(), lambda, opt);
    const double V = bubble_volume(lambda, opt);
    t.rows.push_back({lambda, H, V, std::numbers::pi * H, volume_offset(lambda, opt)});
  }
  return t;
}

InversionMethod inversion_method(const std::string& m) {
  if (m == "quadrature") return InversionMethod::quadrature;
  if (m == "asymptotic") return InversionMethod::asymptotic;
  return InversionMethod::approximant;
}

struct InvertFlags {
  std::vector<double> H;
  std::string H_range;
  std::optional<double> omega, radius, rho;
  std::string method = "approximant";
};

Table invert_table(const InvertFlags& f) {
  std::vector<double> Hs = f.H;
  if (!f.H_range.empty()) {
    auto r = parse_range(f.H_range, "--H-range");
    Hs.insert(Hs.end(), r.begin(), r.end());
  }
  const bool physical = f.omega || f.radius || f.rho;
  if (physical && !(f.omega && f.radius && f.rho)) {
    throw UsageError("--omega, --radius and --rho must be given together");
  }
  const auto method = inversion_method(f.method);
  Table t;
  t.columns = {"H", "lambda", "delta_percent", "delta_percent_asymptotic"};
  if (physical) {
    t.columns.push_back("sigma_assumed_critical");
    t.columns.push_back("sigma_corrected");
  }
  for (double H : Hs) {
    const double lambda = lambda_from_H(H, method);
    std::vector<Cell> row{H, lambda, 100.0 * (1.0 - lambda / 4.0), delta_percent_asymptotic(H)};
    if (physical) {
      const TensiometerReading reading{*f.omega, *f.radius, *f.rho, H};
      row.push_back(sigma_assuming_critical(reading));
      row.push_back(sigma_corrected(reading, method));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table error_scan_table(Run& run, const GeometryFlags& gf, std::size_t N, std::size_t points,
                       std::optional<double> closest) {
  require_normal(gf, "the approximant");
  const auto iface = gf.interface();
  const auto appr = approximant_for(iface.geometry, N, {ApproximantMode::pinned_constant, precision_from_env()});
  const double nearest = closest.value_or(iface.geometry == Geometry::bubble ? 1e-6 : 1e-3);
  if (!(nearest > 0.0)) throw UsageError("--closest must be positive");
  std::vector<double> grid;
  for (std::size_t i = 0; i < points; ++i) {
    grid.push_back(appr.lambda_c * static_cast<double>(i) / static_cast<double>(points));
  }
  // Eight points per decade towards lambda_c.
  for (double e = 0.1; e >= nearest * 0.999; e /= std::pow(10.0, 0.125)) grid.push_back(appr.lambda_c - e);
  const auto opt = quad_options(run.common);
  const auto scan = error_scan(appr, [&](double l) { return axial_length_quadrature(iface, l, opt); }, grid);
  Table t;
  t.columns = {"lambda", "H_approximant", "H_quadrature", "error"};
  for (const auto& p : scan.points) t.rows.push_back({p.lambda, p.approximant, p.reference, p.error});
  t.summary["N"] = N;
  t.summary["max_error"] = round_significant(scan.max_error, kDigits);
  t.summary["argmax"] = round_significant(scan.argmax, kDigits);
  return t;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app->add_option("--out", c.out, "write to this file instead of stdout");
  app->add_option("--tol", c.tol, "relative quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-gravity interface shapes and axial lengths under rigid rotation", "rotameniscus"};
  app.require_subcommand(1);
  Run run{out, err, {}, {}};

  // critical
  auto* critical = app.add_subcommand("critical", "critical Bond number and radius for a contact angle");
  double crit_alpha = 90.0;
  std::string crit_range;
  critical->add_option("--alpha", crit_alpha, "contact angle in degrees")->check(CLI::Range(0.0, 180.0))->capture_default_str();
  critical->add_option("--lambda-range", crit_range, "a:b:n table of the slope maximum");
  Common critical_common;
  add_common(critical, critical_common);

  // shape
  auto* shape = app.add_subcommand("shape", "interface profile h(r) and sin(theta)");
  GeometryFlags shape_geo;
  LambdaFlags shape_lambda;
  std::size_t nodes = 201;
  bool full = false, sin_only = false;
  shape_geo.add(shape);
  shape_lambda.add(shape);
  shape->add_option("--nodes", nodes, "radial nodes")->check(CLI::Range(2, 10000000))->capture_default_str();
  shape->add_flag("--full", full, "bubble: closed outline (both halves)");
  shape->add_flag("--sin-theta-only", sin_only, "only sin(theta); allowed at and beyond lambda_c");
  Common shape_common;
  add_common(shape, shape_common);

  // length
  auto* length = app.add_subcommand("length", "axial length H");
  GeometryFlags length_geo;
  LambdaFlags length_lambda;
  std::string method = "quadrature";
  std::optional<std::size_t> length_terms;
  length_geo.add(length);
  length_lambda.add(length);
  length->add_option("--method", method, "quadrature, series, asymptotic or approximant")
      ->check(CLI::IsMember({"quadrature", "series", "asymptotic", "approximant"}))
      ->capture_default_str();
  length->add_option("--terms", length_terms, "series terms or approximant order")->check(CLI::PositiveNumber);
  Common length_common;
  add_common(length, length_common);

  // series
  auto* series = app.add_subcommand("series", "Taylor coefficients of H(lambda)");
  GeometryFlags series_geo;
  std::size_t series_terms = 20;
  bool explicit_path = false;
  series_geo.add(series);
  series->add_option("--terms", series_terms, "highest order")->check(CLI::Range(0, 100000))->capture_default_str();
  series->add_flag("--explicit", explicit_path, "bubble: add the Gamma-sum coefficients");
  Common series_common;
  add_common(series, series_common);

  // approximant
  auto* approx = app.add_subcommand("approximant", "asymptotic approximants");
  approx->require_subcommand(1);
  auto* build = approx->add_subcommand("build", "build and print the plain-text record");
  auto* exporter = approx->add_subcommand("export", "coefficient table of a record or a fresh build");
  auto* eval = approx->add_subcommand("eval", "evaluate H_A");
  GeometryFlags approx_geo;
  std::optional<std::size_t> approx_terms;
  std::string approx_mode = "pinned";
  std::string approx_in;
  LambdaFlags approx_lambda;
  Common approx_common;
  for (auto* sub : {build, exporter, eval}) {
    approx_geo.add(sub);
    sub->add_option("--terms", approx_terms, "approximant order N")->check(CLI::PositiveNumber);
    sub->add_option("--mode", approx_mode, "pinned (A_0 = 0) or free")
        ->check(CLI::IsMember({"pinned", "free"}))
        ->capture_default_str();
    if (sub != build) sub->add_option("--in", approx_in, "read the record from this file");
    if (sub == eval) approx_lambda.add(sub);
    add_common(sub, approx_common);
  }

  // asymptote
  auto* asymptote = app.add_subcommand("asymptote", "near-critical constants, or quadrature vs asymptote");
  std::string asym_geometry = "meniscus", eps_range;
  asymptote->add_option("--geometry", asym_geometry, "meniscus (alpha = 90) or bubble")
      ->check(CLI::IsMember({"meniscus", "bubble"}))
      ->capture_default_str();
  asymptote->add_option("--eps-range", eps_range, "a:b:n geometric values of lambda_c - lambda");
  Common asym_common;
  add_common(asymptote, asym_common);

  // volume
  auto* volume = app.add_subcommand("volume", "bubble volume and length");
  LambdaFlags volume_lambda;
  volume_lambda.add(volume);
  Common volume_common;
  add_common(volume, volume_common);

  // invert
  auto* invert = app.add_subcommand("invert", "tensiometer: lambda from H, surface tension");
  InvertFlags inv;
  auto* h_opt = invert->add_option("--H", inv.H, "bubble length / maximum radius (repeatable)");
  auto* hr_opt = invert->add_option("--H-range", inv.H_range, "a:b:n evenly spaced values");
  auto* h_group = invert->add_option_group("H");
  h_group->add_option(h_opt);
  h_group->add_option(hr_opt);
  h_group->require_option(1);
  invert->add_option("--omega", inv.omega, "angular velocity, rad/s");
  invert->add_option("--radius", inv.radius, "maximum bubble radius, m");
  invert->add_option("--rho", inv.rho, "density difference, kg/m^3");
  invert->add_option("--method", inv.method, "approximant, quadrature or asymptotic")
      ->check(CLI::IsMember({"approximant", "quadrature", "asymptotic"}))
      ->capture_default_str();
  Common invert_common;
  add_common(invert, invert_common);

  // error-scan
  auto* scan = app.add_subcommand("error-scan", "pointwise approximant error against quadrature");
  GeometryFlags scan_geo;
  std::optional<std::size_t> scan_terms;
  std::size_t points = 400;
  std::optional<double> closest;
  scan_geo.add(scan);
  scan->add_option("--terms", scan_terms, "approximant order N")->check(CLI::PositiveNumber);
  scan->add_option("--points", points, "uniform points on [0, lambda_c)")->check(CLI::Range(1, 1000000))->capture_default_str();
  scan->add_option("--closest", closest, "smallest lambda_c - lambda in the geometric tail");
  Common scan_common;
  add_common(scan, scan_common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (critical->parsed()) {
      run.common = critical_common;
      run.command = "critical";
      std::vector<double> lambdas;
      if (!crit_range.empty()) lambdas = parse_range(crit_range, "--lambda-range");
      write_table(critical_table(crit_alpha, lambdas), run);
    } else if (shape->parsed()) {
      run.common = shape_common;
      run.command = "shape";
      write_table(shape_table(shape_geo.interface(), shape_lambda.values(), nodes, full,
                              sin_only, quad_options(run.common)),
                  run);
    } else if (length->parsed()) {
      run.common = length_common;
      run.command = "length";
      write_table(length_table(run, length_geo, length_lambda.values(), method, length_terms), run);
    } else if (series->parsed()) {
      run.common = series_common;
      run.command = "series";
      write_table(series_table(series_geo, series_terms, explicit_path), run);
    } else if (approx->parsed()) {
      run.common = approx_common;
      const BuildOptions bopt{approx_mode == "free" ? ApproximantMode::free_constant : ApproximantMode::pinned_constant,
                              precision_from_env()};
      auto make = [&] {
        if (!approx_in.empty()) return read_approximant(approx_in);
        require_normal(approx_geo, "the approximant");
        const auto g = approx_geo.interface().geometry;
        return approximant_for(g, approx_terms.value_or(default_order(g)), bopt);
      };
      if (build->parsed()) {
        run.command = "approximant build";
        write_text(serialize(make()), run);
      } else if (exporter->parsed()) {
        run.command = "approximant export";
        write_table(approximant_coefficients(make()), run);
      } else {
        run.command = "approximant eval";
        const auto a = make();
        Table t;
        t.columns = {"lambda", "H"};
        for (double lambda : approx_lambda.values()) t.rows.push_back({lambda, eval_approximant(a, lambda)});
        write_table(t, run);
      }
    } else if (asymptote->parsed()) {
      run.common = asym_common;
      run.command = "asymptote";
      write_table(asymptote_table(run, asym_geometry, eps_range), run);
    } else if (volume->parsed()) {
      run.common = volume_common;
      run.command = "volume";
      write_table(volume_table(run, volume_lambda.values()), run);
    } else if (invert->parsed()) {
      run.common = invert_common;
      run.command = "invert";
      write_table(invert_table(inv), run);
    } else if (scan->parsed()) {
      run.common = scan_common;
      run.command = "error-scan";
      const auto g = scan_geo.geometry == "bubble" ? Geometry::bubble : Geometry::meniscus;
      write_table(error_scan_table(run, scan_geo, scan_terms.value_or(default_order(g)), points, closest), run);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace rotameniscus
