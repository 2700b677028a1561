// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver for the transformed-trapezoidal quadrature library:
// one-shot integration, deterministic and randomized convergence studies,
// trigonometric-interpolation approximation studies, and rank-1 lattice
// integration in several dimensions. Emits CSV or JSON reports.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mobiusquad/baselines.hpp"
#include "mobiusquad/multivariate.hpp"
#include "mobiusquad/quadrature.hpp"
#include "mobiusquad/randomized.hpp"
#include "mobiusquad/trig_approx.hpp"
#include "mobiusquad/weights.hpp"

namespace {

using namespace mobiusquad;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_value(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

// --- integrand grammar: abs-pow:P | constant:V | poly:c0,c1,... | exp:A ---

struct IntegrandSpec {
  std::string text;
  RealFunction fn;
  std::optional<int> abs_power;  // set for abs-pow:P, enables --reference auto
  std::optional<double> constant;
};

IntegrandSpec parse_integrand(const std::string& text) {
  IntegrandSpec spec;
  spec.text = text;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (head == "abs-pow") {
    const int p = std::stoi(tail);
    if (p < 0) throw UsageError("abs-pow exponent must be nonnegative");
    spec.abs_power = p;
    spec.fn = [p](double x) { return std::pow(std::abs(x), p); };
  } else if (head == "constant") {
    const double v = tail.empty() ? 1.0 : std::stod(tail);
    spec.constant = v;
    spec.fn = [v](double) { return v; };
  } else if (head == "poly") {
    std::vector<double> coeffs;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stod(item));
    if (coeffs.empty()) throw UsageError("poly needs at least one coefficient");
    spec.fn = [coeffs](double x) {
      double acc = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
  } else if (head == "exp") {
    const double a = tail.empty() ? 1.0 : std::stod(tail);
    spec.fn = [a](double x) { return std::exp(a * x); };
  } else {
    throw UsageError("unknown integrand '" + text +
                     "' (expected abs-pow:P, constant:V, poly:c0,c1,..., or exp:A)");
  }
  return spec;
}

WeightFunction parse_weight(const std::string& name, double param) {
  if (name == "gaussian") return gaussian_weight(param);
  if (name == "logistic") return logistic_weight(param);
  throw UsageError("unknown weight '" + name + "' (expected gaussian or logistic)");
}

std::vector<int> parse_ladder(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--n-ladder expects FROM:TO");
  const int from = std::stoi(text.substr(0, colon));
  const int to = std::stoi(text.substr(colon + 1));
  if (from < 1 || to < from) throw UsageError("--n-ladder bounds must satisfy 1 <= FROM <= TO");
  std::vector<int> ns;
  for (int n = from; n <= to; n *= 2) ns.push_back(n);
  return ns;
}

double resolve_reference(const std::string& reference, const IntegrandSpec& integrand,
                         const WeightFunction& weight, int dim) {
  if (reference != "auto") return std::stod(reference);
  if (integrand.constant) return *integrand.constant;  // built-in weights are normalized
  if (!integrand.abs_power) {
    throw UsageError("--reference auto requires an abs-pow or constant integrand");
  }
  if (weight.param != 1.0) {
    throw UsageError("--reference auto requires the unit-scale gaussian or logistic weight");
  }
  const double one_dim = reference_abs_power_integral(weight.kind, *integrand.abs_power);
  return std::pow(one_dim, dim);
}

void write_report(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << body;
}

void validate_thread_cap() {
  const char* env = std::getenv("MOBIUS_QUAD_THREADS");
  if (env == nullptr) return;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    throw UsageError("MOBIUS_QUAD_THREADS must be a positive integer");
  }
  // The current implementation is single-threaded, so any cap >= 1 holds.
}

std::string csv_convergence(const ConvergenceReport& report) {
  std::ostringstream os;
  os << "n,estimate,abs_error\n";
  for (const auto& e : report.entries) {
    os << e.n << "," << format_value(e.estimate) << "," << format_value(e.abs_error) << "\n";
  }
  os << "# slope=" << (report.fitted_slope ? format_value(*report.fitted_slope) : "undefined")
     << "\n";
  return os.str();
}

nlohmann::json json_convergence(const ConvergenceReport& report) {
  nlohmann::json j;
  j["reference"] = report.reference;
  j["error_floor"] = report.error_floor;
  j["fit_window"] = {report.fit_window.first, report.fit_window.second};
  if (report.fitted_slope) {
    j["fitted_slope"] = *report.fitted_slope;
  } else {
    j["fitted_slope"] = nullptr;
  }
  j["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    j["entries"].push_back({{"n", e.n}, {"estimate", e.estimate}, {"abs_error", e.abs_error}});
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Transformed trapezoidal quadrature for weighted integrals on the real line"};
  app.require_subcommand(1);

  std::string integrand_text = "abs-pow:1";
  std::string weight_name = "gaussian";
  double weight_param = 1.0;
  std::string method = "mobius";
  std::vector<double> c_values;
  int n = 64;
  std::string ladder_text;
  double shift = 0.0;
  std::uint64_t seed = 1;
  int replications = 200;
  std::string reference = "auto";
  std::string format = "csv";
  std::string output;
  int dim = 2;
  std::string lattice_kind = "korobov";
  int alpha = 2;
  double p_exponent = 1.0;
  std::string export_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--integrand", integrand_text,
                    "abs-pow:P | constant:V | poly:c0,c1,... | exp:A");
    cmd->add_option("--weight", weight_name, "gaussian | logistic");
    cmd->add_option("--weight-param", weight_param, "sigma / scale of the weight");
    cmd->add_option("--c", c_values, "Mobius scale parameter(s), one per dimension");
    cmd->add_option("--format", format, "csv | json");
    cmd->add_option("--output", output, "report path (stdout when omitted)");
  };

  auto* cmd_integrate = app.add_subcommand("integrate", "single quadrature evaluation");
  add_common(cmd_integrate);
  cmd_integrate->add_option("--n", n, "node count");
  cmd_integrate->add_option("--shift", shift, "grid shift in [0, 2*pi/n)");
  cmd_integrate->add_option("--method", method, "mobius | gauss-hermite | se-transform");

  auto* cmd_converge = app.add_subcommand("converge", "deterministic convergence study");
  add_common(cmd_converge);
  cmd_converge->add_option("--n-ladder", ladder_text, "FROM:TO, doubling node counts");
  cmd_converge->add_option("--method", method, "mobius | gauss-hermite | se-transform");
  cmd_converge->add_option("--reference", reference, "auto or a numeric reference value");
  cmd_converge->add_option("--shift", shift, "grid shift as a fraction of 2*pi/n, in [0, 1)");

  auto* cmd_random = app.add_subcommand("randomized", "randomized-rule RMSE study");
  add_common(cmd_random);
  cmd_random->add_option("--n-ladder", ladder_text, "FROM:TO, doubling node budgets");
  cmd_random->add_option("--seed", seed, "RNG seed");
  cmd_random->add_option("--replications", replications, "replications per node budget");
  cmd_random->add_option("--reference", reference, "auto or a numeric reference value");

  auto* cmd_approx = app.add_subcommand("approx", "trigonometric-interpolation study");
  add_common(cmd_approx);
  cmd_approx->add_option("--n-ladder", ladder_text, "FROM:TO, doubling sample counts");
  cmd_approx->add_option("--p", p_exponent, "target L^p exponent (>= 1)");
  cmd_approx->add_option("--export-interpolant", export_path,
                         "write the largest-n interpolant as JSON");

  auto* cmd_lattice = app.add_subcommand("lattice", "multivariate lattice integration");
  add_common(cmd_lattice);
  cmd_lattice->add_option("--dim", dim, "dimension d >= 1");
  cmd_lattice->add_option("--lattice", lattice_kind, "korobov");
  cmd_lattice->add_option("--alpha", alpha, "Korobov criterion smoothness (1..3)");
  cmd_lattice->add_option("--n", n, "point count");
  cmd_lattice->add_option("--n-ladder", ladder_text, "FROM:TO, doubling point counts");
  cmd_lattice->add_option("--reference", reference, "auto or a numeric reference value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  validate_thread_cap();

  const IntegrandSpec integrand = parse_integrand(integrand_text);
  const WeightFunction weight = parse_weight(weight_name, weight_param);
  const double c1 = c_values.empty() ? 1.0 : c_values.front();

  if (cmd_integrate->parsed()) {
    double estimate = 0.0;
    if (method == "mobius") {
      estimate = integrate({integrand.fn, weight, MobiusMap(c1)}, n, shift);
    } else if (method == "gauss-hermite") {
      if (weight.kind != WeightKind::gaussian || weight.param != 1.0) {
        throw UsageError("gauss-hermite method targets the unit gaussian weight");
      }
      estimate = gauss_hermite_integrate(integrand.fn, n);
    } else if (method == "se-transform") {
      estimate = se_transform_integrate(integrand.fn, weight, n, shift);
    } else {
      throw UsageError("unknown method '" + method + "'");
    }
    write_report(output, format_value(estimate) + "\n");
    return 0;
  }

  if (cmd_converge->parsed()) {
    const std::vector<int> ns = ladder_text.empty() ? default_ladder() : parse_ladder(ladder_text);
    const double ref = resolve_reference(reference, integrand, weight, 1);
    ConvergenceReport report;
    if (method == "mobius") {
      report = convergence_study({integrand.fn, weight, MobiusMap(c1)}, ns, ref, shift);
    } else {
      report.reference = ref;
      report.fit_window = {ns.front(), ns.back()};
      std::vector<std::pair<int, double>> points;
      for (int rung : ns) {
        double estimate;
        if (method == "gauss-hermite") {
          estimate = gauss_hermite_integrate(integrand.fn, rung);
        } else if (method == "se-transform") {
          estimate = se_transform_integrate(integrand.fn, weight, rung);
        } else {
          throw UsageError("unknown method '" + method + "'");
        }
        const double err = std::abs(estimate - ref);
        report.entries.push_back({rung, estimate, err});
        points.emplace_back(rung, err);
      }
      report.fitted_slope = fit_loglog_slope(points);
    }
    write_report(output, format == "json" ? json_convergence(report).dump(2) + "\n"
                                          : csv_convergence(report));
    return 0;
  }

  if (cmd_random->parsed()) {
    const std::vector<int> ns = ladder_text.empty() ? default_ladder() : parse_ladder(ladder_text);
    const double ref = resolve_reference(reference, integrand, weight, 1);
    const RmseReport report =
        rmse_study({integrand.fn, weight, MobiusMap(c1)}, ns, replications, ref, seed);
    std::ostringstream os;
    if (format == "json") {
      nlohmann::json j;
      j["reference"] = report.reference;
      j["error_floor"] = report.error_floor;
      if (report.fitted_slope) {
        j["fitted_slope"] = *report.fitted_slope;
      } else {
        j["fitted_slope"] = nullptr;
      }
      j["entries"] = nlohmann::json::array();
      for (const auto& e : report.entries) {
        j["entries"].push_back(
            {{"n", e.n}, {"rmse", e.rmse}, {"replication_count", e.replication_count}});
      }
      os << j.dump(2) << "\n";
    } else {
      os << "n,rmse,replications\n";
      for (const auto& e : report.entries) {
        os << e.n << "," << format_value(e.rmse) << "," << e.replication_count << "\n";
      }
      os << "# slope="
         << (report.fitted_slope ? format_value(*report.fitted_slope) : "undefined") << "\n";
    }
    write_report(output, os.str());
    return 0;
  }

  if (cmd_approx->parsed()) {
    const std::vector<int> ns = ladder_text.empty() ? default_ladder() : parse_ladder(ladder_text);
    const MobiusMap map(c1);
    std::vector<std::pair<int, double>> points;
    std::ostringstream rows;
    for (int rung : ns) {
      const TrigInterpolant interp = build_interpolant(integrand.fn, weight, map, rung, p_exponent);
      const int n_ref = std::max(8 * rung, 4096);
      const double err = lp_error(integrand.fn, interp, n_ref);
      points.emplace_back(rung, err);
      rows << rung << "," << format_value(err) << "\n";
      if (!export_path.empty() && rung == ns.back()) {
        std::ofstream out(export_path, std::ios::trunc);
        if (!out) throw UsageError("cannot open export file '" + export_path + "'");
        out << interp.to_json() << "\n";
      }
    }
    const auto slope = fit_loglog_slope(points);
    std::ostringstream os;
    if (format == "json") {
      nlohmann::json j;
      if (slope) {
        j["fitted_slope"] = *slope;
      } else {
        j["fitted_slope"] = nullptr;
      }
      j["entries"] = nlohmann::json::array();
      for (const auto& [rung, err] : points) {
        j["entries"].push_back({{"n", rung}, {"lp_error", err}});
      }
      os << j.dump(2) << "\n";
    } else {
      os << "n,lp_error\n" << rows.str();
      os << "# slope=" << (slope ? format_value(*slope) : "undefined") << "\n";
    }
    write_report(output, os.str());
    return 0;
  }

  if (cmd_lattice->parsed()) {
    if (lattice_kind != "korobov") throw UsageError("only --lattice korobov is available");
    if (dim < 1) throw UsageError("--dim must be >= 1");
    std::vector<MobiusMap> maps;
    ProductWeight pw;
    for (int k = 0; k < dim; ++k) {
      const double ck = k < static_cast<int>(c_values.size()) ? c_values[static_cast<std::size_t>(k)] : c1;
      maps.emplace_back(ck);
      pw.components.push_back(weight);
    }
    const MultiFunction f = [&integrand](const std::vector<double>& x) {
      double prod = 1.0;
      for (double xk : x) prod *= integrand.fn(xk);
      return prod;
    };
    const double ref = resolve_reference(reference, integrand, weight, dim);
    const std::vector<int> ns = ladder_text.empty() ? std::vector<int>{n} : parse_ladder(ladder_text);

    std::ostringstream os;
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    if (format != "json") os << "n,estimate,abs_error\n";
    for (int rung : ns) {
      const LatticeRule rule = korobov_search(rung, dim, alpha);
      const double estimate = integrate_lattice(f, pw, maps, rule);
      const double err = std::abs(estimate - ref);
      std::ostringstream zs;
      for (std::size_t k = 0; k < rule.z.size(); ++k) zs << (k ? "," : "") << rule.z[k];
      if (format == "json") {
        j["entries"].push_back({{"n", rung},
                                {"estimate", estimate},
                                {"abs_error", err},
                                {"generating_vector", rule.z}});
      } else {
        os << rung << "," << format_value(estimate) << "," << format_value(err) << "\n";
        os << "# z(" << rung << ")=" << zs.str() << "\n";
      }
    }
    if (format == "json") {
      j["reference"] = ref;
      os << j.dump(2) << "\n";
    }
    write_report(output, os.str());
    return 0;
  }

  throw UsageError("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}
