// Copyright 2026 The trigsip Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trigsip/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "trigsip/cutting_plane.hpp"
#include "trigsip/error.hpp"
#include "trigsip/problem_model.hpp"
#include "trigsip/validation.hpp"

namespace trigsip {
namespace {

// Flag error raised after CLI11 parsing; maps to exit code 2.
struct UsageError {
  std::string message;
};

struct CliConfig {
  std::string command;
  std::optional<int> example;
  std::optional<int> n;
  std::optional<int> K;
  std::optional<int> N;
  std::string method = "moment_real";
  std::optional<std::string> coefficients;
  double tol = 1e-8;
  int grid_density = kDefaultGridDensity;
  std::string format = "json";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string instance_file;
  std::vector<int> Ks{8, 16, 32};
  std::optional<double> reference;
};

void add_problem_flags(CLI::App* sub, CliConfig& cfg, bool with_method) {
  sub->add_option("--example", cfg.example, "Built-in example id (1-5)");
  sub->add_option("--n", cfg.n, "Decision dimension for examples 1 and 2");
  sub->add_option("--instance-file", cfg.instance_file,
                  "JSON instance with sampled rows");
  sub->add_option("--K", cfg.K, "Truncation order")->check(CLI::NonNegativeNumber);
  sub->add_option("--N", cfg.N, "Sample count for the DFT")
      ->check(CLI::PositiveNumber);
  if (with_method) {
    sub->add_option("--method", cfg.method, "Solution method")
        ->check(CLI::IsMember(
            {"moment_real", "moment_complex", "cutting_plane", "grid_lp"}));
  }
  sub->add_option("--coefficients", cfg.coefficients,
                  "Fourier coefficient route")
      ->check(CLI::IsMember({"reflect_then_dft", "direct_dft", "analytic"}));
  sub->add_option("--tol", cfg.tol, "Solver tolerance")
      ->check(CLI::Range(1e-12, 1e-2));
  sub->add_option("--grid-density", cfg.grid_density,
                  "Grid size for the grid LP and the separation scan")
      ->check(CLI::Range(2, 100000000));
  sub->add_option("--seed", cfg.seed, "Cutting-plane start-point jitter seed");
}

void add_output_flags(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", cfg.out, "Output file (default: stdout)");
}

SipInstance resolve_instance(const CliConfig& cfg) {
  if (cfg.example && !cfg.instance_file.empty()) {
    throw UsageError{"--example and --instance-file are mutually exclusive"};
  }
  if (!cfg.instance_file.empty()) {
    try {
      return load_instance_file(cfg.instance_file);
    } catch (const InvalidArgument& e) {
      throw UsageError{std::string("--instance-file: ") + e.what()};
    }
  }
  if (!cfg.example) throw UsageError{"--example or --instance-file is required"};
  const int id = *cfg.example;
  if (id < 1 || id > 5) {
    throw UsageError{"--example: unknown example id " + std::to_string(id) +
                     " (expected 1..5)"};
  }
  const int n = cfg.n.value_or(5);
  if ((id == 1 || id == 2) && (n < 5 || n > 8)) {
    throw UsageError{"--n: example " + std::to_string(id) +
                     " supports n in {5,6,7,8}, got " + std::to_string(n)};
  }
  return builtin_example(id, n);
}

// 2n rounded up to a multiple of 4.
int default_order(int n) { return ((2 * n + 3) / 4) * 4; }

struct Resolved {
  SipInstance instance;
  int K;
  int N;
  std::optional<double> reference;
  nlohmann::json config;
};

Resolved resolve(const CliConfig& cfg) {
  SipInstance instance = resolve_instance(cfg);
  const int K = cfg.K.value_or(default_order(instance.n()));
  const int N = cfg.N.value_or(default_sample_count(K));
  if (N < 2 * K + 2) {
    throw UsageError{"--N: " + std::to_string(N) +
                     " is below the anti-aliasing floor 2K + 2 = " +
                     std::to_string(2 * K + 2)};
  }
  if (cfg.coefficients && *cfg.coefficients == "analytic" &&
      !instance.has_analytic_coefficients()) {
    throw UsageError{"--coefficients: instance '" + instance.label() +
                     "' has no closed-form coefficients"};
  }
  if (cfg.coefficients && *cfg.coefficients == "direct_dft" &&
      cfg.method == "moment_real" && cfg.command == "solve") {
    throw UsageError{
        "--coefficients: direct_dft needs --method moment_complex"};
  }
  std::optional<double> reference = cfg.reference;
  if (!reference && cfg.example) reference = reference_value(*cfg.example, instance.n());

  nlohmann::json config = {
      {"command", cfg.command},
      {"instance", instance.label()},
      {"n", instance.n()},
      {"K", K},
      {"N", N},
      {"method", cfg.method},
      {"coefficients", cfg.coefficients ? nlohmann::json(*cfg.coefficients)
                                        : nlohmann::json(nullptr)},
      {"tol", cfg.tol},
      {"grid_density", cfg.grid_density},
      {"diagnostic_density", kDiagnosticDensity},
      {"seed", cfg.seed ? nlohmann::json(*cfg.seed) : nlohmann::json(nullptr)},
      {"reference", reference ? nlohmann::json(*reference) : nlohmann::json(nullptr)},
  };
  return {std::move(instance), K, N, reference, std::move(config)};
}

MomentOptions moment_options(const CliConfig& cfg, const Resolved& r,
                             bool complex_path) {
  MomentOptions options;
  options.K = r.K;
  options.N = r.N;
  options.complex_path = complex_path;
  if (cfg.coefficients) options.coefficients = parse_coefficient_mode(*cfg.coefficients);
  options.tol = cfg.tol;
  return options;
}

SolveReport run_method(const CliConfig& cfg, const Resolved& r,
                       Method method) {
  switch (method) {
    case Method::kMomentReal:
    case Method::kMomentComplex: {
      auto options = moment_options(cfg, r, method == Method::kMomentComplex);
      if (method == Method::kMomentReal && options.coefficients &&
          *options.coefficients == CoefficientMode::kDirectDft) {
        options.coefficients.reset();
      }
      return solve_moment(r.instance, options);
    }
    case Method::kCuttingPlane: {
      CuttingPlaneParams params;
      params.refine_grid_density = cfg.grid_density;
      params.jitter_seed = cfg.seed;
      return solve_cutting_plane(r.instance, params);
    }
    case Method::kGridLp:
      return solve_grid_lp(r.instance, {cfg.grid_density, 1e-9, kDiagnosticDensity});
  }
  throw InvalidArgument("unknown method");
}

std::string fmt(double value) {
  std::ostringstream s;
  s.precision(10);
  s << value;
  return s.str();
}

std::string report_csv_rows(const std::vector<SolveReport>& reports,
                            const std::optional<double>& reference) {
  std::ostringstream out;
  out.precision(17);
  out << "method,K,value,abs_error,violation,runtime_seconds,status\n";
  for (const auto& rep : reports) {
    out << to_string(rep.method) << ',';
    if (rep.K) out << *rep.K;
    out << ',' << rep.value << ',';
    if (reference) out << std::abs(rep.value - *reference);
    out << ',' << rep.violation << ',' << rep.runtime_seconds << ','
        << to_string(rep.status) << '\n';
  }
  return out.str();
}

std::string report_text(const SolveReport& rep,
                        const std::optional<double>& reference) {
  std::ostringstream out;
  out << to_string(rep.method) << " on " << rep.instance;
  if (rep.K) out << " (K=" << *rep.K << ", N=" << rep.N.value_or(0) << ")";
  out << ": status=" << to_string(rep.status) << " value=" << fmt(rep.value);
  if (reference) out << " abs_error=" << fmt(std::abs(rep.value - *reference));
  out << " violation=" << fmt(rep.violation) << " time=" << fmt(rep.runtime_seconds)
      << "s\n  x =";
  for (Eigen::Index i = 0; i < rep.x.size(); ++i) out << ' ' << fmt(rep.x[i]);
  out << '\n';
  return out.str();
}

int list_command(const CliConfig& cfg, std::ostream& out) {
  const auto catalog = builtin_catalog();
  if (cfg.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& e : catalog) {
      doc.push_back({{"id", e.id},
                     {"n_min", e.n_min},
                     {"n_max", e.n_max},
                     {"description", e.description}});
    }
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "id,n_min,n_max,description\n";
    for (const auto& e : catalog) {
      out << e.id << ',' << e.n_min << ',' << e.n_max << ",\"" << e.description
          << "\"\n";
    }
  } else {
    for (const auto& e : catalog) {
      out << e.id << "  n=" << e.n_min;
      if (e.n_max != e.n_min) out << ".." << e.n_max;
      out << "  " << e.description << '\n';
    }
  }
  return 0;
}

bool all_optimal(const std::vector<SolveReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SolveReport& r) {
    return r.status == SolveStatus::kOptimal;
  });
}

int solve_command(const CliConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  const SolveReport rep = run_method(cfg, r, parse_method(cfg.method));
  if (cfg.format == "json") {
    out << nlohmann::json{{"config", r.config}, {"report", to_json(rep)}}.dump(2)
        << '\n';
  } else if (cfg.format == "csv") {
    out << report_csv_rows({rep}, r.reference);
  } else {
    out << report_text(rep, r.reference);
  }
  return rep.status == SolveStatus::kOptimal ? 0 : 1;
}

int compare_command(const CliConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  std::vector<SolveReport> reports;
  for (Method m : {Method::kMomentReal, Method::kMomentComplex,
                   Method::kCuttingPlane, Method::kGridLp}) {
    reports.push_back(run_method(cfg, r, m));
  }
  if (cfg.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& rep : reports) list.push_back(to_json(rep));
    out << nlohmann::json{{"config", r.config}, {"reports", list}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << report_csv_rows(reports, r.reference);
  } else {
    for (const auto& rep : reports) out << report_text(rep, r.reference);
  }
  return all_optimal(reports) ? 0 : 1;
}

int convergence_command(const CliConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  if (!r.reference) {
    throw UsageError{"--reference: required for instances without a "
                     "published optimum"};
  }
  if (cfg.Ks.empty()) throw UsageError{"--Ks: at least one K is required"};
  for (std::size_t i = 1; i < cfg.Ks.size(); ++i) {
    if (cfg.Ks[i] <= cfg.Ks[i - 1]) {
      throw UsageError{"--Ks: values must be strictly increasing"};
    }
  }
  MomentOptions base = moment_options(cfg, r, cfg.method == "moment_complex");
  const auto series = convergence_study(r.instance, cfg.Ks, *r.reference, base);
  nlohmann::json config = r.config;
  config["Ks"] = cfg.Ks;
  if (cfg.format == "json") {
    out << nlohmann::json{{"config", config}, {"series", to_json(series)}}.dump(2)
        << '\n';
  } else if (cfg.format == "csv") {
    out << to_csv(series);
  } else {
    for (const auto& p : series.points) {
      out << "K=" << p.K << " value=" << fmt(p.value) << " abs_error="
          << fmt(p.abs_error) << " violation=" << fmt(p.violation)
          << " ratio=" << fmt(p.rate_ratio) << " status=" << to_string(p.status)
          << '\n';
    }
  }
  const bool ok = std::all_of(series.points.begin(), series.points.end(),
                              [](const ConvergencePoint& p) {
                                return p.status == SolveStatus::kOptimal;
                              });
  return ok ? 0 : 1;
}

int crosscheck_command(const CliConfig& cfg, std::ostream& out) {
  const Resolved r = resolve(cfg);
  if (r.K < 1) throw UsageError{"--K: cross check needs K >= 1"};
  CrossCheckOptions options;
  options.moment = moment_options(cfg, r, cfg.method == "moment_complex");
  options.grid_density = std::max(cfg.grid_density, 2);
  const CrossCheck check = cross_check(r.instance, r.K, options);
  if (cfg.format == "json") {
    out << nlohmann::json{{"config", r.config}, {"crosscheck", to_json(check)}}.dump(2)
        << '\n';
  } else if (cfg.format == "csv") {
    out << to_csv(check);
  } else {
    out << "moment=" << fmt(check.moment.value)
        << " truncated_grid_lp=" << fmt(check.truncated_grid.value)
        << " original_grid_lp=" << fmt(check.original_grid.value) << '\n';
  }
  const bool ok = check.moment.status == SolveStatus::kOptimal &&
                  check.truncated_grid.status == SolveStatus::kOptimal &&
                  check.original_grid.status == SolveStatus::kOptimal;
  return ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Linear semi-infinite programs via trigonometric moments",
               "trigsip"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the built-in examples");
  add_output_flags(list, cfg);

  auto* solve = app.add_subcommand("solve", "Solve one instance");
  add_problem_flags(solve, cfg, true);
  add_output_flags(solve, cfg);

  auto* convergence =
      app.add_subcommand("convergence", "Error versus truncation order");
  add_problem_flags(convergence, cfg, true);
  add_output_flags(convergence, cfg);
  convergence->add_option("--Ks", cfg.Ks, "Truncation orders")->delimiter(',');
  convergence->add_option("--reference", cfg.reference, "Reference optimum");

  auto* compare = app.add_subcommand("compare", "Run every method");
  add_problem_flags(compare, cfg, false);
  add_output_flags(compare, cfg);

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "Moment value versus grid LPs of the truncated and original rows");
  add_problem_flags(crosscheck, cfg, true);
  add_output_flags(crosscheck, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const auto chosen = app.get_subcommands();
  cfg.command = chosen.front()->get_name();

  std::ostringstream buffer;
  int code = 0;
  try {
    if (cfg.command == "list") {
      code = list_command(cfg, buffer);
    } else if (cfg.command == "solve") {
      code = solve_command(cfg, buffer);
    } else if (cfg.command == "compare") {
      code = compare_command(cfg, buffer);
    } else if (cfg.command == "convergence") {
      code = convergence_command(cfg, buffer);
    } else {
      code = crosscheck_command(cfg, buffer);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "solver stage failed: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "usage error: --out: cannot open " << cfg.out << '\n';
      return 2;
    }
    file << buffer.str();
  }
  if (code != 0) err << "solver did not reach an optimal status\n";
  return code;
}

}  // namespace trigsip
