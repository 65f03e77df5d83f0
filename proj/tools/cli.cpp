#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutcell/cutcell.hpp"

namespace cutcell::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemeOptions {
  std::size_t n = 10;
  double alpha = 0.001;
  double split_left = 0.5;
  double lambda = 0.4;
  double beta = 1.0;
  std::string stab = "dod";
  double eta = 0.0;
  std::string eta_rule = "half";
  double eta1 = 0.0;
  double eta2 = 0.0;
  bool force_eta = false;

  CLI::Option* eta_opt = nullptr;
  CLI::Option* eta_rule_opt = nullptr;
  CLI::Option* eta1_opt = nullptr;
  CLI::Option* eta2_opt = nullptr;
};

void add_geometry_options(CLI::App& cmd, SchemeOptions& o) {
  cmd.add_option("--n", o.n, "Number of background cells")->capture_default_str();
  cmd.add_option("--alpha", o.alpha, "Volume fraction of the small cut cell")
      ->capture_default_str();
  cmd.add_option("--split-left", o.split_left, "Left boundary of the split cell")
      ->capture_default_str();
  cmd.add_option("--beta", o.beta, "Advection velocity (> 0)")->capture_default_str();
}

void add_scheme_options(CLI::App& cmd, SchemeOptions& o) {
  add_geometry_options(cmd, o);
  cmd.add_option("--lambda", o.lambda, "CFL number beta*dt/h")->capture_default_str();
  cmd.add_option("--stab", o.stab, "Stabilization")
      ->check(CLI::IsMember({"none", "gp", "dod"}))
      ->capture_default_str();
  o.eta_opt = cmd.add_option("--eta", o.eta, "Fixed DoD penalty");
  o.eta_rule_opt = cmd.add_option("--eta-rule", o.eta_rule,
                                  "DoD penalty rule: paper=1-a/l, half=1-a/(2l), one=1")
                       ->check(CLI::IsMember({"paper", "half", "one"}))
                       ->capture_default_str();
  o.eta1_opt = cmd.add_option("--eta1", o.eta1, "Ghost penalty on the inflow face of k1");
  o.eta2_opt = cmd.add_option("--eta2", o.eta2, "Ghost penalty on the cut face");
  cmd.add_flag("--force-eta", o.force_eta, "Accept a DoD penalty outside [0, 1]");
}

StabilizationSpec stabilization_from(const SchemeOptions& o) {
  const bool eta_given = o.eta_opt->count() > 0;
  const bool rule_given = o.eta_rule_opt->count() > 0;
  const bool gp_given = o.eta1_opt->count() + o.eta2_opt->count() > 0;
  if (o.stab != "dod" && (eta_given || rule_given)) {
    throw UsageError("--eta/--eta-rule require --stab dod");
  }
  if (o.stab != "gp" && gp_given) {
    throw UsageError("--eta1/--eta2 require --stab gp");
  }
  if (eta_given && rule_given) {
    throw UsageError("--eta and --eta-rule are mutually exclusive");
  }
  if (o.force_eta && !eta_given) {
    throw UsageError("--force-eta only applies to an explicit --eta");
  }
  if (o.stab == "none") return stabilization::None{};
  if (o.stab == "gp") return stabilization::GhostPenalty{o.eta1, o.eta2};
  if (eta_given) return stabilization::DomainOfDependence{eta_rule::Fixed{o.eta}};
  if (o.eta_rule == "paper") {
    return stabilization::DomainOfDependence{eta_rule::OneMinusAlphaOverLambda{}};
  }
  if (o.eta_rule == "one") return stabilization::DomainOfDependence{eta_rule::One{}};
  return stabilization::DomainOfDependence{eta_rule::OneMinusAlphaOverHalfLambda{}};
}

std::string fmt_real(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path.string() + "' for writing");
  f << text;
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  SchemeOptions scheme;
  std::string init = "step:0.1:0.5";
  std::size_t steps = 1;
  std::string out;
  std::string snapshots = "final";
  bool oracle = false;
  bool check = false;
  std::uint64_t seed = 0;
  CLI::Option* stab_opt = nullptr;
};

std::size_t snapshot_stride(const std::string& mode, std::size_t steps) {
  if (mode == "final") return steps;
  if (mode.rfind("every-", 0) == 0) {
    try {
      const auto k = std::stoul(mode.substr(6));
      if (k > 0) return k;
    } catch (const std::exception&) {
    }
  }
  throw UsageError("--snapshots must be 'final' or 'every-<k>' with k >= 1");
}

std::filesystem::path snapshot_path(const std::string& base, std::size_t step, std::size_t steps,
                                    bool numbered) {
  std::filesystem::path p(base);
  if (!numbered) return p;
  const auto width = std::to_string(steps).size();
  std::ostringstream name;
  name << p.stem().string() << '_' << std::setw(static_cast<int>(width)) << std::setfill('0')
       << step << p.extension().string();
  return p.parent_path() / name.str();
}

PiecewiseConstantState initial_state(const SolveOptions& o, const CutCellMesh& mesh) {
  if (o.init == "random") {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> values(mesh.size());
    for (auto& v : values) v = dist(rng);
    return project_initial_data(mesh, profile::Samples{std::move(values)});
  }
  return project_initial_data(mesh, parse_profile(o.init));
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const auto& s = o.scheme;
  if (o.oracle && (o.stab_opt->count() > 0 || s.eta_opt->count() > 0 ||
                   s.eta_rule_opt->count() > 0 || s.eta1_opt->count() > 0 ||
                   s.eta2_opt->count() > 0)) {
    throw UsageError("--oracle replaces the scheme; do not combine it with --stab or --eta*");
  }
  if (o.steps == 0) throw UsageError("--steps must be at least 1");
  const std::size_t stride = snapshot_stride(o.snapshots, o.steps);

  const auto mesh = build_mesh(s.n, s.alpha, s.split_left);
  const AdvectionConfig cfg{s.beta, s.lambda};
  cfg.validate();

  std::optional<SchemeMatrices> matrices;
  if (!o.oracle) {
    const auto stab = stabilization_from(s);
    matrices = assemble(mesh, cfg, stab, s.force_eta ? EtaRange::Force : EtaRange::Enforce);
  }

  auto state = initial_state(o, mesh);
  const double mass0 = mass(state, mesh);
  const auto [min0, max0] = extrema(state);
  bool check_ok = true;

  const bool numbered = o.snapshots != "final";
  auto emit = [&](std::size_t n) {
    const auto [lo, hi] = extrema(state);
    const double m = mass(state, mesh);
    out << "step=" << n << " t=" << fmt_real(state.time) << " mass=" << fmt_real(m)
        << " tv=" << fmt_real(total_variation(state)) << " min=" << fmt_real(lo)
        << " max=" << fmt_real(hi) << '\n';
    if (!o.out.empty()) {
      write_text_file(snapshot_path(o.out, n, o.steps, numbered),
                      format_snapshot(snapshot_rows(state, mesh)));
    }
    if (o.check) {
      constexpr double slack = 1e-12;
      if (std::abs(m - mass0) > slack * std::max(1.0, std::abs(mass0))) {
        err << "check failed at step " << n << ": mass drift " << fmt_real(m - mass0) << '\n';
        check_ok = false;
      }
      if (lo < min0 - slack || hi > max0 + slack) {
        err << "check failed at step " << n << ": range [" << fmt_real(lo) << ", "
            << fmt_real(hi) << "] leaves initial bounds [" << fmt_real(min0) << ", "
            << fmt_real(max0) << "]\n";
        check_ok = false;
      }
    }
  };

  if (numbered) emit(0);
  const double shift = cfg.tau(mesh);
  for (std::size_t n = 1; n <= o.steps; ++n) {
    if (matrices) {
      state = step(state, *matrices);
    } else {
      const double t = state.time + cfg.dt(mesh);
      state = advect_and_average(state, mesh, shift);
      state.time = t;
    }
    if (n % stride == 0 || n == o.steps) emit(n);
  }
  return check_ok ? kSuccess : kCheckFailed;
}

// -------------------------------------------------------------- analyze

struct AnalyzeOptions {
  SchemeOptions scheme;
  std::string report;
  bool check = false;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const auto& s = o.scheme;
  const auto mesh = build_mesh(s.n, s.alpha, s.split_left);
  const AdvectionConfig cfg{s.beta, s.lambda};
  cfg.validate();
  const auto stab = stabilization_from(s);
  const auto matrices =
      assemble(mesh, cfg, stab, s.force_eta ? EtaRange::Force : EtaRange::Enforce);
  const auto report = check_monotonicity(matrices);
  const auto interval = admissible_eta_interval(s.alpha, s.lambda);

  nlohmann::json doc = nlohmann::json::parse(to_json(report));
  doc["eta_interval"] = nlohmann::json::parse(to_json(interval));
  if (matrices.resolved_eta) doc["eta"] = *matrices.resolved_eta;
  std::optional<GpFeasibilityCertificate> cert;
  if (s.stab == "gp") {
    cert = ghost_penalty_feasibility(s.alpha, s.lambda);
    doc["ghost_penalty_feasibility"] = nlohmann::json::parse(to_json(*cert));
  }

  out << "monotone=" << (report.monotone ? "true" : "false")
      << " min_entry=" << fmt_real(report.min_entry);
  if (!report.negative_entries.empty()) {
    const auto worst = std::min_element(
        report.negative_entries.begin(), report.negative_entries.end(),
        [](const MatrixEntry& a, const MatrixEntry& b) { return a.value < b.value; });
    out << " at (" << worst->row + 1 << "," << worst->col + 1 << ")";
  }
  out << '\n';
  if (matrices.resolved_eta) out << "eta=" << fmt_real(*matrices.resolved_eta) << '\n';
  out << "eta_interval=[" << fmt_real(interval.lower) << ", " << fmt_real(interval.upper) << "]";
  if (interval.empty) out << " (alpha > lambda: do not stabilize)";
  out << '\n';
  if (cert) {
    out << "gp_feasible=" << (cert->feasible ? "true" : "false");
    for (const auto& name : cert->violated_constraints) out << " [" << name << "]";
    out << '\n';
  }
  if (!o.report.empty()) write_text_file(o.report, doc.dump(2) + "\n");
  return (o.check && !report.monotone) ? kCheckFailed : kSuccess;
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  SchemeOptions geometry;
  std::string alpha_range = "0.001";
  std::string lambda_range = "0.4";
  std::string eta_range = "0:1:11";
  std::string out;
  unsigned threads = 0;
};

struct SweepRow {
  double alpha;
  double lambda;
  double eta;
  bool monotone;
  double min_entry;
  double eta_lower;
};

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  const auto alphas = parse_range(o.alpha_range);
  const auto lambdas = parse_range(o.lambda_range);
  const auto etas = parse_range(o.eta_range);

  // Validate every geometry and config up front so workers cannot fail.
  for (double a : alphas) build_mesh(o.geometry.n, a, o.geometry.split_left);
  for (double l : lambdas) AdvectionConfig{o.geometry.beta, l}.validate();

  const std::size_t total = alphas.size() * lambdas.size() * etas.size();
  std::vector<SweepRow> rows(total);
  auto evaluate_point = [&](std::size_t idx) {
    const std::size_t ie = idx % etas.size();
    const std::size_t il = (idx / etas.size()) % lambdas.size();
    const std::size_t ia = idx / (etas.size() * lambdas.size());
    const auto mesh = build_mesh(o.geometry.n, alphas[ia], o.geometry.split_left);
    const AdvectionConfig cfg{o.geometry.beta, lambdas[il]};
    const auto report = check_monotonicity(assemble_dod(mesh, cfg, etas[ie], EtaRange::Force));
    rows[idx] = {alphas[ia], lambdas[il], etas[ie], report.monotone, report.min_entry,
                 admissible_eta_interval(alphas[ia], lambdas[il]).lower};
  };

  unsigned workers = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < total; i += workers) evaluate_point(i);
      });
    }
  }

  std::ostringstream csv;
  csv << "alpha,lambda,eta,monotone,min_entry,eta_lower\n";
  for (const auto& r : rows) {
    csv << fmt_real(r.alpha) << ',' << fmt_real(r.lambda) << ',' << fmt_real(r.eta) << ','
        << (r.monotone ? 1 : 0) << ',' << fmt_real(r.min_entry) << ',' << fmt_real(r.eta_lower)
        << '\n';
  }
  if (o.out.empty()) {
    out << csv.str();
  } else {
    write_text_file(o.out, csv.str());
    out << "wrote " << total << " grid points to " << o.out << '\n';
  }
  return kSuccess;
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  auto to_double = [&](const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      throw UsageError("bad number '" + token + "' in range '" + text + "'");
    }
    return v;
  };
  std::vector<std::string> parts;
  char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, sep);) parts.push_back(tok);
  if (parts.empty()) throw UsageError("empty range");

  if (sep == ':') {
    if (parts.size() != 3) throw UsageError("range '" + text + "' must be a:b:count");
    const double a = to_double(parts[0]);
    const double b = to_double(parts[1]);
    std::size_t count = 0;
    try {
      count = std::stoul(parts[2]);
    } catch (const std::exception&) {
    }
    if (count == 0) throw UsageError("range '" + text + "' needs a positive count");
    if (count == 1) return {a};
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
      // Endpoints are reproduced exactly.
      values[i] = (i + 1 == count) ? b : a + (b - a) * static_cast<double>(i) / (count - 1);
    }
    return values;
  }
  std::vector<double> values;
  for (const auto& p : parts) values.push_back(to_double(p));
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"1D cut-cell advection: explicit Euler solver and monotonicity analysis"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Advance initial data and write CSV snapshots");
  add_scheme_options(*solve_cmd, solve.scheme);
  solve.stab_opt = solve_cmd->get_option("--stab");
  solve_cmd->add_option("--init", solve.init, "step:a:b | constant:c | sine | random")
      ->capture_default_str();
  solve_cmd->add_option("--steps", solve.steps, "Number of time steps")->capture_default_str();
  solve_cmd->add_option("--out", solve.out, "Snapshot CSV path");
  solve_cmd->add_option("--snapshots", solve.snapshots, "final | every-<k>")
      ->capture_default_str();
  solve_cmd->add_flag("--oracle", solve.oracle, "Use exact advect-and-average instead");
  solve_cmd->add_flag("--check", solve.check,
                      "Exit 2 if mass drifts or initial bounds are left");
  solve_cmd->add_option("--seed", solve.seed, "Seed for --init random")->capture_default_str();

  AnalyzeOptions analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Check entrywise monotonicity of the system matrix");
  add_scheme_options(*analyze_cmd, analyze.scheme);
  analyze_cmd->add_option("--report", analyze.report, "JSON report path");
  analyze_cmd->add_flag("--check", analyze.check, "Exit 2 if the scheme is not monotone");

  SweepOptions sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Monotonicity of the DoD scheme over an (alpha, lambda, eta) grid");
  add_geometry_options(*sweep_cmd, sweep.geometry);
  sweep_cmd->add_option("--alpha-range", sweep.alpha_range, "a:b:count or list")
      ->capture_default_str();
  sweep_cmd->add_option("--lambda-range", sweep.lambda_range, "a:b:count or list")
      ->capture_default_str();
  sweep_cmd->add_option("--eta-range", sweep.eta_range, "a:b:count or list")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "CSV output path (stdout if omitted)");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = hardware)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze, out);
    return cmd_sweep(sweep, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace cutcell::cli
