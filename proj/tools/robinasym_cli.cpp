// Command-line harness: evaluate, solve, compare and sweep from a JSON config,
// and run the lemma validators.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "robinasym/compound_approximation.hpp"
#include "robinasym/config.hpp"
#include "robinasym/error_analysis.hpp"
#include "robinasym/reference_solver.hpp"

using namespace robinasym;

namespace {

struct Common {
  std::string config;
  std::string out;  // empty = stdout
  std::optional<double> eps;
  std::optional<double> kappa;
  std::optional<int> workers;
};

void add_common(CLI::App* cmd, Common& c, bool single_run) {
  cmd->add_option("-c,--config", c.config, "JSON config file")->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--out", c.out, "output CSV (default stdout)");
  if (single_run) {
    cmd->add_option("--eps", c.eps, "override geometry.eps");
    cmd->add_option("--kappa", c.kappa, "override data.kappa");
  } else {
    cmd->add_option("-j,--workers", c.workers, "override solver.workers");
  }
}

HarnessConfig load(const Common& c) {
  HarnessConfig cfg = load_config(c.config);
  if (c.eps) cfg.eps = *c.eps;
  if (c.kappa) cfg.kappa = *c.kappa;
  if (c.workers) cfg.sweep.solver.workers = *c.workers;
  return cfg;
}

// Output stream that is either the named file or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

CompoundOptions compound_options(const SolverSettings& s) {
  CompoundOptions co;
  co.order = s.order;
  co.green_order = s.green_order;
  co.scaling = s.scaling;
  co.c0_factor = s.c0_factor;
  return co;
}

void warn_green(double ratio, double eps, double kappa) {
  if (ratio > 1e-10) {
    std::fprintf(stderr,
                 "warning: Green regular part not resolved at eps %g, kappa %g (last/largest "
                 "coefficient %.3g); raise solver.N_green\n",
                 eps, kappa, ratio);
  }
}

void warn_data_order(const RobinData& data, int N) {
  if (data.max_order() > N) {
    std::fprintf(stderr, "warning: boundary data has %d modes, truncated to N = %d\n",
                 data.max_order(), N);
  }
}

// The regular part depends on R, c and kappa only, not on eps.
void check_green(const SweepConfig& sw, const std::vector<double>& kappas, double eps) {
  for (double kappa : kappas) {
    try {
      const Geometry g = make_geometry(sw.R, sw.c, eps);
      warn_green(solve_green_regular(g, kappa, sw.solver.green_order).truncation_ratio(), eps, kappa);
    } catch (const InvalidInput&) {
      // Reported per row by the sweep itself.
    }
  }
  warn_data_order(sw.data, sw.solver.order);
}

int cmd_approx(const Common& c) {
  const HarnessConfig cfg = load(c);
  const auto& s = cfg.sweep.solver;
  const Geometry g = make_geometry(cfg.sweep.R, cfg.sweep.c, cfg.eps);
  const auto ca = CompoundApproximation::build(g, cfg.kappa, cfg.sweep.data, compound_options(s));
  warn_green(ca.green().truncation_ratio(), cfg.eps, cfg.kappa);
  warn_data_order(cfg.sweep.data, s.order);
  Output out(c.out);
  write_field_csv(out.get(), polar_grid(g, s.n_radial, s.n_angular),
                  [&](Vec2 x) { return ca.value(x); }, "u0");
  return 0;
}

int cmd_exact(const Common& c) {
  const HarnessConfig cfg = load(c);
  const auto& s = cfg.sweep.solver;
  const Geometry g = make_geometry(cfg.sweep.R, cfg.sweep.c, cfg.eps);
  EccentricOptions eo;
  eo.collocation = s.collocation;
  eo.tolerance = s.tolerance;
  const ReferenceSolution ref = solve_exact(g, cfg.kappa, cfg.sweep.data, s.order, eo);
  std::fprintf(stderr, "reference residual: outer %.3g, inclusion %.3g\n", ref.residual.outer,
               ref.residual.inclusion);
  Output out(c.out);
  write_field_csv(out.get(), polar_grid(g, s.n_radial, s.n_angular),
                  [&](Vec2 x) { return ref.value(x); }, "u");
  return 0;
}

int cmd_compare(const Common& c) {
  const HarnessConfig cfg = load(c);
  const auto& sw = cfg.sweep;
  check_green(sw, {cfg.kappa}, cfg.eps);
  const SweepRecord r = compare_one(sw.R, sw.c, cfg.eps, cfg.kappa, sw.data, sw.solver);
  std::printf("eps             %.17g\n", r.eps);
  std::printf("kappa           %.17g\n", r.kappa);
  std::printf("sup_error       %.17g\n", r.sup_error);
  std::printf("bound           %.17g\n", r.bound_value);
  std::printf("ratio           %.17g\n", r.ratio);
  std::printf("argmax          (%.17g, %.17g)\n", r.argmax.x, r.argmax.y);
  std::printf("solver_residual %.17g\n", r.solver_residual);
  std::printf("c0              %.17g\n", r.c0);
  std::printf("status          %s\n", r.status.c_str());
  if (!c.out.empty()) {
    Output out(c.out);
    write_sweep_csv(out.get(), {r});
  } else {
    std::printf("\n%s\n%s\n", kSweepCsvHeader, csv_row(r).c_str());
  }
  return r.ok() ? 0 : 1;
}

int cmd_sweep(const Common& c) {
  const HarnessConfig cfg = load(c);
  if (cfg.sweep.eps_list.empty() || cfg.sweep.kappa_list.empty()) {
    throw InvalidInput("sweep requires non-empty sweep.eps and sweep.kappa lists");
  }
  check_green(cfg.sweep, cfg.sweep.kappa_list, *std::min_element(cfg.sweep.eps_list.begin(), cfg.sweep.eps_list.end()));
  const auto records = run_sweep(cfg.sweep);
  Output out(c.out);
  write_sweep_csv(out.get(), records);
  int failed = 0;
  for (const auto& r : records) failed += r.ok() ? 0 : 1;
  if (failed > 0) std::fprintf(stderr, "%d of %zu rows failed\n", failed, records.size());
  return 0;
}

struct ValidateArgs {
  std::string suite = "all";
  std::optional<int> trials;
  std::uint64_t seed = SolverSettings{}.seed;
  bool control = false;
};

int cmd_validate(const ValidateArgs& a) {
  std::vector<ValidationReport> reports;
  const bool all = a.suite == "all";
  if (all || a.suite == "max-principle") {
    reports.push_back(validate_max_principle(a.trials.value_or(100), a.seed));
    if (a.control) {
      MaxPrincipleOptions bad;
      bad.corrupt = true;
      auto rep = validate_max_principle(a.trials.value_or(100), a.seed, bad);
      // The control passes when it is caught.
      rep.name += rep.violations > 0 ? " -- detected" : " -- NOT detected";
      rep.violations = rep.violations > 0 ? 0 : 1;
      reports.push_back(std::move(rep));
    }
  }
  if (all || a.suite == "harnack") reports.push_back(validate_harnack_bounds(a.trials.value_or(200), a.seed));
  if (all || a.suite == "exterior") reports.push_back(validate_exterior_limit(a.trials.value_or(50), a.seed));

  int violations = 0;
  for (const auto& r : reports) {
    std::cout << r.text() << '\n';
    violations += r.violations;
  }
  std::cout << (violations == 0 ? "all suites passed" : "violations found") << '\n';
  return violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compound asymptotics for the Robin problem on a disk with a small inclusion"};
  app.require_subcommand(1);

  Common approx_args, exact_args, compare_args, sweep_args;
  auto* approx = app.add_subcommand("approx", "evaluate u0 on the polar grid, CSV x,y,u0");
  add_common(approx, approx_args, true);
  auto* exact = app.add_subcommand("exact", "reference solve on the polar grid, CSV x,y,u");
  add_common(exact, exact_args, true);
  auto* compare = app.add_subcommand("compare", "one sweep record, printed and as a CSV row");
  add_common(compare, compare_args, true);
  auto* sweep = app.add_subcommand("sweep", "the eps x kappa matrix as CSV");
  add_common(sweep, sweep_args, false);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "lemma validators, nonzero exit on violations");
  validate->add_option("--suite", va.suite, "all, max-principle, harnack or exterior")
      ->check(CLI::IsMember({"all", "max-principle", "harnack", "exterior"}));
  validate->add_option("--trials", va.trials, "trials per suite (defaults 100/200/50)")
      ->check(CLI::PositiveNumber);
  validate->add_option("--seed", va.seed, "generator seed");
  validate->add_flag("--control", va.control, "also run the corrupted max-principle control");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*approx) return cmd_approx(approx_args);
    if (*exact) return cmd_exact(exact_args);
    if (*compare) return cmd_compare(compare_args);
    if (*sweep) return cmd_sweep(sweep_args);
    if (*validate) return cmd_validate(va);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
