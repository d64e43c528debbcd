#include "robinasym/error_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

namespace robinasym {

double bound_B(double eps, double kappa) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw InvalidInput("bound requires 0 < eps < 1");
  if (!(kappa > 0.0)) throw InvalidInput("bound requires kappa > 0");
  return eps * (1.0 + kappa) * (1.0 + (kappa + 1.0) / (kappa / eps - std::log(eps)));
}

SamplingSpec sampling_for(const SolverSettings& s) {
  SamplingSpec spec;
  spec.boundary_points = s.boundary_points > 0 ? s.boundary_points : 4 * std::max(s.order, 1);
  spec.n_radial = s.n_radial;
  spec.n_angular = s.n_angular;
  return spec;
}

SweepRecord compare_one(double R, Vec2 c, double eps, double kappa, const RobinData& data,
                        const SolverSettings& solver) {
  SweepRecord rec;
  rec.eps = eps;
  rec.kappa = kappa;
  try {
    const Geometry g = make_geometry(R, c, eps);
    rec.bound_value = bound_B(eps, kappa);
    EccentricOptions eo;
    eo.collocation = solver.collocation;
    eo.tolerance = solver.tolerance;
    const ReferenceSolution ref = solve_exact(g, kappa, data, solver.order, eo);
    CompoundOptions co;
    co.order = solver.order;
    co.green_order = solver.green_order;
    co.scaling = solver.scaling;
    co.c0_factor = solver.c0_factor;
    const auto ca = CompoundApproximation::build(g, kappa, data, co);
    const SupDifference d = sup_difference(ref, ca, sampling_for(solver));
    rec.sup_error = d.value;
    rec.argmax = d.argmax;
    rec.ratio = rec.sup_error / rec.bound_value;
    rec.solver_residual = ref.residual.max();
    rec.c0 = ca.c0();
  } catch (const std::exception& e) {
    std::string why = e.what();
    std::replace(why.begin(), why.end(), ',', ';');
    std::replace(why.begin(), why.end(), '\n', ' ');
    rec.status = "failed: " + why;
  }
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  struct Job {
    double eps;
    double kappa;
  };
  std::vector<Job> jobs;
  for (double k : config.kappa_list) {
    for (double e : config.eps_list) jobs.push_back({e, k});
  }
  std::vector<SweepRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      out[i] = compare_one(config.R, config.c, jobs[i].eps, jobs[i].kappa, config.data,
                           config.solver);
    }
  };
  const int n = std::clamp(config.solver.workers, 1, std::max<int>(1, static_cast<int>(jobs.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

std::string csv_row(const SweepRecord& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,", r.eps,
                r.kappa, r.sup_error, r.bound_value, r.ratio, r.argmax.x, r.argmax.y,
                r.solver_residual);
  return std::string(buf) + r.status;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

std::vector<OrderEstimate> estimate_orders(const std::vector<SweepRecord>& records) {
  std::vector<double> kappas;
  for (const auto& r : records) {
    if (r.ok() && std::find(kappas.begin(), kappas.end(), r.kappa) == kappas.end()) {
      kappas.push_back(r.kappa);
    }
  }
  std::vector<OrderEstimate> out;
  for (double k : kappas) {
    std::vector<const SweepRecord*> rows;
    for (const auto& r : records) {
      if (r.ok() && r.kappa == k) rows.push_back(&r);
    }
    std::sort(rows.begin(), rows.end(),
              [](const SweepRecord* a, const SweepRecord* b) { return a->eps > b->eps; });
    OrderEstimate est;
    est.kappa = k;
    for (const auto* a : rows) {
      for (const auto* b : rows) {
        if (std::abs(b->eps - 0.5 * a->eps) <= 1e-9 * a->eps) {
          est.eps_pairs.emplace_back(a->eps, b->eps);
          est.orders.push_back(std::log2(a->sup_error / b->sup_error));
        }
      }
    }
    if (est.orders.empty()) {
      std::ostringstream msg;
      msg << "no eps-halving pair for kappa = " << k;
      throw InvalidInput(msg.str());
    }
    out.push_back(std::move(est));
  }
  if (out.empty()) throw InvalidInput("no successful records to estimate orders from");
  return out;
}

std::string ValidationReport::text() const {
  std::ostringstream out;
  out << "# " << name << '\n';
  out << "seed " << seed << ", trials " << trials << ", checks " << checks << ", violations "
      << violations << ", worst margin " << worst_margin << '\n';
  for (const auto& n : notes) out << "  " << n << '\n';
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace robinasym
