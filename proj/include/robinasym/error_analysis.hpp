#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "robinasym/boundary_data.hpp"
#include "robinasym/compound_approximation.hpp"
#include "robinasym/geometry.hpp"
#include "robinasym/reference_solver.hpp"

namespace robinasym {

/// eps (1 + kappa) (1 + (kappa + 1) / (kappa/eps - log eps)), for 0 < eps < 1, kappa > 0.
double bound_B(double eps, double kappa);

struct SolverSettings {
  int order = 32;                        // N for V0, w0 and the reference solve
  int green_order = kDefaultGreenOrder;  // N for the Green regular part
  int collocation = 0;                   // eccentric points per boundary, 0 = automatic
  double tolerance = 1e-8;               // reference residual tolerance, relative
  std::uint64_t seed = 20240101;         // randomised data and validators
  int workers = 1;
  RobinScaling scaling = RobinScaling::Physical;
  int n_radial = 64;                     // interior polar sampling
  int n_angular = 64;
  int boundary_points = 0;               // per boundary, 0 = 4N
  double c0_factor = 1.0;                // negative controls only
};

struct SweepConfig {
  double R = 1.0;
  Vec2 c{};
  RobinData data;
  std::vector<double> eps_list;
  std::vector<double> kappa_list;
  SolverSettings solver;
};

struct SweepRecord {
  double eps = 0.0;
  double kappa = 0.0;
  double sup_error = 0.0;
  double bound_value = 0.0;
  double ratio = 0.0;
  Vec2 argmax{};
  double solver_residual = 0.0;
  std::string status = "ok";  // "ok" or "failed: <reason>"
  double c0 = 0.0;

  bool ok() const { return status == "ok"; }
};

/// Sampling set used by compare/sweep for a given configuration.
SamplingSpec sampling_for(const SolverSettings& s);

/// One (eps, kappa) experiment: reference solve, compound build, sup-norm difference.
/// Failures are reported in `status` rather than thrown.
SweepRecord compare_one(double R, Vec2 c, double eps, double kappa, const RobinData& data,
                        const SolverSettings& solver);

/// Rows in kappa-major then eps order; rows run on `solver.workers` threads and are
/// assembled in that deterministic order.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "eps,kappa,sup_error,bound,ratio,argmax_x,argmax_y,solver_residual,status";

/// One CSV row, numbers with 17 significant digits.
std::string csv_row(const SweepRecord& r);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

struct OrderEstimate {
  double kappa = 0.0;
  std::vector<std::pair<double, double>> eps_pairs;  // (eps, eps/2)
  std::vector<double> orders;                        // log2(e(eps) / e(eps/2))
};

/// Per kappa (in first-seen order), orders over every eps-halving pair present.
/// Throws InvalidInput when a kappa has no halving pair.
std::vector<OrderEstimate> estimate_orders(const std::vector<SweepRecord>& records);

/// Text report of a lemma validator run.
struct ValidationReport {
  std::string name;
  std::uint64_t seed = 0;
  int trials = 0;
  int checks = 0;
  int violations = 0;
  double worst_margin = 0.0;  // most negative (rhs - lhs) seen, scaled; > 0 is fine
  std::vector<std::string> notes;

  bool passed() const { return violations == 0; }
  std::string text() const;
};

struct MaxPrincipleOptions {
  int order = 8;               // modes of the random boundary data
  bool corrupt = false;        // negative control: shift the solution by the data span
};

/// Random Robin data on both boundaries of random geometries, exact solve,
/// then inf b - tol <= u <= sup b + tol on the sampling set (tol = 1e-8 span).
ValidationReport validate_max_principle(int trials, std::uint64_t seed,
                                        const MaxPrincipleOptions& opts = {});

/// The three local bounds for random finite harmonic series on a disk:
///   |a(x) - a(x0)| <= 2|x - x0| / (R - |x - x0|) (a(x0) - inf a)
///   |grad a(x0)|   <= (2/R) ||a||
///   |grad a(x) - grad a(x0)| <= (2||a||/R) |x - x0| (2R - |x - x0|) / (R - |x - x0|)^2
ValidationReport validate_harnack_bounds(int trials, std::uint64_t seed);

/// Bounded exterior Robin solutions tend to the boundary-data mean, and the
/// disk's H^kappa is the constant 1/(2 pi).
ValidationReport validate_exterior_limit(int trials, std::uint64_t seed);

/// Random Fourier data with `order` modes; coefficients decay like 1/n^2.
FourierData random_fourier(int order, double amplitude, std::uint64_t seed);

}  // namespace robinasym
