#pragma once

#include <stdexcept>
#include <vector>

#include "robinasym/boundary_data.hpp"
#include "robinasym/compound_approximation.hpp"
#include "robinasym/geometry.hpp"
#include "robinasym/harmonic_series.hpp"

namespace robinasym {

/// A reference solve that could not meet its residual or conditioning limits.
class ReferenceSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResidualReport {
  double outer = 0.0;      // max |T u - (f_Omega + eps g_Omega)| on the validation grid
  double inclusion = 0.0;  // max |T u - (f_D + eps g_D)| on the validation grid
  int validation_points = 0;
  double max() const { return std::max(outer, inclusion); }
};

/// High-accuracy solution of  -Lap u = 0 in Omega_eps,  u + kappa du/dn = f + eps g.
/// u = outer_series + inner_series, harmonic by construction.
struct ReferenceSolution {
  Geometry geometry;
  double kappa = 0.0;
  HarmonicSeries outer_series;  // interior-regular about the origin, scale R
  HarmonicSeries inner_series;  // exterior-decaying about c, scale eps, with log term
  ResidualReport residual;
  /// Per-mode 2x2 condition numbers (concentric) or a single pivot-ratio
  /// estimate of the scaled least-squares matrix (eccentric).
  std::vector<double> conditioning;

  double value(Vec2 x) const;
  std::pair<double, Vec2> value_and_gradient(Vec2 x) const;
};

inline constexpr double kMaxModeCondition = 1e12;

/// Mode matching for c = origin: each angular mode couples (r/R)^n and
/// (eps/r)^n (constant and log r for n = 0) through one 2x2 system.
ReferenceSolution solve_exact_concentric(const Geometry& g, double kappa, const RobinData& data,
                                         int N);

struct EccentricOptions {
  int collocation = 0;       // points per boundary; 0 selects 2 (2N + 2)
  double tolerance = 1e-8;   // relative to the data magnitude
};

/// Least-squares collocation over {(r/R)^n cos/sin about 0} U {log rho, (eps/rho)^n cos/sin about c},
/// columns scaled to unit norm, solved by column-pivoted Householder QR. The
/// residual is measured on an independent grid of twice as many points.
ReferenceSolution solve_exact_eccentric(const Geometry& g, double kappa, const RobinData& data,
                                        int N, const EccentricOptions& opts = {});

/// Concentric solver when c = 0, eccentric otherwise.
ReferenceSolution solve_exact(const Geometry& g, double kappa, const RobinData& data, int N,
                              const EccentricOptions& opts = {});

struct SamplingSpec {
  int boundary_points = 128;  // per boundary
  int n_radial = 64;
  int n_angular = 64;
};

/// Both boundaries plus the polar grid of compound_approximation.
std::vector<Vec2> sampling_points(const Geometry& g, const SamplingSpec& s);

struct SupDifference {
  double value = 0.0;
  Vec2 argmax{};
};

template <class A, class B>
SupDifference sup_difference(const Geometry& g, const A& a, const B& b, const SamplingSpec& s) {
  SupDifference out;
  for (const auto& x : sampling_points(g, s)) {
    const double d = std::abs(a.value(x) - b.value(x));
    if (d > out.value) out = {d, x};
  }
  return out;
}

SupDifference sup_difference(const ReferenceSolution& ref, const CompoundApproximation& ca,
                             const SamplingSpec& s);

/// Extremes of the Robin data over a fine angle grid of both boundaries.
std::pair<double, double> robin_data_range(const RobinData& data, double eps, int m = 2048);

/// Number of sampled points with u outside [inf b - tol, sup b + tol].
template <class F>
int max_principle_violations(const F& u, std::pair<double, double> range, double tol,
                             const std::vector<Vec2>& points) {
  int bad = 0;
  for (const auto& x : points) {
    const double v = u.value(x);
    if (v < range.first - tol || v > range.second + tol) ++bad;
  }
  return bad;
}

}  // namespace robinasym
