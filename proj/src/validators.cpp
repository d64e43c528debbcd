#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "robinasym/error_analysis.hpp"
#include "robinasym/exterior_solver.hpp"
#include "robinasym/reference_solver.hpp"

namespace robinasym {

FourierData random_fourier(int order, double amplitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double mean = amplitude * u(rng);
  std::vector<FourierMode> modes(static_cast<std::size_t>(std::max(order, 0)));
  for (int n = 1; n <= order; ++n) {
    const double w = amplitude / (static_cast<double>(n) * n);
    modes[static_cast<std::size_t>(n - 1)] = {w * u(rng), w * u(rng)};
  }
  return FourierData(mean, std::move(modes));
}

ValidationReport validate_max_principle(int trials, std::uint64_t seed,
                                        const MaxPrincipleOptions& opts) {
  ValidationReport rep;
  rep.name = opts.corrupt ? "Robin maximum principle (corrupted control)" : "Robin maximum principle";
  rep.seed = seed;
  rep.trials = trials;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int N = std::max(40, 4 * opts.order);

  for (int t = 0; t < trials; ++t) {
    const double R = 1.0;
    Vec2 c{};
    if (t % 2 == 1) c = (0.5 * u01(rng)) * unit(kTwoPi * u01(rng));
    const double r_min = R - norm(c);
    const double eps = 0.02 + (0.5 * r_min - 0.02) * u01(rng);
    const double kappa = std::exp(std::log(0.05) + (std::log(20.0) - std::log(0.05)) * u01(rng));
    RobinData data;
    data.f_outer = random_fourier(opts.order, 1.0, rng());
    data.f_inclusion = random_fourier(opts.order, 1.0, rng());
    data.g_outer = random_fourier(opts.order, 0.5, rng());
    data.g_inclusion = random_fourier(opts.order, 0.5, rng());

    const Geometry g = make_geometry(R, c, eps);
    ReferenceSolution sol = [&] {
      try {
        return solve_exact(g, kappa, data, N);
      } catch (const ReferenceSolveError& e) {
        std::ostringstream msg;
        msg << "trial " << t << ": " << e.what();
        throw ReferenceSolveError(msg.str());
      }
    }();

    const auto range = robin_data_range(data, eps);
    const double span = std::max(range.second - range.first, 1e-300);
    if (opts.corrupt) sol.outer_series.mean += span;

    const auto pts = sampling_points(g, SamplingSpec{4 * N, 24, 24});
    const double tol = 1e-8 * span;
    rep.checks += static_cast<int>(pts.size());
    const int bad = max_principle_violations(sol, range, tol, pts);
    rep.violations += bad;
    for (const auto& x : pts) {
      const double v = sol.value(x);
      rep.worst_margin = std::min(rep.worst_margin, std::min(v - range.first, range.second - v) / span);
    }
    if (bad > 0 && rep.notes.size() < 10) {
      std::ostringstream msg;
      msg << "trial " << t << " (eps " << eps << ", kappa " << kappa << "): " << bad
          << " samples outside [" << range.first << ", " << range.second << "]";
      rep.notes.push_back(msg.str());
    }
  }
  return rep;
}

namespace {

struct HarnackCase {
  HarmonicSeries a;
  double R;
  double inf_lower;  // guaranteed lower estimate of inf a on the closed disk
  double sup_norm;   // guaranteed upper estimate of ||a||
};

// Extremes of a harmonic function on the closed disk sit on its boundary; the
// grid estimates are widened by the largest possible change between samples.
HarnackCase make_harnack_case(const HarmonicSeries& a, double R, int m) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double t : equispaced_angles(m)) {
    const double v = a.value(a.center + R * unit(t));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double dtheta_max = 0.0;
  for (int n = 1; n <= a.order(); ++n) {
    dtheta_max += n * magnitude(a.coeffs[static_cast<std::size_t>(n - 1)]) * std::pow(R / a.scale, n);
  }
  const double slack = 0.5 * (kTwoPi / m) * dtheta_max + 1e-14 * std::max(std::abs(lo), std::abs(hi));
  return {a, R, lo - slack, std::max(std::abs(lo), std::abs(hi)) + slack};
}

}  // namespace

ValidationReport validate_harnack_bounds(int trials, std::uint64_t seed) {
  ValidationReport rep;
  rep.name = "Harnack-derived local bounds";
  rep.seed = seed;
  rep.trials = trials;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  constexpr int kPointsPerTrial = 40;

  auto record = [&](double lhs, double rhs, double scale, const char* which, int trial) {
    ++rep.checks;
    const double margin = (rhs - lhs) / std::max(scale, 1e-300);
    rep.worst_margin = std::min(rep.worst_margin, margin);
    if (lhs > rhs) {
      ++rep.violations;
      if (rep.notes.size() < 10) {
        std::ostringstream msg;
        msg << "trial " << trial << ": bound " << which << " violated, " << lhs << " > " << rhs;
        rep.notes.push_back(msg.str());
      }
    }
  };

  for (int t = 0; t < trials; ++t) {
    const double R = 0.5 + 1.5 * u01(rng);
    HarmonicSeries a;
    a.kind = SeriesKind::InteriorRegular;
    a.center = {2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0};
    a.scale = R;
    const auto fd = random_fourier(1 + static_cast<int>(u01(rng) * 10), 1.0, rng());
    a.mean = fd.mean();
    a.coeffs = fd.modes();
    const HarnackCase hc = make_harnack_case(a, R, 8192);
    const Vec2 x0 = a.center;
    const auto [a0, g0] = a.value_and_gradient(x0);

    record(norm(g0), 2.0 / R * hc.sup_norm, hc.sup_norm / R, "|grad a(x0)| <= 2||a||/R", t);

    for (int k = 0; k < kPointsPerTrial; ++k) {
      // Uniform in area, so most points sit toward the rim.
      const double d = R * std::sqrt(u01(rng)) * 0.999;
      const Vec2 x = x0 + d * unit(kTwoPi * u01(rng));
      const auto [ax, gx] = a.value_and_gradient(x);
      record(std::abs(ax - a0), 2.0 * d / (R - d) * (a0 - hc.inf_lower), hc.sup_norm,
             "|a(x) - a(x0)|", t);
      record(norm(gx - g0),
             2.0 * hc.sup_norm / R * d * (2.0 * R - d) / ((R - d) * (R - d)), hc.sup_norm / R,
             "|grad a(x) - grad a(x0)|", t);
    }
  }
  return rep;
}

ValidationReport validate_exterior_limit(int trials, std::uint64_t seed) {
  ValidationReport rep;
  rep.name = "exterior limit of bounded Robin solutions";
  rep.seed = seed;
  rep.trials = trials;
  rep.worst_margin = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  constexpr double kFar = 1e6;
  constexpr double kLimitTol = 1e-6;
  constexpr double kConstTol = 1e-12;

  for (int t = 0; t < trials; ++t) {
    const double kappa = std::exp(std::log(0.05) + (std::log(50.0) - std::log(0.05)) * u01(rng));
    // At rho = 1e6 the remainder is |a_1| / rho, so unit-amplitude data would sit
    // right at the 1e-6 tolerance; half amplitude keeps this a test of the limit.
    const FourierData b = random_fourier(8, 0.5, rng());
    const int N = 16;
    const FourierData projected = fourier_project([&](double th) { return b.eval(th); }, N, 4 * N + 2);
    const HarmonicSeries a = solve_exterior_robin(projected, kappa);

    // Independent mean: composite trapezoid on a fine periodic grid.
    constexpr int kQuad = 20000;
    double mean = 0.0;
    for (int j = 0; j < kQuad; ++j) mean += b.eval(-kPi + kTwoPi * j / kQuad);
    mean /= kQuad;

    const double far = a.value(kFar * unit(kTwoPi * u01(rng)));
    ++rep.checks;
    const double err = std::abs(far - mean);
    rep.worst_margin = std::min(rep.worst_margin, (kLimitTol - err) / kLimitTol);
    if (err > kLimitTol) {
      ++rep.violations;
      std::ostringstream msg;
      msg << "trial " << t << ": limit " << far << " vs mean " << mean;
      rep.notes.push_back(msg.str());
    }
  }

  // H = -(1/2pi) log|xi|; H^kappa solves (I - kappa d/dr) H^kappa = -dH/dr on |xi| = 1.
  HarmonicSeries H;
  H.kind = SeriesKind::ExteriorDecaying;
  H.log_coeff = -1.0 / kTwoPi;
  for (double kappa : {0.1, 1.0, 10.0, 100.0}) {
    const FourierData data = fourier_project(
        [&](double th) { return -dot(H.gradient(unit(th)), unit(th)); }, 16, 66);
    const HarmonicSeries Hk = solve_exterior_robin(data, kappa);
    double worst = 0.0;
    for (double r : {1.0, 1.5, 4.0, 1e3}) {
      for (double th : equispaced_angles(32)) {
        worst = std::max(worst, std::abs(Hk.value(r * unit(th)) - 1.0 / kTwoPi));
        ++rep.checks;
      }
    }
    rep.worst_margin = std::min(rep.worst_margin, (kConstTol - worst) / kConstTol);
    std::ostringstream msg;
    msg << "H^kappa constancy, kappa " << kappa << ": max |H^kappa - 1/(2 pi)| = " << worst;
    rep.notes.push_back(msg.str());
    if (worst > kConstTol) ++rep.violations;
  }
  return rep;
}

}  // namespace robinasym
