#include "robinasym/interior_solver.hpp"

#include <algorithm>
#include <cmath>

#include "robinasym/robin.hpp"

namespace robinasym {

namespace {

void require_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidInput("Robin coefficient kappa must be positive and finite");
  }
}

HarmonicSeries per_mode_disk_solve(double R, double kappa, const FourierData& data) {
  HarmonicSeries h;
  h.kind = SeriesKind::InteriorRegular;
  h.mean = data.mean();
  h.coeffs.resize(static_cast<std::size_t>(data.order()));
  for (int n = 1; n <= data.order(); ++n) {
    const auto f = data.mode(n);
    const double d = std::pow(R, n) * (1.0 + kappa * n / R);
    h.coeffs[static_cast<std::size_t>(n - 1)] = {f.c / d, f.s / d};
  }
  return h;
}

}  // namespace

HarmonicSeries solve_V0(const Geometry& g, double kappa, const FourierData& f_outer) {
  require_kappa(kappa);
  return per_mode_disk_solve(g.radius(), kappa, f_outer);
}

double GreensFunction::value(Vec2 x) const {
  return -std::log(norm(x - source)) / kTwoPi + regular_part.value(x);
}

Vec2 GreensFunction::gradient(Vec2 x) const { return value_and_gradient(x).second; }

std::pair<double, Vec2> GreensFunction::value_and_gradient(Vec2 x) const {
  const Vec2 d = x - source;
  const double r2 = dot(d, d);
  auto [v, grad] = regular_part.value_and_gradient(x);
  v -= 0.5 * std::log(r2) / kTwoPi;
  grad -= (1.0 / (kTwoPi * r2)) * d;
  return {v, grad};
}

double GreensFunction::truncation_ratio() const {
  // Compare boundary-size contributions, so the constant term counts too
  // (the centred regular part is a pure constant).
  const auto& rp = regular_part;
  if (rp.coeffs.empty()) return 0.0;
  const double R = radius;
  double largest = std::abs(rp.mean);
  double last = 0.0;
  for (int n = 1; n <= rp.order(); ++n) {
    const double m = magnitude(rp.coeffs[static_cast<std::size_t>(n - 1)]) * std::pow(R, n);
    largest = std::max(largest, m);
    last = m;
  }
  return largest == 0.0 ? 0.0 : last / largest;
}

double green_regular_robin_data(const Geometry& g, double kappa, double theta) {
  const Vec2 x = g.radius() * unit(theta);
  const Vec2 d = x - g.center();
  const double r2 = dot(d, d);
  return 0.5 * std::log(r2) / kTwoPi + kappa / kTwoPi * dot(d, unit(theta)) / r2;
}

GreensFunction solve_green_regular(const Geometry& g, double kappa, int order) {
  require_kappa(kappa);
  if (order < 0) throw InvalidInput("truncation order must be non-negative");
  const int M = 4 * order + 2;
  const auto rhs = fourier_project(
      [&](double theta) { return green_regular_robin_data(g, kappa, theta); }, order, M);
  GreensFunction G;
  G.regular_part = per_mode_disk_solve(g.radius(), kappa, rhs);
  G.source = g.center();
  G.radius = g.radius();
  G.kappa = kappa;
  return G;
}

double V0_robin_residual(const Geometry& g, double kappa, const HarmonicSeries& V0,
                         const FourierData& f_outer, int m) {
  return max_robin_residual(g, kappa, V0, Boundary::Outer, m,
                            [&](double t) { return f_outer.eval(t); });
}

double green_robin_residual(const Geometry& g, const GreensFunction& G, int m) {
  return max_robin_residual(g, G.kappa, G, Boundary::Outer, m, [](double) { return 0.0; });
}

}  // namespace robinasym
