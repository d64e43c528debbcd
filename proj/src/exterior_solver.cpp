#include "robinasym/exterior_solver.hpp"

#include <cmath>
#include <sstream>

namespace robinasym {

namespace {

void require_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidInput("Robin coefficient kappa must be positive and finite");
  }
}

double robin_for(double kappa, double eps, RobinScaling scaling) {
  return scaling == RobinScaling::Physical ? kappa / eps : kappa;
}

// Mean removed (c0 absorbs it); the drift touches mode 1 only.
FourierData corrector_data(const FourierData& f_D, double kappa, Vec2 drift) {
  std::vector<FourierMode> modes = f_D.modes();
  if (modes.empty()) modes.resize(1);
  modes[0].c += kappa * drift.x;
  modes[0].s += kappa * drift.y;
  return FourierData(0.0, std::move(modes));
}

}  // namespace

HarmonicSeries solve_exterior_robin(const FourierData& data, double robin) {
  if (!(robin >= 0.0)) throw InvalidInput("exterior Robin coefficient must be non-negative");
  HarmonicSeries h;
  h.kind = SeriesKind::ExteriorDecaying;
  h.mean = data.mean();
  h.coeffs.resize(static_cast<std::size_t>(data.order()));
  for (int n = 1; n <= data.order(); ++n) {
    const auto f = data.mode(n);
    const double d = 1.0 + robin * n;
    h.coeffs[static_cast<std::size_t>(n - 1)] = {f.c / d, f.s / d};
  }
  return h;
}

double compute_c0(const Geometry& g, double kappa, double f_D_mean, double V0_at_c,
                  double G_reg_at_c) {
  require_kappa(kappa);
  const double eps = g.eps();
  const double denom = G_reg_at_c + kappa / (kTwoPi * eps) - std::log(eps) / kTwoPi;
  if (!(denom > 0.0)) {
    std::ostringstream msg;
    msg << "c0 denominator is not positive (" << denom << ") for eps = " << eps
        << ", kappa = " << kappa;
    throw InvalidInput(msg.str());
  }
  return (f_D_mean - V0_at_c) / denom;
}

HarmonicSeries solve_w0(const FourierData& f_D, double kappa, Vec2 drift, double eps,
                        RobinScaling scaling) {
  require_kappa(kappa);
  if (!(eps > 0.0)) throw InvalidInput("inclusion radius must be positive");
  return solve_exterior_robin(corrector_data(f_D, kappa, drift), robin_for(kappa, eps, scaling));
}

FourierData ExteriorCorrector::boundary_data(const FourierData& f_D) const {
  return corrector_data(f_D, kappa, drift);
}

double ExteriorCorrector::rescaled_robin() const { return robin_for(kappa, eps, scaling); }

ExteriorCorrector make_corrector(const Geometry& g, double kappa, const FourierData& f_D,
                                 double c0, Vec2 drift, RobinScaling scaling) {
  ExteriorCorrector out;
  out.c0 = c0;
  out.kappa = kappa;
  out.eps = g.eps();
  out.drift = drift;
  out.scaling = scaling;
  out.w0 = solve_w0(f_D, kappa, drift, g.eps(), scaling);
  out.w0.center = g.center();
  out.w0.scale = g.eps();
  return out;
}

double exterior_robin_residual(const HarmonicSeries& w, double robin, const FourierData& data,
                               int m) {
  double worst = 0.0;
  for (double t : equispaced_angles(m)) {
    const Vec2 e = unit(t);
    const auto [v, grad] = w.value_and_gradient(w.center + w.scale * e);
    // d/d|xi| = scale * d/d|x - center|
    const double trace = v - robin * w.scale * dot(grad, e);
    worst = std::max(worst, std::abs(trace - data.eval(t)));
  }
  return worst;
}

}  // namespace robinasym
