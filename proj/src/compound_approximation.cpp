#include "robinasym/compound_approximation.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "robinasym/robin.hpp"

namespace robinasym {

CompoundApproximation CompoundApproximation::build(const Geometry& g, double kappa,
                                                   const RobinData& data,
                                                   const CompoundOptions& opts) {
  CompoundApproximation ca(g);
  ca.kappa_ = kappa;
  ca.f_D_ = data.f_inclusion.truncated(opts.order);
  ca.V0_ = solve_V0(g, kappa, data.f_outer.truncated(opts.order));
  ca.green_ = solve_green_regular(g, kappa, opts.green_order);

  const Vec2 c = g.center();
  const auto [V0_c, gradV0_c] = ca.V0_.value_and_gradient(c);
  const auto [Greg_c, gradGreg_c] = ca.green_.regular_part.value_and_gradient(c);
  const double c0 = opts.c0_factor * compute_c0(g, kappa, ca.f_D_.mean(), V0_c, Greg_c);
  const Vec2 drift = gradV0_c + c0 * gradGreg_c;
  ca.corrector_ = make_corrector(g, kappa, ca.f_D_, c0, drift, opts.scaling);
  return ca;
}

std::pair<double, Vec2> CompoundApproximation::interior_part(Vec2 x) const {
  auto [v, grad] = V0_.value_and_gradient(x);
  const auto [gv, ggrad] = green_.value_and_gradient(x);
  v += corrector_.c0 * gv;
  grad += corrector_.c0 * ggrad;
  return {v, grad};
}

void CompoundApproximation::require_in_domain(Vec2 x) const {
  const Region r = classify(geometry_, x);
  if (r == Region::InsideInclusion || r == Region::Outside) {
    std::ostringstream msg;
    msg << "point (" << x.x << ", " << x.y << ") is outside the closed perforated domain ("
        << to_string(r) << ")";
    throw InvalidInput(msg.str());
  }
}

double CompoundApproximation::value(Vec2 x) const { return value_and_gradient(x).first; }

std::pair<double, Vec2> CompoundApproximation::value_and_gradient(Vec2 x) const {
  require_in_domain(x);
  auto [v, grad] = interior_part(x);
  const auto [wv, wgrad] = corrector_.w0.value_and_gradient(x);
  return {v + wv, grad + wgrad};
}

CompoundApproximation build(const Geometry& g, double kappa, const RobinData& data, int N) {
  CompoundOptions opts;
  opts.order = N;
  return CompoundApproximation::build(g, kappa, data, opts);
}

double eval_u0(const CompoundApproximation& ca, Vec2 x) { return ca.value(x); }

double robin_trace(const CompoundApproximation& ca, BoundaryPoint p) {
  return robin_trace(ca.geometry(), ca.kappa(), ca, p);
}

std::vector<Vec2> polar_grid(const Geometry& g, int n_radial, int n_angular) {
  if (n_radial < 2 || n_angular < 1) throw InvalidInput("polar grid needs >= 2 radii and >= 1 angle");
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n_radial * n_angular));
  for (double t : equispaced_angles(n_angular)) {
    const double rho_max = ray_exit_distance(g, t);
    const double ratio = rho_max / g.eps();
    for (int i = 0; i < n_radial; ++i) {
      double rho = g.eps() * std::pow(ratio, static_cast<double>(i) / (n_radial - 1));
      if (i == n_radial - 1) rho = rho_max;
      out.push_back(g.center() + rho * unit(t));
    }
  }
  return out;
}

void write_field_csv(std::ostream& out, const std::vector<Vec2>& points,
                     const std::function<double(Vec2)>& f, const std::string& column) {
  out << "x,y," << column << '\n';
  char buf[96];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.x, p.y, f(p));
    out << buf;
  }
}

}  // namespace robinasym
