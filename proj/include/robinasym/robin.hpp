#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "robinasym/geometry.hpp"

namespace robinasym {

/// Anything exposing value_and_gradient(Vec2) -> pair<double, Vec2>.
template <class F>
concept ScalarField = requires(const F& f, Vec2 x) {
  { f.value_and_gradient(x) };
};

/// (I + kappa d/dn) u at a boundary point, with the outward normal of Omega_eps.
template <ScalarField F>
double robin_trace(const Geometry& g, double kappa, const F& u, BoundaryPoint p) {
  const auto [v, grad] = u.value_and_gradient(position(g, p));
  return v + kappa * dot(grad, outward_normal(g, p));
}

/// max_j |T u(p_j) - data(theta_j)| over m equispaced points of one boundary.
template <ScalarField F>
double max_robin_residual(const Geometry& g, double kappa, const F& u, Boundary which, int m,
                          const std::function<double(double)>& data) {
  double worst = 0.0;
  for (const auto& p : sample_boundary(g, which, m)) {
    worst = std::max(worst, std::abs(robin_trace(g, kappa, u, p) - data(p.angle)));
  }
  return worst;
}

}  // namespace robinasym
