#pragma once

#include "robinasym/boundary_data.hpp"
#include "robinasym/geometry.hpp"
#include "robinasym/harmonic_series.hpp"

namespace robinasym {

/// Bounded harmonic V0 on the disk with V0 + kappa dV0/dr = f_outer at r = R.
///
/// Robin conditions diagonalise in the Fourier basis on a disk, so the mode-n
/// coefficient of r^n is f^n / (R^n (1 + kappa n / R)) and the constant mode
/// equals the data mean.
HarmonicSeries solve_V0(const Geometry& g, double kappa, const FourierData& f_outer);

/// Robin Green's function G(x, c) = -(1/2pi) log|x - c| + regular_part(x),
/// with G + kappa dG/dn = 0 on the outer circle.
struct GreensFunction {
  HarmonicSeries regular_part;  // interior series about the origin
  Vec2 source{};
  double kappa = 0.0;
  double radius = 1.0;  // outer radius R

  double value(Vec2 x) const;
  Vec2 gradient(Vec2 x) const;
  std::pair<double, Vec2> value_and_gradient(Vec2 x) const;

  /// |last term| / |largest term| of the regular part on the outer circle,
  /// constant included; adequately truncated when below 1e-10.
  double truncation_ratio() const;
};

inline constexpr int kDefaultGreenOrder = 64;

/// Samples the Robin data the regular part must match,
///   (1/2pi) log|x - c| + (kappa/2pi) (x - c).n / |x - c|^2,
/// at 4N + 2 points of the outer circle, projects to order N and divides per
/// mode as in solve_V0.
GreensFunction solve_green_regular(const Geometry& g, double kappa, int order = kDefaultGreenOrder);

/// Right-hand side of the regular part's Robin condition at outer angle theta.
double green_regular_robin_data(const Geometry& g, double kappa, double theta);

/// Largest Robin residual of V0 at m outer collocation points.
double V0_robin_residual(const Geometry& g, double kappa, const HarmonicSeries& V0,
                         const FourierData& f_outer, int m);

/// Largest residual of G + kappa dG/dn = 0 at m outer collocation points.
double green_robin_residual(const Geometry& g, const GreensFunction& G, int m);

}  // namespace robinasym
