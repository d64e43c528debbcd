#pragma once

#include "robinasym/boundary_data.hpp"
#include "robinasym/geometry.hpp"
#include "robinasym/harmonic_series.hpp"

namespace robinasym {

/// How the inclusion Robin coefficient enters the corrector in the rescaled
/// variable xi = (x - c) / eps.
///
/// Physical: the physical operator I - kappa d/d|x-c| becomes I - (kappa/eps) d/d|xi|,
///           so mode n is divided by 1 + n kappa / eps.
/// Unscaled: mode n is divided by 1 + n kappa, i.e. kappa is used unchanged in
///           the rescaled variable. Kept for comparison; it does not solve the
///           physical inclusion condition and its error does not vanish with eps.
enum class RobinScaling { Physical, Unscaled };

/// Bounded exterior solution on |xi| >= 1 of  a - robin da/d|xi| = data  at |xi| = 1:
/// constant = data mean, mode n coefficient (of |xi|^-n) = data^n / (1 + robin n).
/// Returned about the origin with scale 1.
HarmonicSeries solve_exterior_robin(const FourierData& data, double robin);

/// Decay-enforcing point-source strength
///   c0 = (mean f_D - V0(c)) / (Greg(c) + kappa/(2 pi eps) - log(eps)/(2 pi)).
/// Throws InvalidInput when the denominator is not positive.
double compute_c0(const Geometry& g, double kappa, double f_D_mean, double V0_at_c,
                  double G_reg_at_c);

/// Rescaled exterior corrector, zero mean and no log term. Mode n coefficient:
///   (f^n + kappa delta_{n,1} drift) / (1 + n robin),   robin = kappa/eps or kappa.
/// With eps = 1 both scalings coincide.
HarmonicSeries solve_w0(const FourierData& f_D, double kappa, Vec2 drift, double eps = 1.0,
                        RobinScaling scaling = RobinScaling::Physical);

/// Leading-order exterior corrector, placed at the inclusion.
struct ExteriorCorrector {
  double c0 = 0.0;
  HarmonicSeries w0;  // exterior series about c with scale eps
  double kappa = 0.0;
  double eps = 0.0;
  Vec2 drift{};
  RobinScaling scaling = RobinScaling::Physical;

  /// Boundary data of the rescaled problem:
  ///   sum_n (f^n + kappa delta_{n,1} drift) . (cos n t, sin n t).
  FourierData boundary_data(const FourierData& f_D) const;
  /// Effective Robin coefficient in the rescaled variable.
  double rescaled_robin() const;
};

ExteriorCorrector make_corrector(const Geometry& g, double kappa, const FourierData& f_D,
                                 double c0, Vec2 drift,
                                 RobinScaling scaling = RobinScaling::Physical);

/// max |w - robin dw/d|xi| - data| over m points of the circle |x - center| = scale,
/// with xi = (x - center) / scale.
double exterior_robin_residual(const HarmonicSeries& w, double robin, const FourierData& data,
                               int m);

}  // namespace robinasym
