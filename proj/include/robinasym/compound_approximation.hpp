#pragma once

#include <iosfwd>

#include "robinasym/boundary_data.hpp"
#include "robinasym/exterior_solver.hpp"
#include "robinasym/geometry.hpp"
#include "robinasym/harmonic_series.hpp"
#include "robinasym/interior_solver.hpp"

namespace robinasym {

struct CompoundOptions {
  int order = 32;                      // truncation of V0 and w0
  int green_order = kDefaultGreenOrder;  // truncation of the Green regular part
  RobinScaling scaling = RobinScaling::Physical;
  /// Multiplier applied to c0 after it is computed. 1 except in negative controls.
  double c0_factor = 1.0;
};

/// Leading-order compound approximation
///
///   u0(x) = V0(x) + c0 G(x, c) + w0((x - c) / eps)
///
/// V0 carries the outer Robin data, c0 G(., c) the point source that makes the
/// inclusion corrector decay, and w0 the decaying corrector fed by the
/// inclusion data and the drift grad V0(c) + c0 grad Greg(c). The Green term is
/// kept exact rather than Taylor-expanded. The g-perturbations of the data do
/// not enter at this order.
class CompoundApproximation {
 public:
  static CompoundApproximation build(const Geometry& g, double kappa, const RobinData& data,
                                     const CompoundOptions& opts = {});

  const Geometry& geometry() const { return geometry_; }
  double kappa() const { return kappa_; }
  const HarmonicSeries& V0() const { return V0_; }
  const GreensFunction& green() const { return green_; }
  const ExteriorCorrector& corrector() const { return corrector_; }
  double c0() const { return corrector_.c0; }
  Vec2 drift() const { return corrector_.drift; }
  const FourierData& inclusion_data() const { return f_D_; }

  /// V0 + c0 G(., c), the singular interior part.
  std::pair<double, Vec2> interior_part(Vec2 x) const;

  /// Rejects points inside the open inclusion or outside the disk.
  double value(Vec2 x) const;
  std::pair<double, Vec2> value_and_gradient(Vec2 x) const;

 private:
  CompoundApproximation(Geometry g) : geometry_(g) {}
  void require_in_domain(Vec2 x) const;

  Geometry geometry_;
  double kappa_ = 0.0;
  HarmonicSeries V0_;
  GreensFunction green_;
  ExteriorCorrector corrector_;
  FourierData f_D_;
};

CompoundApproximation build(const Geometry& g, double kappa, const RobinData& data, int N);

double eval_u0(const CompoundApproximation& ca, Vec2 x);

/// (I + kappa d/dn) u0, inclusion normal = -d/drho.
double robin_trace(const CompoundApproximation& ca, BoundaryPoint p);

/// Polar grid about c covering Omega_eps: radii geometric from eps to the
/// outer circle along each ray, n_angular equispaced angles.
std::vector<Vec2> polar_grid(const Geometry& g, int n_radial, int n_angular);

/// Writes "x,y,<column>" rows for f evaluated on `points`.
void write_field_csv(std::ostream& out, const std::vector<Vec2>& points,
                     const std::function<double(Vec2)>& f, const std::string& column);

}  // namespace robinasym
