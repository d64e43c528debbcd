#pragma once

#include <string>
#include <vector>

#include "robinasym/boundary_data.hpp"
#include "robinasym/geometry.hpp"

namespace robinasym {

enum class SeriesKind { InteriorRegular, ExteriorDecaying };

/// Finite harmonic mode expansion about `center`, with r = |x - center|:
///
///   InteriorRegular:  mean + sum_n (r/scale)^n   (a_n cos n t + b_n sin n t)
///   ExteriorDecaying: mean + log_coeff log r
///                          + sum_n (scale/r)^n   (a_n cos n t + b_n sin n t)
///
/// `scale` only normalises the radial powers; with scale = 1 the coefficients
/// are the raw r^n / r^-n coefficients.
struct HarmonicSeries {
  Vec2 center{};
  SeriesKind kind = SeriesKind::InteriorRegular;
  double scale = 1.0;
  double mean = 0.0;
  std::vector<FourierMode> coeffs;
  double log_coeff = 0.0;  // ExteriorDecaying only

  int order() const { return static_cast<int>(coeffs.size()); }

  double value(Vec2 x) const;
  Vec2 gradient(Vec2 x) const;
  /// Value and gradient from a single pass over the modes.
  std::pair<double, Vec2> value_and_gradient(Vec2 x) const;

  /// Coefficient of the n-th mode with scale removed, i.e. of r^n (interior)
  /// or r^-n (exterior).
  FourierMode raw_coeff(int n) const;
};

double eval_series(const HarmonicSeries& h, Vec2 x);
Vec2 grad_series(const HarmonicSeries& h, Vec2 x);

/// Plain-text coefficient table.
std::string dump(const HarmonicSeries& h);

}  // namespace robinasym
