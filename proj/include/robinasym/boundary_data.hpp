#pragma once

#include <functional>
#include <span>
#include <vector>

#include "robinasym/geometry.hpp"

namespace robinasym {

/// Cosine/sine coefficient pair of one angular mode.
struct FourierMode {
  double c = 0.0;
  double s = 0.0;

  friend bool operator==(const FourierMode&, const FourierMode&) = default;
};

inline double magnitude(FourierMode m) { return std::hypot(m.c, m.s); }

/// Truncated Fourier series on a circle:
///   f(theta) = mean + sum_{n=1..N} (c_n cos n theta + s_n sin n theta).
class FourierData {
 public:
  FourierData() = default;
  explicit FourierData(double mean, std::vector<FourierMode> modes = {});

  static FourierData constant(double value) { return FourierData(value); }
  /// Single mode: amplitude * (cos n theta) if !sine, else amplitude * sin n theta.
  static FourierData single_mode(int n, double amplitude, bool sine = false);
  /// Flat layout [mean, c1, s1, c2, s2, ...]; a trailing unpaired cosine is allowed.
  static FourierData from_array(std::span<const double> flat);

  double mean() const { return mean_; }
  int order() const { return static_cast<int>(modes_.size()); }
  const std::vector<FourierMode>& modes() const { return modes_; }
  /// Mode n >= 1; zero beyond the stored order.
  FourierMode mode(int n) const;

  double eval(double theta) const;
  /// d/dtheta of the series.
  double derivative(double theta) const;

  /// First `n` modes only.
  FourierData truncated(int n) const;
  std::vector<double> to_array() const;

  /// Largest |f^n| among the stored modes (0 if none).
  double max_mode_magnitude() const;
  /// |f^N| of the last stored mode (0 if none); used as a truncation diagnostic.
  double last_mode_magnitude() const;

  FourierData& operator+=(const FourierData& o);
  FourierData& operator*=(double s);
  friend FourierData operator+(FourierData a, const FourierData& b) { return a += b; }
  friend FourierData operator*(double s, FourierData a) { return a *= s; }

 private:
  double mean_ = 0.0;
  std::vector<FourierMode> modes_;
};

double eval(const FourierData& fd, double theta);

struct AngleSample {
  double angle = 0.0;
  double value = 0.0;
};

/// Rectangle-rule Fourier coefficients from M equispaced samples.
/// Rejects M < 2N + 1 (aliasing) and non-equispaced angles.
FourierData fourier_project(std::span<const AngleSample> samples, int N);

/// Samples `f` at M equispaced angles (-pi + 2 pi j / M) and projects.
FourierData fourier_project(const std::function<double(double)>& f, int N, int M);

/// Boundary data of the linearised problem u + kappa du/dn = f + eps g.
struct RobinData {
  FourierData f_outer;      // f_Omega
  FourierData g_outer;      // g_Omega
  FourierData f_inclusion;  // f_D, a function of the angle about c
  FourierData g_inclusion;  // g_D

  /// Highest order among the four series.
  int max_order() const;
  FourierData outer_total(double eps) const { return f_outer + eps * g_outer; }
  FourierData inclusion_total(double eps) const { return f_inclusion + eps * g_inclusion; }
};

}  // namespace robinasym
