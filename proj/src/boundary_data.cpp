#include "robinasym/boundary_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace robinasym {

FourierData::FourierData(double mean, std::vector<FourierMode> modes)
    : mean_(mean), modes_(std::move(modes)) {
  if (!std::isfinite(mean_)) throw InvalidInput("Fourier mean must be finite");
  for (const auto& m : modes_) {
    if (!std::isfinite(m.c) || !std::isfinite(m.s)) {
      throw InvalidInput("Fourier coefficients must be finite");
    }
  }
}

FourierData FourierData::single_mode(int n, double amplitude, bool sine) {
  if (n < 0) throw InvalidInput("mode index must be non-negative");
  if (n == 0) return FourierData(amplitude);
  std::vector<FourierMode> modes(static_cast<std::size_t>(n));
  if (sine) modes.back().s = amplitude;
  else modes.back().c = amplitude;
  return FourierData(0.0, std::move(modes));
}

FourierData FourierData::from_array(std::span<const double> flat) {
  if (flat.empty()) return FourierData();
  std::vector<FourierMode> modes;
  for (std::size_t i = 1; i < flat.size(); i += 2) {
    FourierMode m;
    m.c = flat[i];
    if (i + 1 < flat.size()) m.s = flat[i + 1];
    modes.push_back(m);
  }
  return FourierData(flat[0], std::move(modes));
}

FourierMode FourierData::mode(int n) const {
  if (n < 1 || n > order()) return {};
  return modes_[static_cast<std::size_t>(n - 1)];
}

double FourierData::eval(double theta) const {
  double v = mean_;
  for (int n = 1; n <= order(); ++n) {
    const auto& m = modes_[static_cast<std::size_t>(n - 1)];
    v += m.c * std::cos(n * theta) + m.s * std::sin(n * theta);
  }
  return v;
}

double FourierData::derivative(double theta) const {
  double v = 0.0;
  for (int n = 1; n <= order(); ++n) {
    const auto& m = modes_[static_cast<std::size_t>(n - 1)];
    v += n * (m.s * std::cos(n * theta) - m.c * std::sin(n * theta));
  }
  return v;
}

FourierData FourierData::truncated(int n) const {
  n = std::clamp(n, 0, order());
  return FourierData(mean_, std::vector<FourierMode>(modes_.begin(), modes_.begin() + n));
}

std::vector<double> FourierData::to_array() const {
  std::vector<double> out{mean_};
  for (const auto& m : modes_) {
    out.push_back(m.c);
    out.push_back(m.s);
  }
  return out;
}

double FourierData::max_mode_magnitude() const {
  double best = 0.0;
  for (const auto& m : modes_) best = std::max(best, magnitude(m));
  return best;
}

double FourierData::last_mode_magnitude() const {
  return modes_.empty() ? 0.0 : magnitude(modes_.back());
}

FourierData& FourierData::operator+=(const FourierData& o) {
  mean_ += o.mean_;
  if (o.modes_.size() > modes_.size()) modes_.resize(o.modes_.size());
  for (std::size_t i = 0; i < o.modes_.size(); ++i) {
    modes_[i].c += o.modes_[i].c;
    modes_[i].s += o.modes_[i].s;
  }
  return *this;
}

FourierData& FourierData::operator*=(double s) {
  mean_ *= s;
  for (auto& m : modes_) {
    m.c *= s;
    m.s *= s;
  }
  return *this;
}

double eval(const FourierData& fd, double theta) { return fd.eval(theta); }

FourierData fourier_project(std::span<const AngleSample> samples, int N) {
  const int M = static_cast<int>(samples.size());
  if (N < 0) throw InvalidInput("truncation order must be non-negative");
  if (M < 2 * N + 1) {
    std::ostringstream msg;
    msg << "aliasing: " << M << " samples cannot resolve order " << N << " (need at least "
        << 2 * N + 1 << ")";
    throw InvalidInput(msg.str());
  }
  const double step = kTwoPi / M;
  for (int j = 1; j < M; ++j) {
    const double gap = samples[static_cast<std::size_t>(j)].angle -
                       samples[static_cast<std::size_t>(j - 1)].angle;
    if (std::abs(gap - step) > 1e-9 * step) throw InvalidInput("samples must be equispaced in angle");
  }

  double mean = 0.0;
  for (const auto& s : samples) mean += s.value;
  mean /= M;

  std::vector<FourierMode> modes(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    double a = 0.0;
    double b = 0.0;
    for (const auto& s : samples) {
      a += s.value * std::cos(n * s.angle);
      b += s.value * std::sin(n * s.angle);
    }
    const double w = 2.0 / M;
    modes[static_cast<std::size_t>(n - 1)] = {w * a, w * b};
  }
  return FourierData(mean, std::move(modes));
}

FourierData fourier_project(const std::function<double(double)>& f, int N, int M) {
  std::vector<AngleSample> samples;
  samples.reserve(static_cast<std::size_t>(M));
  for (double a : equispaced_angles(M)) samples.push_back({a, f(a)});
  return fourier_project(samples, N);
}

int RobinData::max_order() const {
  return std::max({f_outer.order(), g_outer.order(), f_inclusion.order(), g_inclusion.order()});
}

}  // namespace robinasym
