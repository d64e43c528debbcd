#include "robinasym/harmonic_series.hpp"

#include <complex>
#include <cstdio>
#include <sstream>

namespace robinasym {

namespace {

using cplx = std::complex<double>;

// Every mode is Re(w_n * F(z)) for an analytic F, so the gradient is
// (Re F', -Im F') accumulated over the modes.
//   interior: a cos + b sin = Re((a - i b) (z/s)^n)
//   exterior: a cos + b sin = Re((a + i b) (s/z)^n)
std::pair<double, Vec2> evaluate(const HarmonicSeries& h, Vec2 x, bool want_grad) {
  const cplx z(x.x - h.center.x, x.y - h.center.y);
  double value = h.mean;
  cplx deriv(0.0, 0.0);

  if (h.kind == SeriesKind::InteriorRegular) {
    const cplx w = z / h.scale;
    cplx prev(1.0, 0.0);  // w^(n-1)
    for (int n = 1; n <= h.order(); ++n) {
      const auto& m = h.coeffs[static_cast<std::size_t>(n - 1)];
      const cplx a(m.c, -m.s);
      if (want_grad) deriv += static_cast<double>(n) * a * prev;
      prev *= w;
      value += (a * prev).real();
    }
    deriv /= h.scale;
  } else {
    if (z == cplx(0.0, 0.0)) {
      throw InvalidInput("exterior series cannot be evaluated at its center");
    }
    const cplx w = h.scale / z;
    if (h.log_coeff != 0.0) {
      value += h.log_coeff * std::log(std::abs(z));
      if (want_grad) deriv += h.log_coeff / z;
    }
    cplx pw(1.0, 0.0);  // w^n
    for (int n = 1; n <= h.order(); ++n) {
      const auto& m = h.coeffs[static_cast<std::size_t>(n - 1)];
      const cplx a(m.c, m.s);
      pw *= w;
      value += (a * pw).real();
      // d/dz (s/z)^n = -n (s/z)^n / z
      if (want_grad) deriv -= static_cast<double>(n) * a * pw / z;
    }
  }
  return {value, Vec2{deriv.real(), -deriv.imag()}};
}

}  // namespace

double HarmonicSeries::value(Vec2 x) const { return evaluate(*this, x, false).first; }

Vec2 HarmonicSeries::gradient(Vec2 x) const { return evaluate(*this, x, true).second; }

std::pair<double, Vec2> HarmonicSeries::value_and_gradient(Vec2 x) const {
  return evaluate(*this, x, true);
}

FourierMode HarmonicSeries::raw_coeff(int n) const {
  if (n < 1 || n > order()) return {};
  const auto m = coeffs[static_cast<std::size_t>(n - 1)];
  const double f = kind == SeriesKind::InteriorRegular ? std::pow(scale, -n) : std::pow(scale, n);
  return {m.c * f, m.s * f};
}

double eval_series(const HarmonicSeries& h, Vec2 x) { return h.value(x); }

Vec2 grad_series(const HarmonicSeries& h, Vec2 x) { return h.gradient(x); }

std::string dump(const HarmonicSeries& h) {
  std::ostringstream out;
  char buf[128];
  out << (h.kind == SeriesKind::InteriorRegular ? "interior" : "exterior") << " series about ("
      << h.center.x << ", " << h.center.y << "), scale " << h.scale << ", order " << h.order()
      << '\n';
  std::snprintf(buf, sizeof buf, "  mean      % .17e\n", h.mean);
  out << buf;
  if (h.kind == SeriesKind::ExteriorDecaying) {
    std::snprintf(buf, sizeof buf, "  log       % .17e\n", h.log_coeff);
    out << buf;
  }
  for (int n = 1; n <= h.order(); ++n) {
    const auto& m = h.coeffs[static_cast<std::size_t>(n - 1)];
    std::snprintf(buf, sizeof buf, "  %4d  % .17e  % .17e\n", n, m.c, m.s);
    out << buf;
  }
  return out.str();
}

}  // namespace robinasym
