#include "robinasym/reference_solver.hpp"

#include <Eigen/Dense>
#include <complex>
#include <sstream>

#include "robinasym/robin.hpp"

namespace robinasym {

namespace {

using cplx = std::complex<double>;

void require_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidInput("Robin coefficient kappa must be positive and finite");
  }
}

ReferenceSolution empty_solution(const Geometry& g, double kappa, int N) {
  ReferenceSolution sol{g, kappa, {}, {}, {}, {}};
  sol.outer_series.kind = SeriesKind::InteriorRegular;
  sol.outer_series.scale = g.radius();
  sol.outer_series.coeffs.resize(static_cast<std::size_t>(N));
  sol.inner_series.kind = SeriesKind::ExteriorDecaying;
  sol.inner_series.center = g.center();
  sol.inner_series.scale = g.eps();
  sol.inner_series.coeffs.resize(static_cast<std::size_t>(N));
  return sol;
}

double data_magnitude(const RobinData& data, double eps) {
  const auto [lo, hi] = robin_data_range(data, eps);
  const double m = std::max(std::abs(lo), std::abs(hi));
  return m > 0.0 ? m : 1.0;
}

// Residuals on an independent grid plus the maximum-principle check that every
// accepted solve must pass.
void validate(ReferenceSolution& sol, const RobinData& data, int m, double tolerance) {
  const Geometry& g = sol.geometry;
  const FourierData outer = data.outer_total(g.eps());
  const FourierData inner = data.inclusion_total(g.eps());
  sol.residual.validation_points = m;
  sol.residual.outer = max_robin_residual(g, sol.kappa, sol, Boundary::Outer, m,
                                          [&](double t) { return outer.eval(t); });
  sol.residual.inclusion = max_robin_residual(g, sol.kappa, sol, Boundary::Inclusion, m,
                                              [&](double t) { return inner.eval(t); });

  const double scale = data_magnitude(data, g.eps());
  if (sol.residual.max() > tolerance * scale) {
    std::ostringstream msg;
    msg << "reference solve rejected: Robin residual outer = " << sol.residual.outer
        << ", inclusion = " << sol.residual.inclusion << " exceeds " << tolerance * scale
        << " on " << m << " validation points per boundary";
    throw ReferenceSolveError(msg.str());
  }

  const auto range = robin_data_range(data, g.eps());
  const double span = std::max(range.second - range.first, scale);
  std::vector<Vec2> pts;
  for (const auto& p : sample_boundary(g, Boundary::Outer, m)) pts.push_back(position(g, p));
  for (const auto& p : sample_boundary(g, Boundary::Inclusion, m)) pts.push_back(position(g, p));
  if (const int bad = max_principle_violations(sol, range, 1e-8 * span, pts); bad > 0) {
    std::ostringstream msg;
    msg << "reference solve rejected: " << bad << " samples violate the Robin maximum principle";
    throw ReferenceSolveError(msg.str());
  }
}

}  // namespace

double ReferenceSolution::value(Vec2 x) const {
  return outer_series.value(x) + inner_series.value(x);
}

std::pair<double, Vec2> ReferenceSolution::value_and_gradient(Vec2 x) const {
  auto [v, grad] = outer_series.value_and_gradient(x);
  const auto [iv, igrad] = inner_series.value_and_gradient(x);
  return {v + iv, grad + igrad};
}

ReferenceSolution solve_exact_concentric(const Geometry& g, double kappa, const RobinData& data,
                                         int N) {
  require_kappa(kappa);
  if (!g.concentric()) throw InvalidInput("concentric solver requires c = origin");
  if (N < 0) throw InvalidInput("truncation order must be non-negative");
  const double R = g.radius();
  const double eps = g.eps();
  const FourierData outer = data.outer_total(eps);
  const FourierData inner = data.inclusion_total(eps);

  ReferenceSolution sol = empty_solution(g, kappa, N);

  // Mode 0: u = a + b log r.
  {
    Eigen::Matrix2d A;
    A << 1.0, std::log(R) + kappa / R, 1.0, std::log(eps) - kappa / eps;
    const Eigen::Vector2d ab = A.fullPivLu().solve(Eigen::Vector2d(outer.mean(), inner.mean()));
    sol.outer_series.mean = ab(0);
    sol.inner_series.log_coeff = ab(1);
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(A);
    sol.conditioning.push_back(svd.singularValues()(0) / svd.singularValues()(1));
  }

  // Mode n: u = a (r/R)^n + b (eps/r)^n, times cos or sin.
  for (int n = 1; n <= N; ++n) {
    const double q = std::pow(eps / R, n);
    Eigen::Matrix2d A;
    A << 1.0 + kappa * n / R, q * (1.0 - kappa * n / R),
         q * (1.0 - kappa * n / eps), 1.0 + kappa * n / eps;
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(A);
    const double cond = svd.singularValues()(0) / svd.singularValues()(1);
    sol.conditioning.push_back(cond);
    if (!(cond <= kMaxModeCondition)) {
      std::ostringstream msg;
      msg << "mode " << n << " system is near-singular (condition " << cond << ")";
      throw ReferenceSolveError(msg.str());
    }
    const auto lu = A.fullPivLu();
    const auto fo = outer.mode(n);
    const auto fi = inner.mode(n);
    const Eigen::Vector2d cs = lu.solve(Eigen::Vector2d(fo.c, fi.c));
    const Eigen::Vector2d sn = lu.solve(Eigen::Vector2d(fo.s, fi.s));
    sol.outer_series.coeffs[static_cast<std::size_t>(n - 1)] = {cs(0), sn(0)};
    sol.inner_series.coeffs[static_cast<std::size_t>(n - 1)] = {cs(1), sn(1)};
  }

  validate(sol, data, std::max(8 * N, 64), EccentricOptions{}.tolerance);
  return sol;
}

ReferenceSolution solve_exact_eccentric(const Geometry& g, double kappa, const RobinData& data,
                                        int N, const EccentricOptions& opts) {
  require_kappa(kappa);
  if (N < 0) throw InvalidInput("truncation order must be non-negative");
  const int min_points = 2 * (2 * N + 2);
  const int M = opts.collocation > 0 ? opts.collocation : min_points;
  if (M < min_points) {
    std::ostringstream msg;
    msg << "collocation count " << M << " below the required " << min_points;
    throw InvalidInput(msg.str());
  }
  const double R = g.radius();
  const double eps = g.eps();
  const Vec2 c = g.center();
  const FourierData outer = data.outer_total(eps);
  const FourierData inner = data.inclusion_total(eps);

  // Columns: [1, outer cos/sin n=1..N, log rho, inner cos/sin n=1..N].
  const int cols = 2 + 4 * N;
  const int log_col = 1 + 2 * N;
  Eigen::MatrixXd A(2 * M, cols);
  Eigen::VectorXd rhs(2 * M);

  int row = 0;
  for (Boundary which : {Boundary::Outer, Boundary::Inclusion}) {
    for (const auto& p : sample_boundary(g, which, M)) {
      const Vec2 x = position(g, p);
      const Vec2 nrm = outward_normal(g, p);
      // Robin trace of Re(F) for analytic F with derivative F': F + kappa (Re F', -Im F').n
      auto trace = [&](cplx F, cplx dF) {
        return F.real() + kappa * (dF.real() * nrm.x - dF.imag() * nrm.y);
      };
      const cplx z(x.x, x.y);
      const cplx zeta(x.x - c.x, x.y - c.y);
      A(row, 0) = 1.0;
      cplx pw(1.0, 0.0);
      for (int n = 1; n <= N; ++n) {
        const cplx dpw = static_cast<double>(n) * pw / R;  // d/dz (z/R)^n
        pw *= z / R;
        A(row, 2 * n - 1) = trace(pw, dpw);
        A(row, 2 * n) = trace(cplx(0, -1) * pw, cplx(0, -1) * dpw);
      }
      A(row, log_col) = trace(std::log(std::abs(zeta)), 1.0 / zeta);
      cplx qw(1.0, 0.0);
      for (int n = 1; n <= N; ++n) {
        qw *= eps / zeta;
        const cplx dqw = -static_cast<double>(n) * qw / zeta;
        A(row, log_col + 2 * n - 1) = trace(qw, dqw);
        A(row, log_col + 2 * n) = trace(cplx(0, 1) * qw, cplx(0, 1) * dqw);
      }
      rhs(row) = which == Boundary::Outer ? outer.eval(p.angle) : inner.eval(p.angle);
      ++row;
    }
  }

  Eigen::VectorXd col_scale = A.colwise().norm().transpose();
  for (int j = 0; j < cols; ++j) {
    if (col_scale(j) == 0.0) col_scale(j) = 1.0;
    A.col(j) /= col_scale(j);
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  const Eigen::VectorXd w = qr.solve(rhs).cwiseQuotient(col_scale);

  ReferenceSolution sol = empty_solution(g, kappa, N);
  const auto diag = qr.matrixQR().diagonal().cwiseAbs();
  sol.conditioning.push_back(diag.maxCoeff() / std::max(diag.minCoeff(), 1e-300));
  sol.outer_series.mean = w(0);
  sol.inner_series.log_coeff = w(log_col);
  for (int n = 1; n <= N; ++n) {
    sol.outer_series.coeffs[static_cast<std::size_t>(n - 1)] = {w(2 * n - 1), w(2 * n)};
    sol.inner_series.coeffs[static_cast<std::size_t>(n - 1)] = {w(log_col + 2 * n - 1),
                                                                w(log_col + 2 * n)};
  }

  validate(sol, data, 2 * M, opts.tolerance);
  return sol;
}

ReferenceSolution solve_exact(const Geometry& g, double kappa, const RobinData& data, int N,
                              const EccentricOptions& opts) {
  if (g.concentric()) return solve_exact_concentric(g, kappa, data, N);
  return solve_exact_eccentric(g, kappa, data, N, opts);
}

std::vector<Vec2> sampling_points(const Geometry& g, const SamplingSpec& s) {
  std::vector<Vec2> pts;
  for (Boundary which : {Boundary::Outer, Boundary::Inclusion}) {
    for (const auto& p : sample_boundary(g, which, s.boundary_points)) pts.push_back(position(g, p));
  }
  if (s.n_radial >= 2 && s.n_angular >= 1) {
    const auto grid = polar_grid(g, s.n_radial, s.n_angular);
    pts.insert(pts.end(), grid.begin(), grid.end());
  }
  return pts;
}

SupDifference sup_difference(const ReferenceSolution& ref, const CompoundApproximation& ca,
                             const SamplingSpec& s) {
  return sup_difference(ref.geometry, ref, ca, s);
}

std::pair<double, double> robin_data_range(const RobinData& data, double eps, int m) {
  const FourierData outer = data.outer_total(eps);
  const FourierData inner = data.inclusion_total(eps);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double t : equispaced_angles(m)) {
    for (double v : {outer.eval(t), inner.eval(t)}) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {lo, hi};
}

}  // namespace robinasym
