#include "robinasym/geometry.hpp"

#include <sstream>

namespace robinasym {

Geometry Geometry::make(double R, Vec2 c, double eps) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw InvalidInput("disk radius must be positive and finite");
  }
  if (!std::isfinite(c.x) || !std::isfinite(c.y) || !(norm(c) < R)) {
    throw InvalidInput("inclusion center must lie strictly inside the disk (|c| < R)");
  }
  if (!(eps > 0.0)) {
    throw InvalidInput("inclusion radius must be positive");
  }
  const double r_min = R - norm(c);
  if (eps > 0.5 * r_min) {
    std::ostringstream msg;
    msg << "epsilon bound violated: eps = " << eps << " exceeds R_min/2 = " << 0.5 * r_min;
    throw InvalidInput(msg.str());
  }
  return Geometry(R, c, eps);
}

Geometry make_geometry(double R, Vec2 c, double eps) { return Geometry::make(R, c, eps); }

Region classify(const Geometry& g, Vec2 x, double tol) {
  if (tol < 0.0) tol = g.boundary_tolerance();
  const double r = norm(x);
  const double rho = norm(x - g.center());
  if (std::abs(r - g.radius()) <= tol) return Region::OnOuterBoundary;
  if (r > g.radius()) return Region::Outside;
  if (std::abs(rho - g.eps()) <= tol) return Region::OnInclusionBoundary;
  if (rho < g.eps()) return Region::InsideInclusion;
  return Region::Interior;
}

std::string to_string(Region r) {
  switch (r) {
    case Region::Interior: return "Interior";
    case Region::InsideInclusion: return "InsideInclusion";
    case Region::OnOuterBoundary: return "OnOuterBoundary";
    case Region::OnInclusionBoundary: return "OnInclusionBoundary";
    case Region::Outside: return "Outside";
  }
  return "?";
}

Vec2 position(const Geometry& g, BoundaryPoint p) {
  if (p.which == Boundary::Outer) return g.radius() * unit(p.angle);
  return g.center() + g.eps() * unit(p.angle);
}

Vec2 outward_normal(const Geometry&, BoundaryPoint p) {
  if (p.which == Boundary::Outer) return unit(p.angle);
  return -unit(p.angle);
}

std::vector<double> equispaced_angles(int m) {
  if (m < 1) throw InvalidInput("sample count must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = -kPi + kTwoPi * j / m;
  return out;
}

std::vector<BoundaryPoint> sample_boundary(const Geometry&, Boundary which, int m) {
  std::vector<BoundaryPoint> out;
  out.reserve(static_cast<std::size_t>(std::max(m, 0)));
  for (double a : equispaced_angles(m)) out.push_back({which, a});
  return out;
}

double ray_exit_distance(const Geometry& g, double angle) {
  // |c + t e| = R  =>  t = -c.e + sqrt((c.e)^2 - |c|^2 + R^2)
  const Vec2 e = unit(angle);
  const double ce = dot(g.center(), e);
  const double c2 = dot(g.center(), g.center());
  return -ce + std::sqrt(ce * ce - c2 + g.radius() * g.radius());
}

}  // namespace robinasym
