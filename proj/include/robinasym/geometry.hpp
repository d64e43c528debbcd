#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace robinasym {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Thrown when caller-supplied parameters violate a documented precondition
/// (geometric assumptions, non-positive Robin coefficient, aliasing, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Disk Omega = B_R(0) with the closed inclusion D = B_eps(c) removed.
///
/// Validated on construction: |c| < R, eps > 0 and eps <= R_min / 2 where
/// R_min = R - |c| and R_max = R + |c| are the extreme distances from c to the
/// outer circle.
class Geometry {
 public:
  static Geometry make(double R, Vec2 c, double eps);

  double radius() const { return R_; }
  Vec2 center() const { return c_; }
  double eps() const { return eps_; }
  double r_min() const { return R_ - norm(c_); }
  double r_max() const { return R_ + norm(c_); }
  bool concentric() const { return c_.x == 0.0 && c_.y == 0.0; }

  /// Absolute distance under which a point counts as lying on a boundary.
  double boundary_tolerance() const { return 1e-12 * R_; }

  /// Same disk and centre, different inclusion radius (re-validated).
  Geometry with_eps(double eps) const { return make(R_, c_, eps); }

 private:
  Geometry(double R, Vec2 c, double eps) : R_(R), c_(c), eps_(eps) {}

  double R_;
  Vec2 c_;
  double eps_;
};

Geometry make_geometry(double R, Vec2 c, double eps);

enum class Region { Interior, InsideInclusion, OnOuterBoundary, OnInclusionBoundary, Outside };

/// Tolerance defaults to Geometry::boundary_tolerance() when negative.
Region classify(const Geometry& g, Vec2 x, double tol = -1.0);

std::string to_string(Region r);

enum class Boundary { Outer, Inclusion };

struct BoundaryPoint {
  Boundary which = Boundary::Outer;
  double angle = 0.0;  // in [-pi, pi), about the origin or about c
};

Vec2 position(const Geometry& g, BoundaryPoint p);

// Outward with respect to Omega_eps: radial on the outer circle, pointing
// into the inclusion (-d/drho) on the inclusion circle.
Vec2 outward_normal(const Geometry& g, BoundaryPoint p);

/// m equispaced angles theta_j = -pi + 2 pi j / m.
std::vector<double> equispaced_angles(int m);

std::vector<BoundaryPoint> sample_boundary(const Geometry& g, Boundary which, int m);

/// Distance from c to the outer circle along direction `angle`.
double ray_exit_distance(const Geometry& g, double angle);

}  // namespace robinasym
