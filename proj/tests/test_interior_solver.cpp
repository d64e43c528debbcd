#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "robinasym/error_analysis.hpp"
#include "robinasym/interior_solver.hpp"

using namespace robinasym;

namespace {

template <class F>
double fd_laplacian(const F& f, Vec2 x, double h) {
  return (f(x + Vec2{h, 0}) + f(x - Vec2{h, 0}) + f(x + Vec2{0, h}) + f(x - Vec2{0, h}) - 4 * f(x)) /
         (h * h);
}

// Independent refinement oracle for the regular part: dense least squares over
// {1, (r/R)^n cos, (r/R)^n sin} collocated directly on the Robin condition.
double dense_regular_part_at(const Geometry& g, double kappa, int N, int M, Vec2 x) {
  const double R = g.radius();
  Eigen::MatrixXd A(M, 2 * N + 1);
  Eigen::VectorXd b(M);
  for (int j = 0; j < M; ++j) {
    const double t = kTwoPi * (j + 0.5) / M;  // staggered from the library's grid
    A(j, 0) = 1.0;
    for (int n = 1; n <= N; ++n) {
      // (r/R)^n + kappa d/dr (r/R)^n at r = R
      const double w = 1.0 + kappa * n / R;
      A(j, 2 * n - 1) = w * std::cos(n * t);
      A(j, 2 * n) = w * std::sin(n * t);
    }
    b(j) = green_regular_robin_data(g, kappa, t);
  }
  const Eigen::VectorXd w = A.colPivHouseholderQr().solve(b);
  const double r = norm(x) / R;
  const double th = std::atan2(x.y, x.x);
  double v = w(0);
  for (int n = 1; n <= N; ++n) {
    v += std::pow(r, n) * (w(2 * n - 1) * std::cos(n * th) + w(2 * n) * std::sin(n * th));
  }
  return v;
}

}  // namespace

TEST_CASE("solve_V0 examples") {
  SUBCASE("constant data") {
    const auto g = make_geometry(1.0, {}, 0.1);
    const auto V0 = solve_V0(g, 1.0, FourierData::constant(5.0));
    for (Vec2 x : {Vec2{0, 0}, Vec2{0.3, -0.4}, Vec2{0.99, 0}}) {
      CHECK(V0.value(x) == doctest::Approx(5.0));
      CHECK(norm(V0.gradient(x)) < 1e-15);
    }
  }
  SUBCASE("cos theta, kappa 0.5") {
    const auto g = make_geometry(1.0, {}, 0.1);
    const auto V0 = solve_V0(g, 0.5, FourierData(0.0, {{1.0, 0.0}}));
    CHECK(V0.value({0.5, 0.0}) == doctest::Approx(1.0 / 3.0));
    for (Vec2 x : {Vec2{0.2, 0.7}, Vec2{-0.6, 0.1}}) {
      CHECK(V0.value(x) == doctest::Approx(x.x / 1.5));
    }
  }
  SUBCASE("R = 2, sin 2 theta") {
    const auto g = make_geometry(2.0, {}, 0.1);
    const auto V0 = solve_V0(g, 1.0, FourierData::single_mode(2, 1.0, true));
    CHECK(V0.raw_coeff(2).s == doctest::Approx(1.0 / 8.0));
    CHECK(std::abs(V0.raw_coeff(2).c) < 1e-16);
    CHECK(V0_robin_residual(g, 1.0, V0, FourierData::single_mode(2, 1.0, true), 64) < 1e-13);
  }
  CHECK_THROWS_AS(solve_V0(make_geometry(1.0, {}, 0.1), 0.0, FourierData::constant(1.0)),
                  InvalidInput);
}

TEST_CASE("V0 Robin residual for random data") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const double R = 0.5 + 2.0 * std::uniform_real_distribution<>(0, 1)(rng);
    const double kappa = 0.1 + 10.0 * std::uniform_real_distribution<>(0, 1)(rng);
    const auto g = make_geometry(R, {}, 0.1 * R);
    const auto f = random_fourier(12, 1.0, rng());
    const auto V0 = solve_V0(g, kappa, f);
    CHECK(V0_robin_residual(g, kappa, V0, f, 4 * 12) < 1e-10);
  }
}

TEST_CASE("centred Green regular part is (1/2pi)(log R + kappa/R)") {
  struct Case {
    double R, kappa, expected;
  };
  for (const auto& c : {Case{1.0, 1.0, 1.0 / kTwoPi}, Case{2.0, 0.5, 0.150106535849299630640}}) {
    const auto g = make_geometry(c.R, {}, 0.1);
    const auto G = solve_green_regular(g, c.kappa);
    CHECK(std::abs(c.expected - (std::log(c.R) + c.kappa / c.R) / kTwoPi) < 1e-15);
    for (Vec2 x : {Vec2{0, 0}, Vec2{0.3 * c.R, 0.2}, Vec2{-0.9 * c.R, 0}}) {
      CHECK(std::abs(G.regular_part.value(x) - c.expected) < 1e-12);
    }
    CHECK(G.truncation_ratio() < 1e-10);
  }
}

TEST_CASE("eccentric Green regular part against a dense refinement oracle") {
  const auto g = make_geometry(1.0, {0.3, 0.0}, 0.05);
  const double kappa = 1.0;
  const auto G = solve_green_regular(g, kappa);
  const int M = 4 * (4 * kDefaultGreenOrder + 2);
  const double oracle = dense_regular_part_at(g, kappa, kDefaultGreenOrder, M, g.center());
  CHECK(std::abs(G.regular_part.value(g.center()) - oracle) < 1e-8);
  CHECK(G.truncation_ratio() < 1e-10);
  CHECK(green_robin_residual(g, G, 4 * kDefaultGreenOrder) < 1e-10);

  // Far eccentricity still resolves at the default order, with a warning-level
  // ratio reported near the rim.
  const auto near_rim = make_geometry(1.0, {0.9, 0.0}, 0.01);
  CHECK(solve_green_regular(near_rim, kappa).truncation_ratio() > 1e-10);
}

TEST_CASE("Green function value and singular part") {
  const auto g = make_geometry(1.0, {0.2, -0.1}, 0.05);
  const auto G = solve_green_regular(g, 2.0);
  const Vec2 x{0.5, 0.3};
  const double expected = -std::log(norm(x - g.center())) / kTwoPi + G.regular_part.value(x);
  CHECK(G.value(x) == doctest::Approx(expected));
}

TEST_CASE("series gradients match finite differences") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<> u(-1, 1);
  for (int t = 0; t < 20; ++t) {
    const auto fd = random_fourier(8, 1.0, rng());
    HarmonicSeries h;
    h.kind = t % 2 ? SeriesKind::ExteriorDecaying : SeriesKind::InteriorRegular;
    h.center = {0.3 * u(rng), 0.3 * u(rng)};
    h.scale = 0.5 + 0.5 * (u(rng) + 1);
    h.mean = fd.mean();
    h.coeffs = fd.modes();
    if (h.kind == SeriesKind::ExteriorDecaying) h.log_coeff = u(rng);
    // Points at distance ~[0.5, 1] * scale for interior, [1, 2] * scale for exterior.
    const double rad = h.scale * (h.kind == SeriesKind::InteriorRegular ? 0.75 : 1.5);
    const Vec2 x = h.center + rad * unit(kPi * u(rng));
    const double e = 1e-6;
    const Vec2 fdg{(h.value(x + Vec2{e, 0}) - h.value(x - Vec2{e, 0})) / (2 * e),
                   (h.value(x + Vec2{0, e}) - h.value(x - Vec2{0, e})) / (2 * e)};
    const Vec2 g = grad_series(h, x);
    CHECK(norm(g - fdg) < 1e-7 * std::max(1.0, norm(g)));
    const auto [v, g2] = h.value_and_gradient(x);
    CHECK(v == doctest::Approx(eval_series(h, x)));
    CHECK(norm(g2 - g) < 1e-14);
  }

  HarmonicSeries constant;
  constant.mean = 2.0;
  CHECK(norm(constant.gradient({0.3, 0.4})) == 0.0);

  HarmonicSeries ext;
  ext.kind = SeriesKind::ExteriorDecaying;
  CHECK_THROWS(ext.value(ext.center));
}

TEST_CASE("V0 example evaluated through eval_series") {
  const auto g = make_geometry(1.0, {}, 0.1);
  const auto V0 = solve_V0(g, 0.5, FourierData(0.0, {{1.0, 0.0}}));
  CHECK(eval_series(V0, {0.5, 0.0}) == doctest::Approx(1.0 / 3.0));
  CHECK(dump(V0).find("mean") != std::string::npos);
}

TEST_CASE("mean-value property and harmonicity") {
  const auto g = make_geometry(1.0, {0.4, 0.2}, 0.05);
  const auto G = solve_green_regular(g, 0.7);
  const auto V0 = solve_V0(g, 0.7, random_fourier(10, 1.0, 99));
  for (const HarmonicSeries* h : {&G.regular_part, &V0}) {
    for (auto [ctr, rad] : {std::pair{Vec2{0.1, 0.1}, 0.5}, std::pair{Vec2{-0.4, 0.3}, 0.3}}) {
      double avg = 0.0;
      const int Q = 512;
      for (double t : equispaced_angles(Q)) avg += h->value(ctr + rad * unit(t));
      avg /= Q;
      CHECK(std::abs(avg - h->value(ctr)) < 1e-10);
    }
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<> u(-0.6, 0.6);
    for (int k = 0; k < 10; ++k) {
      const Vec2 x{u(rng), u(rng)};
      const double h_fd = 1e-3;
      const double lap = fd_laplacian([&](Vec2 y) { return h->value(y); }, x, h_fd);
      CHECK(std::abs(lap) < 1e-4 * std::max(1.0, std::abs(h->value(x))));
    }
  }
}
