#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "robinasym/compound_approximation.hpp"
#include "robinasym/error_analysis.hpp"
#include "robinasym/robin.hpp"

using namespace robinasym;

namespace {

RobinData make_data(FourierData f_outer, FourierData f_inclusion) {
  RobinData d;
  d.f_outer = std::move(f_outer);
  d.f_inclusion = std::move(f_inclusion);
  return d;
}

double max_inclusion_discrepancy(const CompoundApproximation& ca, const FourierData& f_D) {
  double worst = 0.0;
  for (const auto& p : sample_boundary(ca.geometry(), Boundary::Inclusion, 128)) {
    worst = std::max(worst, std::abs(robin_trace(ca, p) - f_D.eval(p.angle)));
  }
  return worst;
}

}  // namespace

TEST_CASE("constant data is reproduced exactly") {
  const double K = 2.5;
  for (auto [c, eps, kappa] : {std::tuple{Vec2{}, 0.1, 1.0}, std::tuple{Vec2{0.3, 0.1}, 0.05, 30.0}}) {
    const auto g = make_geometry(1.0, c, eps);
    const auto ca = build(g, kappa, make_data(FourierData::constant(K), FourierData::constant(K)), 16);
    CHECK(ca.c0() == 0.0);
    for (const auto& x : polar_grid(g, 8, 8)) CHECK(std::abs(eval_u0(ca, x) - K) < 1e-13);
    for (const auto& p : sample_boundary(g, Boundary::Outer, 16)) {
      CHECK(std::abs(robin_trace(ca, p) - K) < 1e-13);
    }
  }
}

TEST_CASE("point source case: u0 = c0 G(x, 0)") {
  const auto g = make_geometry(1.0, {}, 0.1);
  const auto ca = build(g, 1.0, make_data(FourierData::constant(0.0), FourierData::constant(1.0)), 16);
  CHECK(ca.c0() == doctest::Approx(0.47232814248177189750).epsilon(1e-13));
  CHECK(norm(ca.drift()) < 1e-15);
  for (Vec2 x : {Vec2{0.1, 0}, Vec2{0.5, 0.5}, Vec2{-0.3, 0.2}}) {
    const double G = -std::log(norm(x)) / kTwoPi + 1.0 / kTwoPi;
    CHECK(eval_u0(ca, x) == doctest::Approx(ca.c0() * G).epsilon(1e-13));
  }
  // The inclusion condition then holds exactly: c0 (G + kappa/(2 pi eps)) = 1 at rho = eps.
  for (const auto& p : sample_boundary(g, Boundary::Inclusion, 8)) {
    CHECK(robin_trace(ca, p) == doctest::Approx(1.0));
  }
}

TEST_CASE("hand-assembled mode-1 case") {
  const double kappa = 2.0, eps = 0.1;
  const auto g = make_geometry(1.0, {}, eps);
  const auto ca = build(g, kappa, make_data(FourierData(0.0, {{1.0, 0.0}}), FourierData::constant(0.0)), 8);
  const double a = 1.0 / (1.0 + kappa);         // V0 = a r cos
  const double b = kappa * a / (1.0 + kappa / eps);  // w0 = b (eps / rho) cos
  CHECK(ca.c0() == 0.0);
  CHECK(ca.drift().x == doctest::Approx(a));
  for (Vec2 x : {Vec2{0.2, 0.3}, Vec2{-0.7, 0.1}, Vec2{0.0, -0.95}}) {
    const double r = norm(x);
    const double expected = a * x.x + b * eps * x.x / (r * r);
    CHECK(eval_u0(ca, x) == doctest::Approx(expected).epsilon(1e-14));
  }
  // Inclusion discrepancy is exactly eps a cos: the linear part of V0 left over.
  for (const auto& p : sample_boundary(g, Boundary::Inclusion, 16)) {
    CHECK(robin_trace(ca, p) == doctest::Approx(eps * a * std::cos(p.angle)).epsilon(1e-12));
  }
}

TEST_CASE("outer discrepancy is the Robin trace of the corrector") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<> u(0, 1);
  for (int t = 0; t < 10; ++t) {
    const double kappa = 0.1 + 10 * u(rng);
    const auto g = make_geometry(1.0, {0.4 * u(rng), -0.3 * u(rng)}, 0.02 + 0.08 * u(rng));
    const auto data = make_data(random_fourier(8, 1.0, rng()), random_fourier(8, 1.0, rng()));
    const auto ca = CompoundApproximation::build(g, kappa, data);
    struct W {
      const HarmonicSeries& w;
      std::pair<double, Vec2> value_and_gradient(Vec2 x) const { return w.value_and_gradient(x); }
    } w{ca.corrector().w0};
    for (const auto& p : sample_boundary(g, Boundary::Outer, 64)) {
      const double lhs = robin_trace(ca, p) - data.f_outer.eval(p.angle);
      CHECK(std::abs(lhs - robin_trace(g, kappa, w, p)) < 1e-10);
    }
  }
}

TEST_CASE("inclusion discrepancy matches the term-by-term expansion") {
  // On |x - c| = eps, with e the radial unit vector and n = -e:
  //   T u0 - f_D = [V0(x) - V0(c) - kappa (grad V0(x) - grad V0(c)).e]
  //              + c0 [Greg(x) - Greg(c) - kappa (grad Greg(x) - grad Greg(c)).e]
  // since c0 and the corrector absorb the constant and linear parts.
  const double kappa = 1.5;
  const auto g = make_geometry(1.0, {0.3, 0.2}, 0.05);
  const auto data = make_data(FourierData(0.2, {{0.0, 1.0}, {0.3, 0.0}}),
                              FourierData(1.0, {{1.0, 0.0}, {0.0, -0.5}}));
  const auto ca = CompoundApproximation::build(g, kappa, data);
  const Vec2 c = g.center();
  const auto& V0 = ca.V0();
  const auto& Greg = ca.green().regular_part;
  for (const auto& p : sample_boundary(g, Boundary::Inclusion, 64)) {
    const Vec2 x = position(g, p);
    const Vec2 e = unit(p.angle);
    const double v_term = V0.value(x) - V0.value(c) - kappa * dot(V0.gradient(x) - V0.gradient(c), e);
    const double g_term = Greg.value(x) - Greg.value(c) - kappa * dot(Greg.gradient(x) - Greg.gradient(c), e);
    const double expected = v_term + ca.c0() * g_term;
    CHECK(std::abs(robin_trace(ca, p) - data.f_inclusion.eval(p.angle) - expected) < 1e-12);
  }
}

TEST_CASE("inclusion discrepancy halves with eps") {
  for (Vec2 c : {Vec2{}, Vec2{0.3, 0.0}}) {
    for (double kappa : {0.5, 1.0, 4.0}) {
      const auto data = make_data(FourierData(0.0, {{0.0, 1.0}, {0.5, 0.0}}),
                                  FourierData(1.0, {{1.0, 0.0}}));
      const auto ca1 = CompoundApproximation::build(make_geometry(1.0, c, 0.04), kappa, data);
      const auto ca2 = CompoundApproximation::build(make_geometry(1.0, c, 0.02), kappa, data);
      const double ratio = max_inclusion_discrepancy(ca1, data.f_inclusion) /
                           max_inclusion_discrepancy(ca2, data.f_inclusion);
      CHECK(ratio >= 1.7);
      CHECK(ratio <= 2.3);
    }
  }
}

TEST_CASE("u0 is harmonic away from the inclusion") {
  const auto g = make_geometry(1.0, {0.2, -0.3}, 0.05);
  const auto data = make_data(random_fourier(6, 1.0, 5), random_fourier(6, 1.0, 6));
  const auto ca = CompoundApproximation::build(g, 2.0, data);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<> u(-0.7, 0.7);
  int checked = 0;
  while (checked < 20) {
    const Vec2 x{u(rng), u(rng)};
    if (norm(x - g.center()) < 0.15) continue;
    const double h = 1e-3;
    const double lap = (eval_u0(ca, x + Vec2{h, 0}) + eval_u0(ca, x - Vec2{h, 0}) +
                        eval_u0(ca, x + Vec2{0, h}) + eval_u0(ca, x - Vec2{0, h}) - 4 * eval_u0(ca, x)) /
                       (h * h);
    CHECK(std::abs(lap) < 1e-4);
    ++checked;
  }
}

TEST_CASE("domain checks, grids and CSV output") {
  const auto g = make_geometry(1.0, {0.5, 0.0}, 0.1);
  const auto ca = build(g, 1.0, make_data(FourierData::constant(1.0), FourierData::constant(0.0)), 8);
  CHECK_THROWS_AS(ca.value({0.5, 0.05}), InvalidInput);
  CHECK_THROWS_AS(ca.value({1.5, 0.0}), InvalidInput);
  CHECK_NOTHROW(ca.value({0.6, 0.0}));  // on the inclusion boundary
  CHECK_NOTHROW(ca.value({1.0, 0.0}));

  const auto pts = polar_grid(g, 6, 12);
  CHECK(pts.size() == 72);
  for (const auto& x : pts) {
    const Region r = classify(g, x, 1e-12);
    CHECK((r == Region::Interior || r == Region::OnOuterBoundary || r == Region::OnInclusionBoundary));
  }

  std::ostringstream out;
  write_field_csv(out, {{0.25, 0.0}}, [](Vec2 x) { return x.x; }, "u0");
  CHECK(out.str() == "x,y,u0\n0.25,0,0.25\n");
}
