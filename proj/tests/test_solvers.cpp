#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "specqm/singular_quad.hpp"
#include "specqm/solvers.hpp"

using namespace specqm;

namespace {

double max_err(const ChebGrid& g, const Vector& y, const Fn1& f) {
  double m = 0;
  for (std::size_t i = 0; i < y.size(); ++i) m = std::max(m, std::abs(y[i] - f(g.nodes()[i])));
  return m;
}

}  // namespace

TEST_CASE("second-order initial value problems") {
  ChebGrid g(32, 0, M_PI);
  auto s = solve_ode_ivp(Vector(32, 1.0), Vector(32, 0.0), 0.0, 1.0, g);
  CHECK(max_err(g, s.y, [](double x) { return std::sin(x); }) < 1e-11);
  CHECK(max_err(g, s.dy, [](double x) { return std::cos(x); }) < 1e-10);

  ChebGrid u(16, 0, 1);
  auto q = solve_ode_ivp(Vector(16, 0.0), Vector(16, 1.0), 0.0, 0.0, u);
  CHECK(max_err(u, q.y, [](double x) { return x * x / 2; }) < 1e-13);

  ChebGrid e(24, 0, 1);
  auto ex = solve_ode_ivp(Vector(24, -1.0), Vector(24, 0.0), 1.0, 1.0, e);
  CHECK(max_err(e, ex.y, [](double x) { return std::exp(x); }) < 1e-11);
}

TEST_CASE("mixed boundary conditions") {
  ChebGrid g(16, 0, 1);
  auto a = solve_ode_mixed(Vector(16, 0.0), Vector(16, 0.0), 1.0, 0.0, g);
  CHECK(max_err(g, a.solution, [](double) { return 1.0; }) < 1e-13);
  auto b = solve_ode_mixed(Vector(16, 0.0), Vector(16, 2.0), 0.0, 2.0, g);
  CHECK(max_err(g, b.solution, [](double x) { return x * x; }) < 1e-12);
}

TEST_CASE("Volterra") {
  ChebGrid g(24, 0, 1);
  Matrix one(24, 24, 1.0);
  auto y = solve_volterra(one, Vector(24, 1.0), 1.0, Direction::Lower, g);
  CHECK(max_err(g, y.solution, [](double x) { return std::exp(x); }) < 1e-11);
  auto yu = solve_volterra(one, Vector(24, 1.0), 1.0, Direction::Upper, g);
  CHECK(max_err(g, yu.solution, [](double x) { return std::exp(1 - x); }) < 1e-11);

  Vector f = sample(g, [](double x) { return std::sin(3 * x); });
  auto z = solve_volterra(one, f, 0.0, Direction::Lower, g);
  for (std::size_t i = 0; i < 24; ++i) CHECK(z.solution[i] == f[i]);

  auto K = kernel_on_grid(g, [](double x, double s) { return x - s; });
  auto c = solve_volterra(K, Vector(24, 1.0), -1.0, Direction::Lower, g);
  CHECK(max_err(g, c.solution, [](double x) { return std::cos(x); }) < 1e-11);
}

TEST_CASE("Fredholm, degenerate kernel") {
  ChebGrid g(16, 0, 1);
  auto K = kernel_on_grid(g, [](double x, double s) { return x * s; });
  Vector f = g.nodes();
  auto y = solve_fredholm(K, f, 1.0, g);
  CHECK(max_err(g, y.solution, [](double x) { return 1.5 * x; }) < 1e-12);
  CHECK_FALSE(y.singular);
  auto y2 = solve_fredholm(K, f, 2.0, g);
  CHECK(max_err(g, y2.solution, [](double x) { return 3.0 * x; }) < 1e-12);
  auto z = solve_fredholm(K, f, 0.0, g);
  CHECK(max_err(g, z.solution, [](double x) { return x; }) == 0.0);
  CHECK(solve_fredholm(K, f, 3.0, g).singular);
}

TEST_CASE("semi-continuous kernels") {
  ChebGrid g(24, 0, 1);
  auto K = kernel_on_grid(g, [](double x, double s) { return std::exp(-x * s); });
  Vector f = sample(g, [](double x) { return std::cos(x); });
  auto a = solve_fredholm(K, f, 0.7, g);
  auto b = solve_semicontinuous(K, K, f, 0.7, g);
  for (std::size_t i = 0; i < 24; ++i) CHECK(std::abs(a.solution[i] - b.solution[i]) < 1e-11);
  auto z = solve_semicontinuous(K, K, f, 0.0, g);
  CHECK(max_err(g, z.solution, [](double x) { return std::cos(x); }) == 0.0);

  // Dirichlet Green's function of -d2/dx2: -y'' = y, y(0) = y(1) = 1
  auto K1 = kernel_on_grid(g, [](double x, double s) { return s * (1 - x); });
  auto K2 = kernel_on_grid(g, [](double x, double s) { return x * (1 - s); });
  auto y = solve_semicontinuous(K1, K2, Vector(24, 1.0), 1.0, g);
  const double B = (1 - std::cos(1.0)) / std::sin(1.0);
  CHECK(max_err(g, y.solution, [&](double x) { return std::cos(x) + B * std::sin(x); }) < 1e-11);
}

TEST_CASE("Cauchy-singular kernel") {
  ChebGrid g(24, -1, 1);
  Vector f(24, 1.0);
  auto K = kernel_on_grid(g, [](double x, double) { return x; });
  const double z = 0.3;
  CHECK(max_err(g, solve_cauchy_singular(K, f, 0.0, z, g).solution, [](double) { return 1.0; }) ==
        0.0);
  // y = 1 + lam x C, C = PV int y/(s-z) = L0 + lam C L1
  const double lam = 0.2;
  const double L0 = std::log((1 - z) / (1 + z)), L1 = 2 + z * L0;
  const double C = L0 / (1 - lam * L1);
  auto y = solve_cauchy_singular(K, f, lam, z, g);
  CHECK(max_err(g, y.solution, [&](double x) { return 1 + lam * x * C; }) < 1e-12);
}

TEST_CASE("log-singular kernel") {
  ChebGrid g(24, -1, 1);
  Vector f(24, 1.0);
  auto K = kernel_on_grid(g, [](double x, double) { return x; });
  const double z = -0.4, lam = 0.5;
  CHECK(max_err(g, solve_log_singular(K, f, 0.0, z, g).solution, [](double) { return 1.0; }) ==
        0.0);
  boost::math::quadrature::tanh_sinh<double> ts;
  auto lg = [&](double p) {
    auto h = [&](double s) { return std::pow(s, p) * std::log(std::abs(s - z)); };
    return ts.integrate(h, -1.0, z) + ts.integrate(h, z, 1.0);
  };
  const double J0 = lg(0), J1 = lg(1), L = J0 / (1 - lam * J1);
  auto y = solve_log_singular(K, f, lam, z, g);
  CHECK(max_err(g, y.solution, [&](double x) { return 1 + lam * x * L; }) < 1e-12);
}

TEST_CASE("first-order integro-differential") {
  ChebGrid g(16, 0, 1);
  Matrix Z(16, 16, 0.0), one(16, 16, 1.0);
  auto a = solve_integrodiff_1(Vector(16, 0.0), Vector(16, 1.0), Z, 0.0, g);
  CHECK(max_err(g, a.solution, [](double x) { return x; }) < 1e-13);
  auto b = solve_integrodiff_1(Vector(16, 1.0), Vector(16, 0.0), Z, 1.0, g);
  CHECK(max_err(g, b.solution, [](double x) { return std::exp(-x); }) < 1e-11);

  // y' = int_0^1 y: y = 1 + c x with c the fixed point of c -> 1 + c/2
  double c = 0;
  for (int it = 0; it < 200; ++it) c = 1 + c / 2;
  auto d = solve_integrodiff_1(Vector(16, 0.0), Vector(16, 0.0), one, 1.0, g);
  CHECK(max_err(g, d.solution, [&](double x) { return 1 + c * x; }) < 1e-10);
}

TEST_CASE("second-order integro-differential") {
  ChebGrid g(24, 0, 2);
  Matrix Z(24, 24, 0.0), one(24, 24, 1.0);
  Vector p = sample(g, [](double x) { return 1 + x; });
  auto a = solve_integrodiff_2(p, Z, 0.5, -0.3, g);
  auto b = solve_ode_ivp(p, Vector(24, 0.0), 0.5, -0.3, g);
  for (std::size_t i = 0; i < 24; ++i) CHECK(std::abs(a.solution[i] - b.y[i]) < 1e-12);

  ChebGrid u(12, 0, 1);
  Matrix Zu(12, 12, 0.0), Ou(12, 12, 1.0);
  auto c = solve_integrodiff_2(Vector(12, 0.0), Zu, 0.0, 1.0, u);
  CHECK(max_err(u, c.solution, [](double x) { return x; }) < 1e-13);
  // y'' = int_0^1 y, y(0)=1, y'(0)=0: y = 1 + C x^2/2 with C = 6/5
  auto d = solve_integrodiff_2(Vector(12, 0.0), Ou, 1.0, 0.0, u);
  CHECK(max_err(u, d.solution, [](double x) { return 1 + 0.6 * x * x; }) < 1e-12);
}

TEST_CASE("refinement smoke test") {
  auto run = [](std::size_t N) {
    ChebGrid g(N, 0, 3);
    Vector p = sample(g, [](double x) { return 1 + std::exp(-x); });
    auto s = solve_ode_ivp(p, Vector(N, 0.0), 0.0, 1.0, g);
    return interpolate(g, s.y, 2.2).value;
  };
  CHECK(std::abs(run(32) - run(64)) < 1e-9);
}
