#include <doctest.h>

#include <cmath>
#include <random>

#include "specqm/cheb_core.hpp"

using namespace specqm;

TEST_CASE("cheb_T") {
  CHECK(cheb_T(0, 0.37) == 1.0);
  CHECK(cheb_T(3, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(cheb_T(7, 0.123) - std::cos(7 * std::acos(0.123))) < 1e-14);
  // outside [-1,1] the recurrence continues as cosh
  CHECK(cheb_T(4, 1.5) == doctest::Approx(std::cosh(4 * std::acosh(1.5))).epsilon(1e-14));
}

TEST_CASE("cheb_U") {
  CHECK(cheb_U(-1, 0.9) == 0.0);
  CHECK(cheb_U(1, 0.25) == 0.5);
  const double th = std::acos(0.3);
  CHECK(std::abs(cheb_U(5, 0.3) - std::sin(6 * th) / std::sin(th)) < 1e-14);
}

TEST_CASE("make_grid") {
  CHECK(std::abs(make_grid(1, -1, 1).nodes()[0]) < 1e-16);
  auto g2 = make_grid(2, -1, 1);
  CHECK(g2.nodes()[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(g2.nodes()[1] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));
  auto g4 = make_grid(4, 0, 2);
  for (int k = 1; k <= 4; ++k)
    CHECK(std::abs(g4.nodes()[k - 1] - (1 + std::cos(M_PI * (k - 0.5) / 4))) < 1e-15);
  CHECK_THROWS_AS(make_grid(0, 0, 1), DomainError);
  CHECK_THROWS_AS(make_grid(4, 1, 1), DomainError);
}

TEST_CASE("cardinal functions") {
  const std::size_t N = 8;
  ChebGrid g(N, -1, 1);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      CHECK(std::abs(cardinal(g, j, g.nodes()[i]) - (i == j ? 1.0 : 0.0)) < 1e-14);
  for (double x : {-0.93, -0.2, 0.0, 0.41, 0.999}) {
    double s = 0;
    for (double v : cardinal_all(g, x)) s += v;
    CHECK(std::abs(s - 1.0) < 1e-13);
  }
  // T_N(t) / [T_N'(t_j) (t - t_j)], T_N'(t_j) = N sin(N th_j)/sin th_j
  const std::size_t j = 3;
  const double t = 0.2, tj = g.nodes()[j], th = std::acos(tj);
  const double dT = N * std::sin(N * th) / std::sin(th);
  const double alt = std::cos(N * std::acos(t)) / (dT * (t - tj));
  CHECK(std::abs(cardinal(g, j, t) - alt) < 1e-12);
}

TEST_CASE("spectral coefficients") {
  ChebGrid g5(5, -1, 1);
  auto c = coeffs_from_values(g5, Vector(5, 1.0)).c;
  CHECK(c[0] == doctest::Approx(2.0).epsilon(1e-15));
  for (std::size_t k = 1; k < 5; ++k) CHECK(std::abs(c[k]) < 1e-15);

  ChebGrid g6(6, -1, 1);
  Vector f(6);
  for (std::size_t i = 0; i < 6; ++i) f[i] = cheb_T(2, g6.nodes()[i]);
  auto c2 = coeffs_from_values(g6, f).c;
  for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(c2[k] - (k == 2 ? 1.0 : 0.0)) < 1e-14);

  ChebGrid g(17, 0.5, 3.0);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  Vector r(17);
  for (auto& x : r) x = u(rng);
  auto back = values_from_coeffs(g, coeffs_from_values(g, r));
  for (std::size_t i = 0; i < 17; ++i) CHECK(std::abs(back[i] - r[i]) < 1e-13);
  auto sc = coeffs_from_values(g, r);
  CHECK(std::abs(synthesize(sc, g.ref_nodes()[4]) - r[4]) < 1e-13);
}

TEST_CASE("interpolation") {
  ChebGrid g(5, 0, 2);
  Vector f(5);
  for (std::size_t i = 0; i < 5; ++i) {
    const double x = g.nodes()[i];
    f[i] = 3 * x * x - x;
  }
  for (double x : {0.0, 0.3, 1.1, 1.99}) {
    auto r = interpolate(g, f, x);
    CHECK(std::abs(r.value - (3 * x * x - x)) < 1e-13);
    CHECK_FALSE(r.extrapolated);
  }
  CHECK(interpolate(g, f, g.nodes()[2]).value == f[2]);
  CHECK(interpolate(g, f, 2.5).extrapolated);

  ChebGrid gx(6, 0, 1), gy(7, -2, 1);
  Matrix F(6, 7);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 7; ++j) F(i, j) = gx.nodes()[i] * gy.nodes()[j];
  CHECK(std::abs(interpolate2d(gx, gy, F, 0.37, -1.2) - 0.37 * -1.2) < 1e-13);
  CHECK(interpolate2d(gx, gy, F, gx.nodes()[1], gy.nodes()[3]) ==
        doctest::Approx(F(1, 3)).epsilon(1e-15));
}

TEST_CASE("differentiation matrix") {
  ChebGrid g(12, 0.5, 2.0);
  Matrix D = diff_matrix(g);
  auto d1 = matvec(D, Vector(12, 1.0));
  auto dx = matvec(D, g.nodes());
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(std::abs(d1[i]) < 1e-12);
    CHECK(std::abs(dx[i] - 1.0) < 1e-12);
  }
  ChebGrid h(24, -1, 1);
  Vector s(24);
  for (std::size_t i = 0; i < 24; ++i) s[i] = std::sin(h.nodes()[i]);
  auto ds = matvec(diff_matrix(h), s);
  for (std::size_t i = 0; i < 24; ++i) CHECK(std::abs(ds[i] - std::cos(h.nodes()[i])) < 1e-10);
}
