#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <cmath>

#include "specqm/special.hpp"

using namespace specqm;

TEST_CASE("gamma family") {
  for (double x : {0.3, 1.0, 2.5, 7.25, 30.0})
    CHECK(std::abs(log_gamma(cplx(x, 0)).real() - std::lgamma(x)) < 1e-13 * std::max(1.0, std::lgamma(x)));
  // |Gamma(iy)|^2 = pi / (y sinh(pi y))
  const double y = 0.7;
  CHECK(std::abs(2 * log_gamma(cplx(0, y)).real() - std::log(M_PI / (y * std::sinh(M_PI * y)))) <
        1e-13);
  // arg Gamma(z+1) = arg Gamma(z) + arg z, no branch jump for small arguments
  const cplx z(0.4, -0.5);
  CHECK(std::abs(log_gamma(z + 1.0).imag() - log_gamma(z).imag() - std::arg(z)) < 1e-13);

  for (double x : {0.1, 0.5, 1.0, 3.3, -0.5, -2.7, 40.0})
    CHECK(std::abs(digamma(x) - boost::math::digamma(x)) < 1e-13 * std::max(1.0, std::abs(digamma(x))));
  CHECK(std::abs(digamma(cplx(2.2, 0)).real() - boost::math::digamma(2.2)) < 1e-14);
  // Im psi(iy) = 1/(2y) + (pi/2) coth(pi y)
  CHECK(std::abs(digamma(cplx(0, 1.3)).imag() - (1 / 2.6 + M_PI / 2 / std::tanh(M_PI * 1.3))) <
        1e-13);
  const cplx w(-1.3, 0.8);
  CHECK(std::abs(digamma(w + 1.0) - digamma(w) - 1.0 / w) < 1e-13);
}

TEST_CASE("confluent hypergeometric") {
  for (auto [a, b, x] : {std::tuple{0.5, 1.5, 2.0}, std::tuple{-1.3, 2.2, 0.7},
                         std::tuple{1.25, 3.0, 12.0}, std::tuple{0.2, 1.0, -3.0}}) {
    const double ref = boost::math::hypergeometric_1F1(a, b, x);
    CHECK(std::abs(kummer_M(a, b, x) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
    CHECK(std::abs(kummer_M(cplx(a), cplx(b), cplx(x)) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
  }
  // U(1,1,x) = e^x E_1(x); U(a,a+1,x) = x^-a
  for (double x : {0.3, 1.0, 5.0}) {
    const double ref = std::exp(x) * boost::math::expint(1, x);
    CHECK(std::abs(tricomi_U(1.0, 1.0, x) - ref) < 1e-12 * ref);
    CHECK(std::abs(tricomi_U(0.7, 1.7, x) - std::pow(x, -0.7)) < 1e-12 * std::pow(x, -0.7));
    CHECK(std::abs(tricomi_U(cplx(0.7), cplx(1.7), cplx(x)) - std::pow(x, -0.7)) <
          1e-11 * std::pow(x, -0.7));
    CHECK(std::abs(tricomi_U_log_series(cplx(1.0), 1, cplx(x)) - ref) < 1e-11 * ref);
    CHECK(std::abs(tricomi_U_ratio(0.5, 2.0, x) - tricomi_U(1.5, 2.0, x) / tricomi_U(0.5, 2.0, x)) <
          1e-12);
  }
  // complex argument: integral and log series agree
  const cplx a(1.2, -0.4), z(0.8, 1.1);
  CHECK(std::abs(tricomi_U(a, cplx(2.0), z) - tricomi_U_log_series(a, 2, z)) <
        1e-10 * std::abs(tricomi_U(a, cplx(2.0), z)));
}

TEST_CASE("Riccati functions") {
  auto f0 = riccati_free(0, 1.0);
  CHECK(std::abs(f0.f - std::sin(1.0)) < 1e-15);
  CHECK(std::abs(f0.g - std::cos(1.0)) < 1e-15);
  const double r = 3.0, s = std::sin(r), c = std::cos(r);
  auto f2 = riccati_free(2, r);
  CHECK(std::abs(f2.f - r * ((3 / (r * r * r) - 1 / r) * s - 3 * c / (r * r))) < 1e-13);
  CHECK(std::abs(f2.g - r * ((3 / (r * r * r) - 1 / r) * c + 3 * s / (r * r))) < 1e-13);
  for (int l = 0; l <= 3; ++l) {
    auto p = riccati_free(l, 2.3);
    CHECK(std::abs(p.f * p.dg - p.g * p.df + 1.0) < 1e-13);
  }

  auto m0 = modified_riccati(0, 0.7);
  CHECK(std::abs(m0.f - std::sinh(0.7)) < 1e-15);
  CHECK(std::abs(m0.g - std::exp(-0.7)) < 1e-15);
  const double x = 2.0;
  auto m1 = modified_riccati(1, x);
  CHECK(std::abs(m1.f - (std::cosh(x) - std::sinh(x) / x)) < 1e-13);
  CHECK(std::abs(m1.g - std::exp(-x) * (1 + 1 / x)) < 1e-13);
  for (int l = 0; l <= 3; ++l) {
    auto p = modified_riccati(l, 1.7);
    CHECK(std::abs(p.g * p.df - p.f * p.dg - 1.0) < 1e-13);
  }
  for (int l = 0; l <= 3; ++l)
    for (double y : {12.0, 45.0, 300.0}) {
      auto a = modified_riccati(l, y), b = modified_riccati_scaled(l, y, y - 5.0);
      const double e = std::exp(y - 5.0);
      CHECK(b.f * e == doctest::Approx(a.f).epsilon(1e-13));
      CHECK(b.g / e == doctest::Approx(a.g).epsilon(1e-13));
      CHECK(b.df * e == doctest::Approx(a.df).epsilon(1e-13));
      CHECK(b.dg / e == doctest::Approx(a.dg).epsilon(1e-13));
      CHECK(std::abs(b.g * b.df - b.f * b.dg - 1.0) < 1e-12);
    }
  auto far = modified_riccati_scaled(2, 900.0, 890.0);
  CHECK(std::isfinite(far.f));
  CHECK(std::abs(far.g * far.df - far.f * far.dg - 1.0) < 1e-12);
}

TEST_CASE("Coulomb wave functions") {
  for (int l = 0; l <= 2; ++l)
    for (double rho : {0.5, 2.0, 9.0}) {
      auto c = coulomb_FG(l, 0.0, rho);
      auto f = riccati_free(l, rho);
      CHECK(std::abs(c.F - f.f) < 1e-12);
      CHECK(std::abs(c.G - f.g) < 1e-12);
    }
  // F_0 by its power series
  const double eta = 0.5, rho = 2.0;
  const double C0 = std::sqrt(2 * M_PI * eta / (std::exp(2 * M_PI * eta) - 1));
  double Am2 = 0, Am1 = 1, sum = 1, pw = 1;
  for (int k = 2; k < 80; ++k) {
    const double A = (2 * eta * Am1 - Am2) / (k * (k - 1.0));
    pw *= rho;
    sum += A * pw;
    Am2 = Am1;
    Am1 = A;
  }
  auto c = coulomb_FG(0, eta, rho);
  CHECK(std::abs(c.F - C0 * rho * sum) < 1e-10);
  CHECK(std::abs(c.F * c.dG - c.G * c.dF + 1.0) < 1e-10);
  CHECK_FALSE(c.degraded);
  CHECK(coulomb_FG(1, 0.3, 80.0).degraded);
}

TEST_CASE("zero-energy Coulomb") {
  auto z = zero_energy_coulomb(0, 1.0, 2.5, 0);
  CHECK(z.Phi == doctest::Approx(2.5));
  CHECK(z.Theta == doctest::Approx(1.0));
  // sqrt(r) I_1(2 sqrt r) at r = 1: sum 1/(k!(k+1)!)
  double s = 0, t = 1;
  for (int k = 0; k < 30; ++k) {
    s += t;
    t /= (k + 1.0) * (k + 2.0);
  }
  auto r = zero_energy_coulomb(0, 1.0, 1.0, +1);
  CHECK(std::abs(r.Phi - s) < 1e-12);
  for (int zs : {-1, 1})
    for (int l = 0; l <= 2; ++l) {
      auto q = zero_energy_coulomb(l, 0.8, 1.7, zs);
      CHECK(std::abs(q.Theta * q.dPhi - q.Phi * q.dTheta - 1.0) < 1e-11);
    }
  // weak charge approaches the free pair
  auto w = zero_energy_coulomb(1, 1e-7, 0.9, -1);
  CHECK(std::abs(w.Phi - 0.81) < 1e-6);
}

TEST_CASE("negative-energy Coulomb") {
  for (int l = 0; l <= 2; ++l)
    for (double x : {0.4, 1.5, 6.0}) {
      auto a = neg_energy_coulomb(l, 1e-12, x);
      auto b = modified_riccati(l, x);
      CHECK(std::abs(a.f - b.f) < 1e-10 * std::max(1.0, std::abs(b.f)));
      CHECK(std::abs(a.g - b.g) < 1e-10);
    }
  for (double eta : {-0.8, 0.6}) {
    auto p = neg_energy_coulomb(1, eta, 2.2);
    CHECK(std::abs(p.g * p.df - p.f * p.dg - 1.0) < 1e-10);
    CHECK(std::abs(neg_energy_coulomb_hlogderiv(1, eta, 2.2) - p.dg / p.g) < 1e-11);
  }
}

TEST_CASE("Legendre functions") {
  auto q0 = legendre_PQ(0, 3.0);
  CHECK(q0.W == 0.0);
  CHECK(std::abs(q0.Q - 0.5 * std::log(2.0)) < 1e-14);
  auto a = legendre_PQ(0, 2.0), b = legendre_PQ(1, 2.0);
  CHECK(std::abs(b.Q - (2 * a.Q - 1)) < 1e-13);
  auto c = legendre_PQ(2, 2.0);
  CHECK(std::abs(c.P - 5.5) < 1e-14);
  // (l+1) Q_{l+1} = (2l+1) z Q_l - l Q_{l-1}
  CHECK(std::abs(2 * c.Q - (3 * 2.0 * b.Q - a.Q)) < 1e-13);
  auto far = legendre_PQ(3, 40.0);
  CHECK(far.Q > 0.0);
  CHECK(std::abs(far.Q * std::pow(40.0, 4) / (2.0 / 35.0) - 1.0) < 1e-2);
  CHECK_THROWS_AS(legendre_PQ(1, 1.0), std::domain_error);

  // Q_l' against a central difference, both sides of the series switch
  for (int l = 0; l <= 4; ++l)
    for (double z : {1.05, 1.3, 1.49, 1.51, 2.5, 30.0}) {
      const double h = 1e-5 * (z - 1.0);
      const double fd = (legendre_PQ(l, z + h).Q - legendre_PQ(l, z - h).Q) / (2 * h);
      CHECK(std::abs(legendre_dQ(l, z) / fd - 1.0) < 1e-7);
    }
  CHECK(legendre_dQ(0, 2.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(legendre_dQ(1, 1.0), std::domain_error);
}

TEST_CASE("complex-order Bessel") {
  CHECK(std::abs(bessel_J(cplx(0), 2.0).real() - boost::math::cyl_bessel_j(0, 2.0)) < 1e-12);
  CHECK(std::abs(bessel_J(cplx(2.5), 3.1).real() - boost::math::cyl_bessel_j(2.5, 3.1)) < 1e-12);
  CHECK(std::abs(bessel_J(cplx(0.5, 0.3), 1e-10)) < 1e-4);
  // J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu
  const cplx nu(0.7, -0.4);
  const double x = 1.9;
  CHECK(std::abs(bessel_J(nu - 1.0, x) + bessel_J(nu + 1.0, x) - 2.0 * nu / x * bessel_J(nu, x)) <
        1e-12);
}
