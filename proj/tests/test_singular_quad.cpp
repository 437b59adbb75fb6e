#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <random>

#include "specqm/cheb_quad.hpp"
#include "specqm/singular_quad.hpp"

using namespace specqm;
using boost::math::quadrature::gauss_kronrod;
using boost::math::quadrature::tanh_sinh;

namespace {

// PV int f/(t-z) = int (f(t)-f(z))/(t-z) + f(z) log((1-z)/(1+z))
template <class F>
double pv_oracle(F f, double z) {
  auto g = [&](double t) { return t == z ? 0.0 : (f(t) - f(z)) / (t - z); };
  const double a = gauss_kronrod<double, 61>::integrate(g, -1.0, z, 15, 1e-15);
  const double b = gauss_kronrod<double, 61>::integrate(g, z, 1.0, 15, 1e-15);
  return a + b + f(z) * std::log((1 - z) / (1 + z));
}

template <class F>
double log_oracle(F f, double z) {
  tanh_sinh<double> ts;
  auto g = [&](double t) { return f(t) * std::log(std::abs(t - z)); };
  return ts.integrate(g, -1.0, z) + ts.integrate(g, z, 1.0);
}

double log_sum(double z) {
  auto xl = [](double u) { return u > 0 ? u * std::log(u) : 0.0; };
  return xl(1 - z) + xl(1 + z) - 2;
}

}  // namespace

TEST_CASE("cauchy_I") {
  CHECK(std::abs(cauchy_I(0, 0.3) - std::log(0.7 / 1.3)) < 1e-15);
  CHECK(std::abs(cauchy_I(1, 0.0) - 2.0) < 1e-15);
  const double z = 0.37;
  CHECK(std::abs(cauchy_I(4, z) - pv_oracle([](double t) { return cheb_T(4, t); }, z)) < 1e-10);
  CHECK(cauchy_S(0, 0.4) == 0.0);
}

TEST_CASE("cauchy weights") {
  for (double z : {0.0, 0.5, -0.5, 0.9, -0.9}) {
    auto cw = cauchy_weights(16, z);
    double s = 0;
    for (double v : cw.omega) s += v;
    CHECK(std::abs(s - std::log((1 - z) / (1 + z))) < 1e-12);
  }
  ChebGrid g(24, -1, 1);
  auto c0 = cauchy_weights(24, 0.0);
  CHECK(std::abs(dot(c0.omega, g.nodes()) - 2.0) < 1e-12);
  auto ce = cauchy_weights(24, 0.25);
  Vector ex(24);
  for (std::size_t j = 0; j < 24; ++j) ex[j] = std::exp(g.nodes()[j]);
  CHECK(std::abs(dot(ce.omega, ex) - pv_oracle([](double t) { return std::exp(t); }, 0.25)) <
        1e-10);
  CHECK_THROWS_AS(cauchy_weights(8, 1.0), DomainError);
}

TEST_CASE("cauchy sum rule, random z") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-0.99, 0.99);
  for (std::size_t N : {8u, 16u, 32u, 64u})
    for (int i = 0; i < 20; ++i) {
      const double z = u(rng);
      auto cw = cauchy_weights(N, z);
      double s = 0;
      for (double v : cw.omega) s += v;
      CHECK(std::abs(s - std::log((1 - z) / (1 + z))) < 1e-11);
    }
}

TEST_CASE("log_J") {
  CHECK(std::abs(log_J(0, 1.0) - (2 * std::log(2.0) - 2)) < 1e-13);
  CHECK(std::abs(log_J(0, -1.0) - (2 * std::log(2.0) - 2)) < 1e-13);
  CHECK(std::abs(log_J(1, 1.0) + 1.0) < 1e-13);
  CHECK(std::abs(log_J(1, -1.0) - 1.0) < 1e-13);
  CHECK(std::abs(log_J(0, 0.0) + 2.0) < 1e-14);
  CHECK(std::abs(log_J(3, 0.6) - log_oracle([](double t) { return cheb_T(3, t); }, 0.6)) <
        1e-12);
}

TEST_CASE("log weights") {
  double s = 0;
  for (double v : log_weights(16, 0.5)) s += v;
  CHECK(std::abs(s - (0.5 * std::log(0.5) + 1.5 * std::log(1.5) - 2)) < 1e-12);
  s = 0;
  for (double v : log_weights(16, 0.0)) s += v;
  CHECK(std::abs(s + 2.0) < 1e-12);

  ChebGrid g(32, -1, 1);
  Vector c(32);
  for (std::size_t j = 0; j < 32; ++j) c[j] = std::cos(g.nodes()[j]);
  CHECK(std::abs(dot(log_weights(32, 0.3), c) -
                 log_oracle([](double t) { return std::cos(t); }, 0.3)) < 1e-9);

  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t N : {8u, 16u, 32u, 64u})
    for (int i = 0; i < 20; ++i) {
      const double z = u(rng);
      double t = 0;
      for (double v : log_weights(N, z)) t += v;
      CHECK(std::abs(t - log_sum(z)) < 1e-11);
    }
}

TEST_CASE("log weights are continuous at the endpoints") {
  for (double e : {1.0, -1.0}) {
    auto w1 = log_weights(16, e);
    auto w0 = log_weights(16, e * (1 - 1e-12));
    for (std::size_t j = 0; j < 16; ++j) CHECK(std::abs(w1[j] - w0[j]) < 1e-10);
  }
  // outside the interval the regular rule is used
  auto wa = log_weights_any(16, 1.5);
  auto w = gauss_cheb_weights(16);
  ChebGrid g(16, -1, 1);
  for (std::size_t j = 0; j < 16; ++j)
    CHECK(wa[j] == doctest::Approx(w[j] * std::log(std::abs(g.nodes()[j] - 1.5))));
  CHECK_THROWS_AS(log_weights(8, 1.5), DomainError);
}

TEST_CASE("singular weight set") {
  auto s = singular_weight_set(12, 0.2);
  auto c = cauchy_weights(12, 0.2);
  for (std::size_t j = 0; j < 12; ++j) {
    CHECK(s.omega[j] == c.omega[j]);
    CHECK(s.omega_tilde[j] == c.omega_tilde[j]);
  }
  CHECK(s.Omega.size() == 12);
}
