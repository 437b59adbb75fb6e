#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>

#include "specqm/linalg.hpp"
#include "specqm/special.hpp"

namespace specqm {

namespace {

constexpr int kMaxTerms = 200000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

cplx rgamma(cplx z) {
  if (z.imag() == 0.0 && nonpositive_integer(z.real())) return 0.0;
  return std::exp(-log_gamma(z));
}

template <class T>
T kummer_series(T a, T b, T z) {
  T term = 1.0, sum = 1.0;
  int quiet = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + double(k)) / (b + double(k)) * z / double(k + 1);
    sum += term;
    if (term == T(0.0)) return sum;
    // stop after a few consecutive negligible terms once past the hump
    if (std::abs(term) < 0.25 * kEps * std::abs(sum) && double(k) > std::abs(z)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw NumericalError("Kummer series did not converge");
}

// U(a,b,x) for a >= 1 from the Laplace-type integral
double tricomi_integral(double a, double b, double x) {
  const double lg = std::lgamma(a);
  auto f = [=](double t) {
    if (t == 0.0) return a == 1.0 ? 1.0 : 0.0;
    return std::exp((a - 1.0) * std::log(t) - x * t + (b - a - 1.0) * std::log1p(t) - lg);
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0;
  const double v = integrator.integrate(f, 1e-15, &err);
  if (!std::isfinite(v)) throw NumericalError("Tricomi U integral failed");
  return v;
}

}  // namespace

double kummer_M(double a, double b, double x) {
  if (nonpositive_integer(b)) throw DomainError("kummer_M: b is a nonpositive integer");
  if (x < -20.0) return std::exp(x) * kummer_series(b - a, b, -x);
  return kummer_series(a, b, x);
}

cplx kummer_M(cplx a, cplx b, cplx z) {
  if (b.imag() == 0.0 && nonpositive_integer(b.real()))
    throw DomainError("kummer_M: b is a nonpositive integer");
  if (z.real() < -20.0) return std::exp(z) * kummer_series(b - a, b, -z);
  return kummer_series(a, b, z);
}

double tricomi_U(double a, double b, double x) {
  if (!(x > 0.0)) throw DomainError("tricomi_U: x must be positive");
  if (a >= 1.0) return tricomi_integral(a, b, x);
  // downward recurrence from a+n, a+n+1 >= 1 (U is dominant in that direction)
  const int n = static_cast<int>(std::ceil(1.0 - a));
  double a0 = a + n;
  double up = tricomi_integral(a0 + 1.0, b, x);
  double cur = tricomi_integral(a0, b, x);
  for (int k = 0; k < n; ++k) {
    // U(a0-1) = -(b - 2a0 - x) U(a0) - a0 (a0 - b + 1) U(a0+1)
    const double down = -(b - 2.0 * a0 - x) * cur - a0 * (a0 - b + 1.0) * up;
    up = cur;
    cur = down;
    a0 -= 1.0;
  }
  return cur;
}

cplx tricomi_U_log_series(cplx a, int b, cplx z) {
  if (b < 1) throw DomainError("tricomi_U_log_series: needs integer b >= 1");
  const int n = b - 1;
  if (a.imag() == 0.0 && nonpositive_integer(a.real()))
    throw DomainError("tricomi_U_log_series: a is a nonpositive integer");
  // A&S 13.1.6
  const cplx lz = std::log(z);
  const cplx ga = std::exp(log_gamma(a));
  auto psi_int = [](int m) {  // psi(m), m >= 1
    double s = -0.57721566490153286061;
    for (int k = 1; k < m; ++k) s += 1.0 / k;
    return s;
  };
  cplx sum = 0.0;
  cplx term = 1.0;  // (a)_k z^k / ((n+1)_k k!)
  cplx psia = digamma(a);
  int quiet = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const cplx add = term * (lz + psia - psi_int(1 + k) - psi_int(1 + n + k));
    sum += add;
    if (std::abs(add) < 0.25 * kEps * std::abs(sum) && k > std::abs(z)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    term *= (a + double(k)) * z / (double(n + 1 + k) * double(k + 1));
    psia += 1.0 / (a + double(k));
  }
  const double nfact = std::tgamma(n + 1.0);
  cplx res = std::pow(-1.0, n + 1) / nfact * rgamma(a - double(n)) * sum;
  if (n > 0) {
    // + ((n-1)!/Gamma(a)) z^{-n} sum_{k=0}^{n-1} (a-n)_k z^k / ((1-n)_k k!)
    cplx extra = 0.0, t = 1.0;
    for (int k = 0; k < n; ++k) {
      extra += t;
      t *= (a - double(n) + double(k)) * z / ((1.0 - n + k) * double(k + 1));
    }
    res += std::tgamma(double(n)) / ga * std::pow(z, -n) * extra;
  }
  return res;
}

cplx tricomi_U(cplx a, cplx b, cplx z) {
  if (a.real() <= 0.0) {
    if (b.imag() == 0.0 && b.real() >= 1.0 && b.real() == std::floor(b.real()))
      return tricomi_U_log_series(a, static_cast<int>(b.real()), z);
    throw DomainError("complex tricomi_U: needs Re a > 0 or integer b");
  }
  const double phi = std::arg(z), rz = std::abs(z);
  if (!(rz > 0.0)) throw DomainError("complex tricomi_U: z = 0");
  const cplx rot = std::polar(1.0, -phi);
  const cplx lg = log_gamma(a);
  auto f = [&](double u, bool im) {
    if (u == 0.0) return 0.0;
    const cplx t = rot * u;
    const cplx v = std::exp((a - 1.0) * std::log(t) - rz * u + (b - a - 1.0) * std::log(1.0 + t) - lg) * rot;
    return im ? v.imag() : v.real();
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  const double re = integrator.integrate([&](double u) { return f(u, false); }, 1e-14);
  const double im = integrator.integrate([&](double u) { return f(u, true); }, 1e-14);
  return {re, im};
}

double tricomi_U_ratio(double a, double b, double x) {
  // r_a = -1 / (beta_0 - alpha_0 / (beta_1 - alpha_1 / (beta_2 - ...)))
  // beta_k = b - 2(a+k) - 2 - x, alpha_k = (a+k+1)(a+k-b+2); modified Lentz
  constexpr double tiny = 1e-300;
  auto beta = [&](int k) { return b - 2.0 * (a + k) - 2.0 - x; };
  auto alpha = [&](int k) { return (a + k + 1.0) * (a + k - b + 2.0); };
  double f = beta(0);
  if (f == 0.0) f = tiny;
  double C = f, D = 0.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    const double an = -alpha(k - 1), bn = beta(k);
    D = bn + an * D;
    if (D == 0.0) D = tiny;
    C = bn + an / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 2.0 * kEps) return -1.0 / f;
  }
  throw NumericalError("Tricomi ratio continued fraction did not converge");
}

}  // namespace specqm
