#include <cmath>
#include <limits>
#include <numbers>

#include "specqm/linalg.hpp"
#include "specqm/special.hpp"

namespace specqm {

namespace {

// Q_l(z) = sqrt(pi) l! / (Gamma(l+3/2) (2z)^{l+1}) 2F1((l+1)/2, (l+2)/2; l+3/2; 1/z^2)
// no cancellation for large z, where the P log - W split loses digits
double legendre_Q_far(int l, double z) {
  const double u = 1.0 / (z * z);
  const double a = 0.5 * (l + 1.0), b = 0.5 * (l + 2.0), c = l + 1.5;
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * u;
    sum += term;
    if (term < 0.25 * std::numeric_limits<double>::epsilon() * sum) break;
  }
  const double lpre = 0.5 * std::log(std::numbers::pi) + std::lgamma(l + 1.0) - std::lgamma(l + 1.5) -
                      (l + 1.0) * std::log(2.0 * z);
  return std::exp(lpre) * sum;
}

// d/dz of the same series
double legendre_dQ_far(int l, double z) {
  const double u = 1.0 / (z * z);
  const double a = 0.5 * (l + 1.0), b = 0.5 * (l + 2.0), c = l + 1.5;
  double term = 1.0, sum = l + 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * u;
    const double t = term * (l + 3.0 + 2.0 * k);
    sum += t;
    if (t < 0.25 * std::numeric_limits<double>::epsilon() * sum) break;
  }
  const double lpre = 0.5 * std::log(std::numbers::pi) + std::lgamma(l + 1.0) - std::lgamma(l + 1.5) -
                      (l + 1.0) * std::log(2.0 * z);
  return -std::exp(lpre) * sum / z;
}

}  // namespace

double legendre_P(int l, double z) {
  if (l < 0) throw DomainError("legendre_P: negative l");
  double p0 = 1.0, p1 = z;
  if (l == 0) return p0;
  for (int n = 1; n < l; ++n) {
    const double p2 = ((2.0 * n + 1.0) * z * p1 - n * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

LegendrePQ legendre_PQ(int l, double z) {
  if (l < 0) throw DomainError("legendre_PQ: negative l");
  if (!(z > 1.0)) throw DomainError("legendre_PQ: needs z > 1");
  const double P = legendre_P(l, z);
  double W = 0.0;  // W_{l-1} = sum_{n=1}^{l} P_{n-1} P_{l-n} / n
  for (int n = 1; n <= l; ++n) W += legendre_P(n - 1, z) * legendre_P(l - n, z) / n;
  double Q;
  if (z > 1.5 && l > 0)
    Q = legendre_Q_far(l, z);
  else
    Q = P * 0.5 * std::log((z + 1.0) / (z - 1.0)) - W;
  return {P, W, Q};
}

double legendre_dQ(int l, double z) {
  if (l < 0) throw DomainError("legendre_dQ: negative l");
  if (!(z > 1.0)) throw DomainError("legendre_dQ: needs z > 1");
  if (z > 1.5) return legendre_dQ_far(l, z);
  if (l == 0) return -1.0 / ((z - 1.0) * (z + 1.0));
  return l * (z * legendre_PQ(l, z).Q - legendre_PQ(l - 1, z).Q) / ((z - 1.0) * (z + 1.0));
}

}  // namespace specqm
