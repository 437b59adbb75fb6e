#include <cmath>
#include <numbers>

#include "specqm/linalg.hpp"
#include "specqm/special.hpp"

namespace specqm {

namespace {

// B_{2k}/(2k(2k-1)), k = 1..8
constexpr double kStirling[] = {1.0 / 12.0,          -1.0 / 360.0,       1.0 / 1260.0,
                                -1.0 / 1680.0,       1.0 / 1188.0,       -691.0 / 360360.0,
                                1.0 / 156.0,         -3617.0 / 122400.0};
// B_{2k}/(2k), k = 1..8
constexpr double kPsiAsym[] = {1.0 / 12.0,   -1.0 / 120.0,   1.0 / 252.0,     -1.0 / 240.0,
                               1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,    -3617.0 / 8160.0};

constexpr double kShift = 15.0;

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && nonpositive_integer(z.real()))
    throw DomainError("log_gamma: pole at nonpositive integer");
  cplx acc = 0.0;
  while (z.real() < kShift) {
    acc += std::log(z);
    z += 1.0;
  }
  const cplx zi = 1.0 / z, zi2 = zi * zi;
  cplx series = 0.0, p = zi;
  for (double c : kStirling) {
    series += c * p;
    p *= zi2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - acc;
}

double digamma(double x) {
  if (nonpositive_integer(x)) throw DomainError("digamma: pole at nonpositive integer");
  double acc = 0.0;
  while (x < kShift) {
    acc += 1.0 / x;
    x += 1.0;
  }
  const double xi2 = 1.0 / (x * x);
  double series = 0.0, p = xi2;
  for (double c : kPsiAsym) {
    series += c * p;
    p *= xi2;
  }
  return std::log(x) - 0.5 / x - series - acc;
}

cplx digamma(cplx z) {
  if (z.imag() == 0.0) return digamma(z.real());
  cplx acc = 0.0;
  while (z.real() < kShift) {
    acc += 1.0 / z;
    z += 1.0;
  }
  const cplx zi2 = 1.0 / (z * z);
  cplx series = 0.0, p = zi2;
  for (double c : kPsiAsym) {
    series += c * p;
    p *= zi2;
  }
  return std::log(z) - 0.5 / z - series - acc;
}

}  // namespace specqm
