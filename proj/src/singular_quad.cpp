#include "specqm/singular_quad.hpp"

#include <cmath>
#include <numbers>

#include "specqm/cheb_quad.hpp"

namespace specqm {

namespace {

constexpr double kEndpointGuard = 1e-12;

void check_open(double z) {
  if (!(std::abs(z) < 1.0 - kEndpointGuard))
    throw DomainError("Cauchy principal value undefined for |z| >= 1");
}

// U_0..U_{m} at z
Vector u_table(int m, double z) {
  Vector U(static_cast<std::size_t>(std::max(m, 0) + 1));
  U[0] = 1.0;
  if (m >= 1) U[1] = 2.0 * z;
  for (int k = 2; k <= m; ++k) U[k] = 2.0 * z * U[k - 1] - U[k - 2];
  return U;
}

double s_from_table(int n, const Vector& U) {
  if (n <= 0) return 0.0;
  // -2 sum'_{i=0}^{n-1} ((-1)^i + 1)/(i^2 - 1) U_{n-1-i}; odd i vanish (incl. i = 1)
  double s = 0.5 * (2.0 / -1.0) * U[n - 1];
  for (int i = 2; i <= n - 1; i += 2) s += 2.0 / (double(i) * i - 1.0) * U[n - 1 - i];
  return -2.0 * s;
}

// I_n for n = 0..nmax
Vector cauchy_I_table(int nmax, double z) {
  const Vector U = u_table(nmax, z);
  const double L = std::log((1.0 - z) / (1.0 + z));
  Vector I(nmax + 1);
  double t0 = 1.0, t1 = z;
  for (int n = 0; n <= nmax; ++n) {
    const double Tn = n == 0 ? 1.0 : t1;
    I[n] = s_from_table(n, U) + Tn * L;
    if (n >= 1) {
      const double t2 = 2.0 * z * t1 - t0;
      t0 = t1;
      t1 = t2;
    }
  }
  return I;
}

// J_{k-1} via the case formula, k = 1..; needs I_0..I_k
double log_J_interior(int k, double z, const Vector& I) {
  const double lm = std::log(std::abs(1.0 - z));
  const double lp = std::log(std::abs(1.0 + z));
  if (k == 2) return 0.25 * (lm - lp - I[2]);
  const double kk = k;
  const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
  return -(lm - sgn * lp) / (kk * (kk - 2.0)) - I[k] / (2.0 * kk) +
         I[std::abs(k - 2)] / (2.0 * (kk - 2.0));
}

double log_J_endpoint(int k, double z) {
  const double ln2 = std::numbers::ln2;
  if (k == 1) return 2.0 * ln2 - 2.0;
  if (k == 2) return z > 0 ? -1.0 : 1.0;
  const double kk = k;
  const double odd = (k % 2 == 1) ? 2.0 : 0.0;  // 1 + (-1)^{k-1}
  return -odd * ln2 / (kk * (kk - 2.0)) - cauchy_S(k, z) / (2.0 * kk) +
         cauchy_S(k - 2, z) / (2.0 * (kk - 2.0));
}

}  // namespace

double cauchy_S(int n, double z) {
  if (n < 0) throw DomainError("cauchy_S: negative order");
  return s_from_table(n, u_table(n, z));
}

double cauchy_I(int n, double z) {
  if (n < 0) throw DomainError("cauchy_I: negative order");
  check_open(z);
  return cauchy_I_table(n, z)[n];
}

double log_J(int n, double z) {
  if (n < 0) throw DomainError("log_J: negative order");
  if (std::abs(z) > 1.0) throw DomainError("log_J: |z| > 1");
  const int k = n + 1;
  if (std::abs(z) == 1.0) return log_J_endpoint(k, z);
  return log_J_interior(k, z, cauchy_I_table(k, z));
}

CauchyWeights cauchy_weights(std::size_t N, double z) {
  check_open(z);
  const int n = static_cast<int>(N);
  const Vector I = cauchy_I_table(n - 1, z);
  const Vector U = u_table(n - 1, z);
  Vector S(N);
  for (int k = 0; k < n; ++k) S[k] = s_from_table(k, U);
  CauchyWeights cw{Vector(N), Vector(N)};
  for (std::size_t j = 0; j < N; ++j) {
    double a = 0.5 * I[0], b = 0.5 * S[0];
    for (int k = 1; k < n; ++k) {
      const double T = cheb_T_at_node(N, k, j);
      a += T * I[k];
      b += T * S[k];
    }
    cw.omega[j] = 2.0 * a / N;
    cw.omega_tilde[j] = 2.0 * b / N;
  }
  return cw;
}

Vector log_weights(std::size_t N, double z) {
  if (std::abs(z) > 1.0) throw DomainError("log_weights: |z| > 1");
  const int n = static_cast<int>(N);
  Vector J(N);
  if (std::abs(z) == 1.0) {
    for (int k = 1; k <= n; ++k) J[k - 1] = log_J_endpoint(k, z);
  } else {
    const Vector I = cauchy_I_table(n, z);
    for (int k = 1; k <= n; ++k) J[k - 1] = log_J_interior(k, z, I);
  }
  Vector Om(N);
  for (std::size_t j = 0; j < N; ++j) {
    double s = 0.5 * J[0];
    for (int k = 1; k < n; ++k) s += cheb_T_at_node(N, k, j) * J[k];
    Om[j] = 2.0 * s / N;
  }
  return Om;
}

Vector log_weights_any(std::size_t N, double z) {
  if (std::abs(z) <= 1.0) return log_weights(N, z);
  const auto ops = spectral_operators(N);
  const ChebGrid g(N, -1.0, 1.0);
  Vector Om(N);
  for (std::size_t j = 0; j < N; ++j) Om[j] = ops->w[j] * std::log(std::abs(g.ref_nodes()[j] - z));
  return Om;
}

SingularWeightSet singular_weight_set(std::size_t N, double z) {
  auto cw = cauchy_weights(N, z);
  return {N, z, std::move(cw.omega), std::move(cw.omega_tilde), log_weights(N, z)};
}

}  // namespace specqm
