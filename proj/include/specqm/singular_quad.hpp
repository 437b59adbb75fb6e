#pragma once
// Product-integration rules for integrands with a Cauchy pole 1/(t-z) or a
// logarithmic factor log|t-z| on [-1,1].

#include "specqm/cheb_core.hpp"

namespace specqm {

/// S_n(z): polynomial part of PV int T_n(t)/(t-z) dt
double cauchy_S(int n, double z);
/// PV int_{-1}^{1} T_n(t)/(t-z) dt, |z| < 1
double cauchy_I(int n, double z);
/// int_{-1}^{1} T_n(t) log|t-z| dt, |z| <= 1 (closed endpoint limits at z = +-1)
double log_J(int n, double z);

struct CauchyWeights {
  Vector omega;        ///< sum omega_j f(t_j) ~ PV int f/(t-z)
  Vector omega_tilde;  ///< omega without the G_j(z) log((1-z)/(1+z)) part
};
CauchyWeights cauchy_weights(std::size_t N, double z);

/// Omega_j(z): sum Omega_j f(t_j) ~ int f(t) log|t-z| dt, |z| <= 1
Vector log_weights(std::size_t N, double z);
/// same, but for |z| > 1 falls back to the regular rule w_j log|t_j - z|
Vector log_weights_any(std::size_t N, double z);

struct SingularWeightSet {
  std::size_t N;
  double z;
  Vector omega, omega_tilde, Omega;
};
SingularWeightSet singular_weight_set(std::size_t N, double z);

}  // namespace specqm
