#pragma once
// Product-integration weights and antiderivative matrices on the classical
// Chebyshev grid, plus the rational map of [-1,1) onto [0,inf).

#include <memory>

#include "specqm/cheb_core.hpp"

namespace specqm {

/// w_j such that sum_j w_j f(t_j) = int_{-1}^{1} f, exact for degree <= N-1.
Vector gauss_cheb_weights(std::size_t N);

/// (pi/N) sum f(t_j) ~ int f / sqrt(1-t^2)
double gauss_cheb_weighted_integral(const Vector& f);

struct SpectralOperators {
  std::size_t N;
  Vector w;
  Matrix Wminus;  ///< (W- f)_i ~ int_{-1}^{t_i} f
  Matrix Wplus;   ///< (W+ f)_i ~ int_{t_i}^{1} f ; F+(t_i) = -(W+ f)_i
  Matrix M;       ///< M_jk = T_{j}(t_k), 0-based
};

SpectralOperators build_spectral_operators(std::size_t N);

/// Shared, built once per N. Thread safe; entries are never mutated after insertion.
std::shared_ptr<const SpectralOperators> spectral_operators(std::size_t N);

/// (b-a)/2 sum w_j f(x_j)
double integrate_interval(const ChebGrid& g, const Vector& f);

struct RationalMap {
  double scale;
  explicit RationalMap(double s);
  double r(double t) const { return scale * (1.0 + t) / (1.0 - t); }
  double jacobian(double t) const { return 2.0 * scale / ((1.0 - t) * (1.0 - t)); }
  double t_of(double r) const { return (r - scale) / (r + scale); }
};

struct MappedNodes {
  Vector r;        ///< r_j
  Vector jac;      ///< dr/dt at t_j
  Vector weights;  ///< w_j * dr/dt: sum weights_j f(r_j) ~ int_0^inf f
};
MappedNodes rational_map_nodes(const RationalMap& map, const ChebGrid& ref);

}  // namespace specqm
