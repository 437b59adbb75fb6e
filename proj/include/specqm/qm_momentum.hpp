#pragma once
// Momentum-space two-body problem: partial-wave potential projections, the
// principal-value K-matrix equation on a rationally mapped Chebyshev mesh,
// T from K, bound states as a symmetric eigenproblem, the point-Coulomb bound
// spectrum with a log-singular kernel, and the zero-energy limit.

#include <complex>
#include <vector>

#include "specqm/linalg.hpp"
#include "specqm/potential.hpp"

namespace specqm {

struct MomentumMesh {
  std::size_t N = 0;
  double sigma = 1.0;
  double scale = 1.0;  ///< k_j = scale (1+t_j)/(1-t_j); p sigma or sigma/a
  Vector t, k, w;      ///< reference nodes, momenta, Gauss-Chebyshev weights on [-1,1]
  double tau = 0.0;    ///< (1-sigma)/(1+sigma), image of the on-shell point
};

MomentumMesh scattering_mesh(std::size_t N, double p, double sigma = 1.0);
MomentumMesh bound_mesh(std::size_t N, double a, double sigma = 1.0);

/// U_l(k,k') = (1/(k k')) int_0^inf f_l(kr) f_l(k'r) 2 mu V(r) dr with Riccati f_l.
/// Closed forms for l = 0, for exponential and Morse at any l (Legendre Q_l' of
/// z = (k^2+k'^2+mu^2)/(2kk')) and for Coulomb at any l (k != k'). Hulthen at l > 0
/// goes through the numeric quadrature, which is slow on large meshes.
double potential_projection(const PotentialModel& m, int l, double k, double kp);
/// the same integral by adaptive Gauss-Kronrod panels in r (short-range models)
double potential_projection_numeric(const PotentialModel& m, int l, double k, double kp);
/// -2 s a sum_n n / ((n^2+x^2)(n^2+y^2)), summed with a Hurwitz-zeta tail
double hulthen_projection_series(double s, double a, double x, double y);

struct KMatrixResult {
  MomentumMesh mesh;
  double p = 0.0;
  Matrix K;              ///< K(k_i, k_j) on the mesh
  Vector half_shell;     ///< K(k_i, p)
  double on_shell = 0.0;          ///< sum_j G_j(tau) K(k_j, p)
  double on_shell_nystrom = 0.0;  ///< U(p,p) - sum_j U(p,k_j) Gamma_j K(k_j,p)
  double tan_delta = 0.0;         ///< -p K(p,p), Nystrom value
  double condition = 0.0;
  bool singular = false;
};
KMatrixResult kmatrix_solve(const PotentialModel& m, int l, double p, std::size_t N,
                            double sigma = 1.0);

struct TMatrixResult {
  std::vector<std::complex<double>> half_shell;  ///< T(k_i, p)
  std::complex<double> on_shell;
  double unitarity_residual = 0.0;  ///< |Im(1/t) + 1|, t = -p T(p,p)
  double tan_delta = 0.0;
  bool singular = false;
};
TMatrixResult tmatrix_from_K(const KMatrixResult& k);

/// Bound-state kernel on a kappa independent mesh; U is built once.
class MomentumBoundProblem {
 public:
  MomentumBoundProblem(const PotentialModel& m, int l, std::size_t N, double sigma = 1.0);
  const MomentumMesh& mesh() const { return mesh_; }
  /// Gamma_jj(kappa^2) > 0
  Vector gamma(double kappa) const;
  /// M = -Gamma^1/2 U Gamma^1/2
  Matrix kernel(double kappa) const;
  /// eigenvalues of M, descending
  Vector eigenvalues(double kappa) const;
  double det_one_minus(double kappa) const;

 private:
  PotentialModel m_;
  int l_;
  MomentumMesh mesh_;
  Matrix U_;
};

struct BoundSpectrum {
  Vector lambda;  ///< descending
  double det = 0.0;
};
BoundSpectrum bound_state_eigen(const PotentialModel& m, int l, double kappa, std::size_t N,
                                double sigma = 1.0);

enum class BoundCriterion { Eigenvalue, Determinant };
/// kappa with largest lambda = 1 (or det(1 - M) = 0) in [lo, hi]
double momentum_bound_state(const PotentialModel& m, int l, std::size_t N, double sigma,
                            double kappa_lo, double kappa_hi,
                            BoundCriterion c = BoundCriterion::Eigenvalue);

/// det(1 - M(x)) for the point Coulomb problem, x = kappa * bohr
double hydrogen_determinant(int l, double x, std::size_t N, double sigma = 1.0, double Z = -1.0);
/// roots in x of the secular determinant on (x_lo, x_hi), descending
std::vector<double> hydrogen_bound_states(int l, std::size_t N, double sigma, double x_lo,
                                          double x_hi, double Z = -1.0);

struct MomentumLength {
  double A = 0.0;           ///< -K(0,0) with the exact column U(k_i, 0)
  double A_cardinal = 0.0;  ///< -G(-1) . X with {1 + U Gamma(0)} X = U G(-1)
  bool pole = false;
  double condition = 0.0;
};
MomentumLength scattering_length_momentum(const PotentialModel& m, std::size_t N,
                                          double sigma = 1.0);

}  // namespace specqm
