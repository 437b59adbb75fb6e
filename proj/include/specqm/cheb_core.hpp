#pragma once
// Chebyshev polynomials, classical (Gauss) Chebyshev grids, cardinal functions,
// interpolation and the collocation differentiation matrix.
//
// Indexing: node j = 0..N-1 here corresponds to k = j+1 in the usual 1-based
// notation, t_j = cos(pi (j + 1/2) / N), so nodes are in descending order.

#include <cstddef>

#include "specqm/linalg.hpp"

namespace specqm {

/// T_n(t), three-term recurrence; valid for any real t.
double cheb_T(int n, double t);
/// U_n(t) with U_{-1} = 0, U_0 = 1.
double cheb_U(int n, double t);

class ChebGrid {
 public:
  ChebGrid(std::size_t N, double a, double b);

  std::size_t order() const { return t_.size(); }
  double a() const { return a_; }
  double b() const { return b_; }
  double half_width() const { return 0.5 * (b_ - a_); }
  double mid() const { return 0.5 * (a_ + b_); }
  const Vector& nodes() const { return x_; }      ///< mapped to [a,b]
  const Vector& ref_nodes() const { return t_; }  ///< on [-1,1]
  double to_t(double x) const { return (2.0 * x - a_ - b_) / (b_ - a_); }
  double to_x(double t) const { return mid() + half_width() * t; }

 private:
  double a_, b_;
  Vector t_, x_;
};

ChebGrid make_grid(std::size_t N, double a, double b);

/// cos(k pi (j+1/2)/N) = T_k(t_j), taken from the angle rather than the recurrence
double cheb_T_at_node(std::size_t N, int k, std::size_t j);

/// G_j(x) for node j (0-based).
double cardinal(const ChebGrid& g, std::size_t j, double x);
/// all G_j(x), j = 0..N-1
Vector cardinal_all(const ChebGrid& g, double x);
/// same on the reference interval
Vector cardinal_all_ref(std::size_t N, double t);

struct SpectralCoeffs {
  Vector c;  ///< f = sum' c_k T_k, first term halved
};

SpectralCoeffs coeffs_from_values(const ChebGrid& g, const Vector& f);
/// sum' c_k T_k(t) at reference coordinate t
double synthesize(const SpectralCoeffs& c, double t);
/// node values from coefficients
Vector values_from_coeffs(const ChebGrid& g, const SpectralCoeffs& c);

struct Interpolated {
  double value;
  bool extrapolated;  ///< x outside [a,b]; accuracy not guaranteed
};
Interpolated interpolate(const ChebGrid& g, const Vector& f, double x);

/// F(i,j) = f(gx.node i, gy.node j)
double interpolate2d(const ChebGrid& gx, const ChebGrid& gy, const Matrix& F, double x, double y);

/// d/dx on node values, including the 2/(b-a) factor
Matrix diff_matrix(const ChebGrid& g);

}  // namespace specqm
