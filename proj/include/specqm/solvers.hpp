#pragma once
// Collocation solvers on a single interval [a,b]: second-order ODEs by double
// integration, Volterra/Fredholm equations of the second kind, semi-continuous,
// Cauchy- and log-singular kernels, integro-differential equations.
//
// Kernels are passed as node matrices K(i,j) = k(x_i, x_j).

#include <functional>

#include "specqm/cheb_quad.hpp"

namespace specqm {

using Kernel2 = std::function<double(double, double)>;
using Fn1 = std::function<double(double)>;

Matrix kernel_on_grid(const ChebGrid& g, const Kernel2& k);
Vector sample(const ChebGrid& g, const Fn1& f);

struct OdeSolution {
  Vector y, dy;
  LinearSolveReport report;
};

/// y'' + p y = q, y(a), y'(a) given
OdeSolution solve_ode_ivp(const Vector& p, const Vector& q, double ya, double dya,
                          const ChebGrid& g);
/// y'' + p y = q, y(a), y'(b) given
LinearSolveReport solve_ode_mixed(const Vector& p, const Vector& q, double ya, double dyb,
                                  const ChebGrid& g);

enum class Direction { Lower, Upper };

/// y = f + lambda int_a^x k y  (Lower) or  y = f + lambda int_x^b k y  (Upper)
LinearSolveReport solve_volterra(const Matrix& K, const Vector& f, double lambda, Direction dir,
                                 const ChebGrid& g);
/// y = f + lambda int_a^b k y
LinearSolveReport solve_fredholm(const Matrix& K, const Vector& f, double lambda,
                                 const ChebGrid& g);
/// k = k1 for s <= x, k2 for s >= x
LinearSolveReport solve_semicontinuous(const Matrix& K1, const Matrix& K2, const Vector& f,
                                       double lambda, const ChebGrid& g);
/// y = f + lambda PV int_a^b k(x,s) y(s)/(s - z) ds ; particular solution only
LinearSolveReport solve_cauchy_singular(const Matrix& K, const Vector& f, double lambda, double z,
                                        const ChebGrid& g);
/// y = f + lambda int_a^b k(x,s) log|s - z| y(s) ds
LinearSolveReport solve_log_singular(const Matrix& K, const Vector& f, double lambda, double z,
                                     const ChebGrid& g);
/// y' + p y = q + int_a^b k y, y(a) given
LinearSolveReport solve_integrodiff_1(const Vector& p, const Vector& q, const Matrix& K, double ya,
                                      const ChebGrid& g);
/// y'' + p y = int_a^b k y, y(a), y'(a) given
LinearSolveReport solve_integrodiff_2(const Vector& p, const Matrix& K, double ya, double dya,
                                      const ChebGrid& g);

}  // namespace specqm
