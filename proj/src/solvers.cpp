#include "specqm/solvers.hpp"

#include <cmath>

#include "specqm/singular_quad.hpp"

namespace specqm {

namespace {

void need_len(const ChebGrid& g, const Vector& v, const char* what) {
  if (v.size() != g.order()) throw DomainError(std::string(what) + ": length mismatch");
}
void need_shape(const ChebGrid& g, const Matrix& K) {
  if (K.rows() != g.order() || K.cols() != g.order())
    throw DomainError("kernel: dimension mismatch");
}
void need_second_order(const ChebGrid& g) {
  if (g.order() < 3) throw DomainError("second-order solvers need N >= 3");
}


Vector linear_part(const ChebGrid& g, double y0, double dy0) {
  Vector r(g.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = y0 + dy0 * (g.nodes()[i] - g.a());
  return r;
}

// I - c * A
Matrix one_minus(const Matrix& A, double c) {
  Matrix B = Matrix::identity(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) B(i, j) -= c * A(i, j);
  return B;
}

}  // namespace

Matrix kernel_on_grid(const ChebGrid& g, const Kernel2& k) {
  const std::size_t N = g.order();
  Matrix K(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) K(i, j) = k(g.nodes()[i], g.nodes()[j]);
  return K;
}

Vector sample(const ChebGrid& g, const Fn1& f) {
  Vector v(g.order());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(g.nodes()[i]);
  return v;
}

OdeSolution solve_ode_ivp(const Vector& p, const Vector& q, double ya, double dya,
                          const ChebGrid& g) {
  need_second_order(g);
  need_len(g, p, "p");
  need_len(g, q, "q");
  const auto ops = spectral_operators(g.order());
  const double h = g.half_width();
  const Matrix WW = matmul(ops->Wminus, ops->Wminus);
  const Matrix A = one_minus(scale_cols(WW, p), -h * h);
  Vector rhs = linear_part(g, ya, dya);
  const Vector WWq = matvec(WW, q);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += h * h * WWq[i];

  OdeSolution sol;
  sol.report = solve(A, rhs);
  sol.y = sol.report.solution;
  // y' = y'(a) + h W- (q - p y)
  Vector src(g.order());
  for (std::size_t i = 0; i < src.size(); ++i) src[i] = q[i] - p[i] * sol.y[i];
  sol.dy = matvec(ops->Wminus, src);
  for (double& v : sol.dy) v = dya + h * v;
  return sol;
}

LinearSolveReport solve_ode_mixed(const Vector& p, const Vector& q, double ya, double dyb,
                                  const ChebGrid& g) {
  need_second_order(g);
  need_len(g, p, "p");
  need_len(g, q, "q");
  const auto ops = spectral_operators(g.order());
  const double h = g.half_width();
  const Matrix WW = matmul(ops->Wminus, ops->Wplus);
  const Matrix A = one_minus(scale_cols(WW, p), h * h);
  Vector rhs = linear_part(g, ya, dyb);
  const Vector WWq = matvec(WW, q);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= h * h * WWq[i];
  return solve(A, rhs);
}

LinearSolveReport solve_volterra(const Matrix& K, const Vector& f, double lambda, Direction dir,
                                 const ChebGrid& g) {
  need_shape(g, K);
  need_len(g, f, "f");
  const auto ops = spectral_operators(g.order());
  const Matrix& W = dir == Direction::Lower ? ops->Wminus : ops->Wplus;
  return solve(one_minus(hadamard(K, W), lambda * g.half_width()), f);
}

LinearSolveReport solve_fredholm(const Matrix& K, const Vector& f, double lambda,
                                 const ChebGrid& g) {
  need_shape(g, K);
  need_len(g, f, "f");
  const auto ops = spectral_operators(g.order());
  return solve(one_minus(scale_cols(K, ops->w), lambda * g.half_width()), f);
}

LinearSolveReport solve_semicontinuous(const Matrix& K1, const Matrix& K2, const Vector& f,
                                       double lambda, const ChebGrid& g) {
  need_shape(g, K1);
  need_shape(g, K2);
  need_len(g, f, "f");
  const auto ops = spectral_operators(g.order());
  const Matrix B = hadamard(K1, ops->Wminus) + hadamard(K2, ops->Wplus);
  return solve(one_minus(B, lambda * g.half_width()), f);
}

LinearSolveReport solve_cauchy_singular(const Matrix& K, const Vector& f, double lambda, double z,
                                        const ChebGrid& g) {
  need_shape(g, K);
  need_len(g, f, "f");
  if (!(z > g.a() && z < g.b())) throw DomainError("Cauchy singularity must lie inside (a,b)");
  const auto cw = cauchy_weights(g.order(), g.to_t(z));
  return solve(one_minus(scale_cols(K, cw.omega), lambda), f);
}

LinearSolveReport solve_log_singular(const Matrix& K, const Vector& f, double lambda, double z,
                                     const ChebGrid& g) {
  need_shape(g, K);
  need_len(g, f, "f");
  if (z < g.a() || z > g.b()) throw DomainError("log singularity must lie in [a,b]");
  const auto ops = spectral_operators(g.order());
  const double h = g.half_width();
  const Vector Om = log_weights(g.order(), g.to_t(z));
  Vector wt(g.order());
  const double lh = std::log(h);
  for (std::size_t j = 0; j < wt.size(); ++j) wt[j] = ops->w[j] * lh + Om[j];
  return solve(one_minus(scale_cols(K, wt), lambda * h), f);
}

LinearSolveReport solve_integrodiff_1(const Vector& p, const Vector& q, const Matrix& K, double ya,
                                      const ChebGrid& g) {
  need_len(g, p, "p");
  need_len(g, q, "q");
  need_shape(g, K);
  const auto ops = spectral_operators(g.order());
  const double h = g.half_width();
  Matrix A = Matrix::identity(g.order());
  A += h * scale_cols(ops->Wminus, p);
  A -= (h * h) * matmul(ops->Wminus, scale_cols(K, ops->w));
  Vector rhs = matvec(ops->Wminus, q);
  for (double& v : rhs) v = ya + h * v;
  return solve(A, rhs);
}

LinearSolveReport solve_integrodiff_2(const Vector& p, const Matrix& K, double ya, double dya,
                                      const ChebGrid& g) {
  need_second_order(g);
  need_len(g, p, "p");
  need_shape(g, K);
  const auto ops = spectral_operators(g.order());
  const double h = g.half_width();
  const Matrix WW = matmul(ops->Wminus, ops->Wminus);
  Matrix A = Matrix::identity(g.order());
  A += (h * h) * scale_cols(WW, p);
  A -= (h * h * h) * matmul(WW, scale_cols(K, ops->w));
  return solve(A, linear_part(g, ya, dya));
}

}  // namespace specqm
