#include "specqm/simd.hpp"

namespace specqm::simd::scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(const double* A, const double* x, double* y, std::size_t m, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) y[i] = dot(A + i * n, x, n);
}

void gemm(const double* A, const double* B, double* C, std::size_t m, std::size_t k,
          std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* c = C + i * n;
    for (std::size_t j = 0; j < n; ++j) c[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) axpy(A[i * k + p], B + p * n, c, n);
  }
}

void scale_cols(const double* A, const double* v, double* C, std::size_t m, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) C[i * n + j] = A[i * n + j] * v[j];
}

void hadamard(const double* A, const double* B, double* C, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) C[i] = A[i] * B[i];
}

}  // namespace specqm::simd::scalar
