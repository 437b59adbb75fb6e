#pragma once
// Dense double kernels with a scalar reference path and an AVX2/FMA path
// picked once at startup. All matrices are row-major, contiguous.

#include <cstddef>
#include <string_view>

namespace specqm::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y = A x, A is m x n
  void (*gemv)(const double* A, const double* x, double* y, std::size_t m, std::size_t n);
  // C = A B, A m x k, B k x n
  void (*gemm)(const double* A, const double* B, double* C, std::size_t m, std::size_t k,
               std::size_t n);
  // C_ij = A_ij * v_j  (Schur product with a row-broadcast vector)
  void (*scale_cols)(const double* A, const double* v, double* C, std::size_t m, std::size_t n);
  // C = A o B elementwise
  void (*hadamard)(const double* A, const double* B, double* C, std::size_t n);
};

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemv(const double* A, const double* x, double* y, std::size_t m, std::size_t n);
void gemm(const double* A, const double* B, double* C, std::size_t m, std::size_t k, std::size_t n);
void scale_cols(const double* A, const double* v, double* C, std::size_t m, std::size_t n);
void hadamard(const double* A, const double* B, double* C, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool supported();
double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemv(const double* A, const double* x, double* y, std::size_t m, std::size_t n);
void gemm(const double* A, const double* B, double* C, std::size_t m, std::size_t k, std::size_t n);
void scale_cols(const double* A, const double* v, double* C, std::size_t m, std::size_t n);
void hadamard(const double* A, const double* B, double* C, std::size_t n);
}  // namespace avx2

const KernelTable& scalar_table();
// nullptr when the CPU lacks AVX2+FMA
const KernelTable* avx2_table();

// Active table. SPECQM_SIMD=scalar in the environment forces the reference path.
const KernelTable& active();

std::string_view isa_name(Isa isa);

}  // namespace specqm::simd
