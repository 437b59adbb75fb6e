#include "specqm/simd.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SPECQM_X86 1
#else
#define SPECQM_X86 0
#endif

namespace specqm::simd::avx2 {

#if SPECQM_X86

#define AVX2_FN __attribute__((target("avx2,fma")))

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {
AVX2_FN inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}
}  // namespace

AVX2_FN double dot(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
  }
  for (; i + 4 <= n; i += 4)
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
  double s = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

AVX2_FN void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

AVX2_FN void gemv(const double* A, const double* x, double* y, std::size_t m, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) y[i] = dot(A + i * n, x, n);
}

AVX2_FN void gemm(const double* A, const double* B, double* C, std::size_t m, std::size_t k,
                  std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* c = C + i * n;
    for (std::size_t j = 0; j < n; ++j) c[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) axpy(A[i * k + p], B + p * n, c, n);
  }
}

AVX2_FN void scale_cols(const double* A, const double* v, double* C, std::size_t m,
                        std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* a = A + i * n;
    double* c = C + i * n;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4)
      _mm256_storeu_pd(c + j, _mm256_mul_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(v + j)));
    for (; j < n; ++j) c[j] = a[j] * v[j];
  }
}

AVX2_FN void hadamard(const double* A, const double* B, double* C, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(C + i, _mm256_mul_pd(_mm256_loadu_pd(A + i), _mm256_loadu_pd(B + i)));
  for (; i < n; ++i) C[i] = A[i] * B[i];
}

#else

bool supported() { return false; }
double dot(const double* x, const double* y, std::size_t n) { return scalar::dot(x, y, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { scalar::axpy(a, x, y, n); }
void gemv(const double* A, const double* x, double* y, std::size_t m, std::size_t n) {
  scalar::gemv(A, x, y, m, n);
}
void gemm(const double* A, const double* B, double* C, std::size_t m, std::size_t k,
          std::size_t n) {
  scalar::gemm(A, B, C, m, k, n);
}
void scale_cols(const double* A, const double* v, double* C, std::size_t m, std::size_t n) {
  scalar::scale_cols(A, v, C, m, n);
}
void hadamard(const double* A, const double* B, double* C, std::size_t n) {
  scalar::hadamard(A, B, C, n);
}

#endif

}  // namespace specqm::simd::avx2
