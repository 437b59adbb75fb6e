#include <cstdlib>
#include <cstring>

#include "specqm/simd.hpp"

namespace specqm::simd {

const KernelTable& scalar_table() {
  static const KernelTable t{Isa::Scalar,     scalar::dot,        scalar::axpy,
                             scalar::gemv,    scalar::gemm,       scalar::scale_cols,
                             scalar::hadamard};
  return t;
}

const KernelTable* avx2_table() {
  static const KernelTable t{Isa::Avx2, avx2::dot,        avx2::axpy,    avx2::gemv,
                             avx2::gemm, avx2::scale_cols, avx2::hadamard};
  static const bool ok = avx2::supported();
  return ok ? &t : nullptr;
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("SPECQM_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_table();
    if (const KernelTable* t = avx2_table()) return t;
    return &scalar_table();
  }();
  return *chosen;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace specqm::simd
