#pragma once

#include <cstddef>

namespace netmat::kern {

/// Dense binary64 inner loops used by the float matrix backend. One scalar
/// reference implementation always exists; an AVX2 variant is compiled on
/// x86-64 and selected at runtime when the CPU supports it.
///
/// gemm and axpy accumulate in the same order in every variant and are
/// bit-identical across implementations (both are built with FP contraction
/// off). dot and sum reduce with vector partial accumulators in the AVX2
/// variant, so they may differ from the reference by normal rounding.
struct Kernels {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum)(const double* x, std::size_t n);
    void (*axpy)(double* y, double a, const double* x, std::size_t n);
    // row-major C (m x n) = A (m x k) * B (k x n); C is overwritten
    void (*gemm)(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
                 std::size_t n);
};

/// Scalar reference kernels.
const Kernels& scalar_kernels();

/// AVX2 kernels, or nullptr when not compiled in or not supported by the CPU.
const Kernels* avx2_kernels();

/// The implementation selected for this process. Honors NETMAT_KERNELS=scalar
/// (or =avx2) in the environment; otherwise picks the best supported variant.
/// The choice is made once and never changes afterwards.
const Kernels& active();

}  // namespace netmat::kern
