#include "netmat/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace netmat::kern {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

void axpy(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void gemm(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
          std::size_t n) {
    std::fill(c, c + m * n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = a[i * k + p];
            if (aip == 0.0) continue;
            const double* brow = b + p * n;
            double* crow = c + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
        }
    }
}

}  // namespace scalar

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", scalar::dot, scalar::sum, scalar::axpy, scalar::gemm};
    return k;
}

#if !defined(NETMAT_HAVE_AVX2)
const Kernels* avx2_kernels() { return nullptr; }
#endif

const Kernels& active() {
    static const Kernels* chosen = [] {
        const Kernels* pick = avx2_kernels();
        if (const char* env = std::getenv("NETMAT_KERNELS")) {
            if (std::strcmp(env, "scalar") == 0) pick = nullptr;
            // "avx2" keeps the avx2 pick when available; unknown values fall through
        }
        return pick ? pick : &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace netmat::kern
