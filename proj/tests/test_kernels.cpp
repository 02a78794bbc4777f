#include <doctest.h>

#include <cmath>
#include <vector>

#include "netmat/kernels.hpp"
#include "support/generators.hpp"

using netmat::kern::avx2_kernels;
using netmat::kern::Kernels;
using netmat::kern::scalar_kernels;
using netmat::testgen::Rng;

namespace {

std::vector<double> random_doubles(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = static_cast<double>(rng.int_in(-1000, 1000)) / 16.0;
    return v;
}

}  // namespace

TEST_CASE("scalar kernels compute the expected values") {
    const Kernels& k = scalar_kernels();
    std::vector<double> a{1, 2, 3};
    std::vector<double> b{4, -5, 6};
    CHECK(k.dot(a.data(), b.data(), 3) == 12.0);
    CHECK(k.sum(a.data(), 3) == 6.0);

    std::vector<double> y{1, 1, 1};
    k.axpy(y.data(), 2.0, a.data(), 3);
    CHECK(y == std::vector<double>{3, 5, 7});

    // 2x2 times 2x2 by hand
    std::vector<double> m1{1, 2, 3, 4};
    std::vector<double> m2{0, 1, 1, 0};
    std::vector<double> c(4);
    k.gemm(m1.data(), m2.data(), c.data(), 2, 2, 2);
    CHECK(c == std::vector<double>{2, 1, 4, 3});
}

TEST_CASE("avx2 kernels match the scalar reference") {
    const Kernels* simd = avx2_kernels();
    if (!simd) return;  // not compiled in or CPU lacks AVX2
    const Kernels& ref = scalar_kernels();
    Rng rng(2024);

    // sizes straddling the vector width, including ragged tails
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 67u}) {
        auto a = random_doubles(rng, n);
        auto b = random_doubles(rng, n);

        // reductions may reassociate; compare within tight relative error
        double d_ref = ref.dot(a.data(), b.data(), n);
        double d_simd = simd->dot(a.data(), b.data(), n);
        CHECK(std::fabs(d_ref - d_simd) <= 1e-12 * (1.0 + std::fabs(d_ref)));

        double s_ref = ref.sum(a.data(), n);
        double s_simd = simd->sum(a.data(), n);
        CHECK(std::fabs(s_ref - s_simd) <= 1e-12 * (1.0 + std::fabs(s_ref)));

        // element-wise kernels accumulate in the same order: bit-identical
        auto y_ref = b;
        auto y_simd = b;
        ref.axpy(y_ref.data(), 1.25, a.data(), n);
        simd->axpy(y_simd.data(), 1.25, a.data(), n);
        CHECK(y_ref == y_simd);
    }

    for (std::size_t m : {1u, 2u, 5u}) {
        for (std::size_t kdim : {1u, 3u, 8u}) {
            for (std::size_t n : {1u, 4u, 7u}) {
                auto a = random_doubles(rng, m * kdim);
                auto b = random_doubles(rng, kdim * n);
                std::vector<double> c_ref(m * n), c_simd(m * n);
                ref.gemm(a.data(), b.data(), c_ref.data(), m, kdim, n);
                simd->gemm(a.data(), b.data(), c_simd.data(), m, kdim, n);
                CHECK(c_ref == c_simd);
            }
        }
    }
}

TEST_CASE("active kernel selection is stable") {
    const Kernels& first = netmat::kern::active();
    const Kernels& second = netmat::kern::active();
    CHECK(&first == &second);
}
