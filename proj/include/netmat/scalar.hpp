#pragma once

#include <charconv>
#include <cmath>
#include <string>

#include "netmat/rational.hpp"

namespace netmat {

/// Default absolute tolerance for entrywise comparisons on the float backend.
/// The rational backend ignores tolerances; its comparisons are exact.
inline constexpr double kDefaultEps = 1e-9;

/// Pivot magnitude below which Gauss-Jordan on the float backend reports
/// a singular matrix.
inline constexpr double kSingularPivotTol = 1e-12;

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr const char* backend_name = "rational";
    static constexpr bool exact = true;

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }

    static bool eq(const Rational& a, const Rational& b, double) { return a == b; }
    static bool is_zero(const Rational& a, double) { return a.is_zero(); }
    static bool nonneg(const Rational& a, double) { return !a.is_negative(); }
    static bool nonpos(const Rational& a, double) { return a.is_negative() || a.is_zero(); }

    static std::string str(const Rational& a) { return a.str(); }
};

template <>
struct scalar_traits<double> {
    static constexpr const char* backend_name = "float";
    static constexpr bool exact = false;

    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& r) { return r.to_double(); }

    static bool eq(double a, double b, double eps) { return std::fabs(a - b) <= eps; }
    static bool is_zero(double a, double eps) { return std::fabs(a) <= eps; }
    static bool nonneg(double a, double eps) { return a >= -eps; }
    static bool nonpos(double a, double eps) { return a <= eps; }

    /// Shortest decimal that round-trips to the same binary64 value.
    static std::string str(double a) {
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), a);
        (void)ec;
        return std::string(buf, ptr);
    }
};

}  // namespace netmat
