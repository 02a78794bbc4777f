#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace netmat {

struct BigIntDivMod;

/// Arbitrary-precision signed integer. Sign-magnitude representation with
/// 32-bit limbs, little-endian; an empty limb vector is zero.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    /// Parses an optionally signed decimal string. Throws std::invalid_argument.
    static BigInt from_string(std::string_view text);

    [[nodiscard]] bool is_zero() const { return limbs_.empty(); }
    [[nodiscard]] bool is_negative() const { return negative_; }
    [[nodiscard]] int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    [[nodiscard]] bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    [[nodiscard]] BigInt abs() const;
    BigInt operator-() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    /// Greatest common divisor, always non-negative.
    static BigInt gcd(BigInt a, BigInt b);

    /// Truncated division, |rem| < |b|. Throws std::invalid_argument on b == 0.
    static BigIntDivMod divmod(const BigInt& a, const BigInt& b);
    /// Quotient of an exact division (caller guarantees b divides a).
    static BigInt divide_exact(const BigInt& a, const BigInt& b);

    [[nodiscard]] bool fits_int64() const;
    [[nodiscard]] std::int64_t to_int64() const;  // precondition: fits_int64()
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string str() const;

private:
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;

    void trim();
    [[nodiscard]] std::size_t bit_length() const;
    [[nodiscard]] std::size_t trailing_zero_bits() const;
    void shift_right_bits(std::size_t k);
    void shift_left_bits(std::size_t k);
    void mul_small_add(std::uint32_t factor, std::uint32_t addend);
    std::uint32_t divmod_small(std::uint32_t divisor);

    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

struct BigIntDivMod {
    BigInt quot;
    BigInt rem;
};

/// Exact rational number over BigInt. Always normalized: the denominator is
/// positive, numerator and denominator are coprime, and zero is 0/1.
/// Arithmetic never rounds; equality is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);
    Rational(BigInt n, BigInt d);

    /// Parses "3", "-2.5", "7/2" and the like. Throws std::invalid_argument.
    static Rational from_string(std::string_view text);
    /// Exact conversion of a finite binary64 value.
    static Rational from_double(double v);

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_negative() const { return num_.is_negative(); }
    [[nodiscard]] bool is_integer() const;

    [[nodiscard]] const BigInt& num() const { return num_; }
    [[nodiscard]] const BigInt& den() const { return den_; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    [[nodiscard]] double to_double() const;
    /// "p" when the denominator is 1, otherwise "p/q".
    [[nodiscard]] std::string str() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

}  // namespace netmat
