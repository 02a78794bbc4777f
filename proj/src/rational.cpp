#include "netmat/rational.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

namespace netmat {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    // avoid overflow when negating INT64_MIN
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    if (mag != 0) limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("sign without digits");
    BigInt r;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
        r.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
    }
    r.negative_ = neg;
    r.trim();
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    out[big.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// precondition: |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.negative_ == b.negative_) {
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        r.negative_ = a.negative_;
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        r.limbs_ = BigInt::sub_mag(big.limbs_, small.limbs_);
        r.negative_ = big.negative_;
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.negative_ = a.negative_ != b.negative_;
    r.trim();
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_)
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = BigInt::cmp_mag(a, b);
    if (a.negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 32 + (32 - std::countl_zero(limbs_.back()));
}

std::size_t BigInt::trailing_zero_bits() const {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] != 0) return i * 32 + std::countr_zero(limbs_[i]);
    }
    return 0;
}

void BigInt::shift_right_bits(std::size_t k) {
    if (is_zero() || k == 0) return;
    std::size_t limb_shift = k / 32;
    std::size_t bit_shift = k % 32;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        negative_ = false;
        return;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
    if (bit_shift != 0) {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint32_t hi = i + 1 < limbs_.size() ? limbs_[i + 1] : 0;
            limbs_[i] = (limbs_[i] >> bit_shift) | (hi << (32 - bit_shift));
        }
    }
    trim();
}

void BigInt::shift_left_bits(std::size_t k) {
    if (is_zero() || k == 0) return;
    std::size_t limb_shift = k / 32;
    std::size_t bit_shift = k % 32;
    limbs_.insert(limbs_.begin(), limb_shift, 0u);
    if (bit_shift != 0) {
        std::uint32_t carry = 0;
        for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
            std::uint32_t cur = limbs_[i];
            limbs_[i] = (cur << bit_shift) | carry;
            carry = cur >> (32 - bit_shift);
        }
        if (carry != 0) limbs_.push_back(carry);
    }
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // binary gcd: strips factors of two, then subtracts odd values
    std::size_t shift = std::min(a.trailing_zero_bits(), b.trailing_zero_bits());
    a.shift_right_bits(a.trailing_zero_bits());
    do {
        b.shift_right_bits(b.trailing_zero_bits());
        if (cmp_mag(a, b) > 0) std::swap(a, b);
        b = b - a;
    } while (!b.is_zero());
    a.shift_left_bits(shift);
    return a;
}

BigIntDivMod BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    BigIntDivMod out;
    if (cmp_mag(a, b) < 0) {
        out.rem = a;
        return out;
    }
    // binary long division over the magnitudes
    BigInt rem;
    BigInt quot;
    BigInt babs = b.abs();
    std::size_t bits = a.bit_length();
    quot.limbs_.assign((bits + 31) / 32, 0);
    for (std::size_t i = bits; i-- > 0;) {
        rem.shift_left_bits(1);
        if ((a.limbs_[i / 32] >> (i % 32)) & 1u) {
            if (rem.limbs_.empty())
                rem.limbs_.push_back(1);
            else
                rem = rem + BigInt(1);
        }
        if (cmp_mag(rem, babs) >= 0) {
            rem.limbs_ = sub_mag(rem.limbs_, babs.limbs_);
            quot.limbs_[i / 32] |= 1u << (i % 32);
        }
    }
    quot.trim();
    rem.trim();
    quot.negative_ = !quot.is_zero() && (a.negative_ != b.negative_);
    rem.negative_ = !rem.is_zero() && a.negative_;
    out.quot = std::move(quot);
    out.rem = std::move(rem);
    return out;
}

BigInt BigInt::divide_exact(const BigInt& a, const BigInt& b) { return divmod(a, b).quot; }

void BigInt::mul_small_add(std::uint32_t factor, std::uint32_t addend) {
    std::uint64_t carry = addend;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * factor + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

std::uint32_t BigInt::divmod_small(std::uint32_t divisor) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
    std::uint64_t mag = 0;
    if (!limbs_.empty()) mag = limbs_[0];
    if (limbs_.size() > 1) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return negative_ ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

double BigInt::to_double() const {
    if (is_zero()) return 0.0;
    std::size_t bits = bit_length();
    double d;
    if (bits <= 64) {
        std::uint64_t mag = limbs_[0];
        if (limbs_.size() > 1) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        d = static_cast<double>(mag);
    } else {
        // top 64 bits carry the full double precision
        BigInt top = *this;
        top.negative_ = false;
        top.shift_right_bits(bits - 64);
        std::uint64_t mag = top.limbs_[0] | (static_cast<std::uint64_t>(top.limbs_[1]) << 32);
        d = std::ldexp(static_cast<double>(mag), static_cast<int>(bits - 64));
    }
    return negative_ ? -d : d;
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    BigInt tmp = *this;
    std::vector<std::uint32_t> chunks;  // base 10^9 digits, little-endian
    while (!tmp.is_zero()) chunks.push_back(tmp.divmod_small(1000000000u));
    std::string out;
    if (negative_) out.push_back('-');
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

// ---------------------------------------------------------------------------

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("rational with zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = BigInt::divide_exact(num_, g);
        den_ = BigInt::divide_exact(den_, g);
    }
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt n = BigInt::from_string(text.substr(0, slash));
        BigInt d = BigInt::from_string(text.substr(slash + 1));
        return Rational(std::move(n), std::move(d));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(BigInt::from_string(text), BigInt(1));
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() && (digits.empty() || digits == "-" || digits == "+"))
        throw std::invalid_argument("bad decimal literal");
    digits += frac;
    BigInt den(1);
    for (std::size_t i = 0; i < frac.size(); ++i) den = den * BigInt(10);
    return Rational(BigInt::from_string(digits), std::move(den));
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
    if (v == 0.0) return Rational();
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral exactly
    std::int64_t scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    BigInt num(scaled);
    BigInt den(1);
    if (exp >= 0) {
        BigInt two(2);
        for (int i = 0; i < exp; ++i) num = num * two;
    } else {
        BigInt two(2);
        for (int i = 0; i < -exp; ++i) den = den * two;
    }
    return Rational(std::move(num), std::move(den));
}

}  // namespace netmat
