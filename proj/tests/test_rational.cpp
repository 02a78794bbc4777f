#include <doctest.h>

#include "netmat/rational.hpp"

using netmat::BigInt;
using netmat::Rational;

TEST_CASE("bigint arithmetic round trips through strings") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-42).str() == "-42");
    CHECK(BigInt::from_string("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK(BigInt::from_string("-000123").str() == "-123");
}

TEST_CASE("bigint add/sub/mul agree with 64-bit arithmetic on small values") {
    for (std::int64_t a : {-37, -1, 0, 5, 1000000007}) {
        for (std::int64_t b : {-41, -3, 0, 7, 999999937}) {
            CHECK((BigInt(a) + BigInt(b)).str() == std::to_string(a + b));
            CHECK((BigInt(a) - BigInt(b)).str() == std::to_string(a - b));
            CHECK((BigInt(a) * BigInt(b)).str() == std::to_string(a * b));
        }
    }
}

TEST_CASE("bigint multiplication carries across limbs") {
    BigInt big = BigInt::from_string("4294967296");  // 2^32
    CHECK((big * big).str() == "18446744073709551616");
    CHECK((big * big * big).str() == "79228162514264337593543950336");
    BigInt x = BigInt::from_string("18446744073709551615");
    CHECK((x * x).str() == "340282366920938463426481119284349108225");
}

TEST_CASE("bigint division and gcd") {
    auto dm = BigInt::divmod(BigInt(17), BigInt(5));
    CHECK(dm.quot.str() == "3");
    CHECK(dm.rem.str() == "2");
    dm = BigInt::divmod(BigInt(-17), BigInt(5));
    CHECK(dm.quot.str() == "-3");
    CHECK(dm.rem.str() == "-2");
    BigInt huge = BigInt::from_string("340282366920938463426481119284349108225");
    auto dm2 = BigInt::divmod(huge, BigInt::from_string("18446744073709551615"));
    CHECK(dm2.quot.str() == "18446744073709551615");
    CHECK(dm2.rem.is_zero());

    CHECK(BigInt::gcd(BigInt(12), BigInt(18)).str() == "6");
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)).str() == "6");
    CHECK(BigInt::gcd(BigInt(0), BigInt(7)).str() == "7");
    CHECK(BigInt::gcd(BigInt::from_string("990000000000000000000"),
                      BigInt::from_string("154000000000000000000"))
              .str() == "22000000000000000000");
}

TEST_CASE("bigint comparisons order by value") {
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt(3) < BigInt(5));
    CHECK(BigInt(-5) < BigInt(-3));
    CHECK(BigInt::from_string("99999999999999999999") > BigInt(1));
}

TEST_CASE("rational normalizes and keeps exact arithmetic") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");

    Rational third(1, 3);
    Rational sum;
    for (int i = 0; i < 3; ++i) sum += third;
    CHECK(sum == Rational(1));

    CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
    CHECK((Rational(1, 2) / Rational(1, 4)).str() == "2");
    CHECK((Rational(1, 2) - Rational(1, 3)).str() == "1/6");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK(Rational(2, 6) == Rational(1, 3));
}

TEST_CASE("rational parses decimals, fractions and integers") {
    CHECK(Rational::from_string("3") == Rational(3));
    CHECK(Rational::from_string("-2.5") == Rational(-5, 2));
    CHECK(Rational::from_string("0.125") == Rational(1, 8));
    CHECK(Rational::from_string("7/2") == Rational(7, 2));
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
}

TEST_CASE("rational converts binary64 values exactly") {
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(-8.0) == Rational(-8));
    // binary64 nearest to 0.1 is 3602879701896397 / 2^55
    CHECK(Rational::from_double(0.1) ==
          Rational(BigInt::from_string("3602879701896397"),
                   BigInt::from_string("36028797018963968")));
    CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75).epsilon(1e-15));
}
