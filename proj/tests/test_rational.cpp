#include <doctest.h>

#include <limits>

#include "zeon/rational.hpp"

using zeon::Rational;

TEST_SUITE("rational") {

TEST_CASE("small arithmetic stays exact and normalized") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(4, -8) == Rational(-1, 2));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(-3, 4).sign() == -1);
}

TEST_CASE("overflow promotes to arbitrary precision and back") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    const Rational sum = big + Rational(1);
    CHECK_FALSE(sum.is_small());
    CHECK(sum.to_string() == "9223372036854775808");
    CHECK(sum - Rational(1) == big);
    CHECK((sum - Rational(1)).to_int64() == std::numeric_limits<std::int64_t>::max());

    const Rational sq = big * big;
    CHECK(sq / big == big);
}

TEST_CASE("factorials") {
    CHECK(zeon::factorial(0) == Rational(1));
    CHECK(zeon::factorial(8) == Rational(40320));
    CHECK(zeon::factorial(20).to_int64() == 2432902008176640000LL);
    CHECK(zeon::factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("parse and print round trip") {
    for (const char* s : {"0", "7", "-12", "3/4", "-5/9", "123456789012345678901234567890"}) {
        CHECK(Rational::parse(s).to_string() == s);
    }
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    const Rational huge = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(4);
    CHECK(Rational(5) < huge);
    CHECK(-huge < Rational(-5));
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

}
