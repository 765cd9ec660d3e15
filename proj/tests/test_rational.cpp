#include "lestab/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lestab;

TEST_CASE("rationals are canonical: reduced, positive denominator") {
    Rational q = rat(2, 4);
    CHECK(numerator(q) == 1);
    CHECK(denominator(q) == 2);

    Rational neg = rat(3, -9);
    CHECK(numerator(neg) == -1);
    CHECK(denominator(neg) == 3);

    CHECK(rat(0, 7) == 0);
    CHECK(denominator(rat(0, 7)) == 1);

    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic stays exact") {
    Rational a = rat(1, 3), b = rat(1, 6);
    CHECK(a + b == rat(1, 2));
    CHECK(a - b == rat(1, 6));
    CHECK(a * b == rat(1, 18));
    CHECK(a / b == 2);

    // A sum that would lose precision in doubles.
    Rational tenth = rat(1, 10), sum = 0;
    for (int i = 0; i < 10; ++i) sum += tenth;
    CHECK(sum == 1);
}

TEST_CASE("pow_int handles negative exponents and big results") {
    CHECK(pow_int(rat(2, 3), 3) == rat(8, 27));
    CHECK(pow_int(rat(2, 3), 0) == 1);
    CHECK(pow_int(rat(2, 3), -2) == rat(9, 4));
    CHECK(pow_int(rat(10), 30) == Rational(pow(BigInt(10), 30)));
    CHECK_THROWS_AS(pow_int(Rational(0), -1), std::domain_error);
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(rat(5), 3) == 60);       // 5*4*3
    CHECK(falling_factorial(rat(5), 0) == 1);        // empty product
    CHECK(falling_factorial(rat(1, 2), 2) == rat(-1, 4));  // (1/2)(-1/2)
    CHECK(falling_factorial(rat(3), 5) == 0);        // hits zero factor
}

TEST_CASE("doubles convert exactly, not via decimal strings") {
    // 0.5 is dyadic.
    CHECK(rational_from_double(0.5) == rat(1, 2));
    // 0.1 is not: the IEEE value is the nearest 53-bit dyadic.
    Rational q = rational_from_double(0.1);
    CHECK(q == Rational(BigInt(3602879701896397), BigInt(36028797018963968)));
    CHECK(q != rat(1, 10));
    // Round-trip through to_double is the identity for doubles.
    CHECK(to_double(q) == 0.1);
    CHECK_THROWS_AS(rational_from_double(1.0 / 0.0), std::domain_error);
}

TEST_CASE("printing") {
    CHECK(to_string(rat(-3, 7)) == "-3/7");
    CHECK(to_string(rat(42)) == "42");
    CHECK(to_string(Rational(0)) == "0");
}
