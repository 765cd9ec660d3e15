#include "lestab/multipoly.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lestab;

namespace {
const MultiPoly k = MultiPoly::variable("k");
const MultiPoly m = MultiPoly::variable("m");
}  // namespace

TEST_CASE("construction and canonical form") {
    MultiPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.total_degree() == -1);
    CHECK(MultiPoly(0).is_zero());

    MultiPoly c(rat(3, 4));
    CHECK(c.is_constant());
    CHECK(c.constant_value() == rat(3, 4));

    CHECK((k - k).is_zero());          // cancellation erases the term
    CHECK(k + m - m == k);
    CHECK_FALSE(k.is_constant());
    CHECK_THROWS_AS(k.constant_value(), std::logic_error);
}

TEST_CASE("ring arithmetic") {
    MultiPoly p = (k + m) * (k + m);
    CHECK(p == k * k + 2 * k * m + m * m);
    CHECK(p.total_degree() == 2);
    CHECK(p.degree("k") == 2);

    // distributivity on a mildly involved example
    MultiPoly a = k * k - 3 * m + 1, b = m * m + k, c = k * m - 7;
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
}

TEST_CASE("pow") {
    CHECK(k.pow(0) == MultiPoly(1));
    CHECK(k.pow(5) == k * k * k * k * k);
    CHECK((k + 1).pow(3) == k.pow(3) + 3 * k.pow(2) + 3 * k + 1);
    CHECK_THROWS_AS(k.pow(-1), std::domain_error);
}

TEST_CASE("partial derivative") {
    MultiPoly p = k.pow(3) * m + 2 * k * m - m.pow(2) + 5;
    CHECK(p.derivative("k") == 3 * k.pow(2) * m + 2 * m);
    CHECK(p.derivative("m") == k.pow(3) + 2 * k - 2 * m);
    CHECK(p.derivative("absent").is_zero());
    // d/dk and d/dm commute
    CHECK(p.derivative("k").derivative("m") == p.derivative("m").derivative("k"));
}

TEST_CASE("substitution composes polynomials") {
    MultiPoly p = k.pow(2) + m;
    CHECK(p.subst("k", m + 1) == m.pow(2) + 3 * m + 1);
    CHECK(p.subst("k", MultiPoly(0)) == m);
    // substituting an absent variable is the identity
    CHECK(p.subst("z", m) == p);
}

TEST_CASE("evaluation is exact and demands full bindings") {
    MultiPoly p = 3 * k.pow(2) * m - rat(1, 2) * m + 4;
    std::map<std::string, Rational> at{{"k", rat(1, 3)}, {"m", rat(6)}};
    CHECK(p.eval(at) == 2 - 3 + 4);
    CHECK_THROWS_AS(p.eval({{"k", rat(1)}}), std::invalid_argument);
    CHECK(poly_eval(p, at) == 3);
}

TEST_CASE("equality is identity of canonical forms") {
    CHECK(poly_equal((k + m).pow(2) - (k - m).pow(2), 4 * k * m));
    CHECK_FALSE(poly_equal(k, m));
    // zero built two different ways
    CHECK(poly_equal(k * m - m * k, MultiPoly()));
}

TEST_CASE("printing is deterministic and readable") {
    MultiPoly p = -10 * k.pow(2) + 10 * k * m - m.pow(2) + 12 * m + 25;
    CHECK(p.str() == "-10*k^2 + 10*k*m - m^2 + 12*m + 25");
    CHECK(MultiPoly().str() == "0");
    CHECK((k - 1).str() == "k - 1");
    CHECK((-k).str() == "-k");
    CHECK((rat(1, 2) * k * m).str() == "1/2*k*m");
}

TEST_CASE("variables inventory") {
    MultiPoly p = k * m + MultiPoly::variable("lam");
    auto vs = p.variables();
    CHECK(vs == std::set<std::string>{"k", "lam", "m"});
}
