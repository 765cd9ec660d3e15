#include "lestab/coefficients.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

using namespace lestab;

namespace {
const MultiPoly K = MultiPoly::variable("k");
const MultiPoly M = MultiPoly::variable("m");

Rational eval_km(const MultiPoly& p, const Rational& k, const Rational& m) {
    return p.eval({{"k", k}, {"m", m}});
}
}  // namespace

TEST_CASE("delta coefficients expand as expected in (k, m)") {
    const DeltaSet d = build_delta_set();

    CHECK(d.delta1 == 2 * M + 10 - 4 * K);

    // k = 0 wipes every k-carrying summand.
    CHECK(d.delta2.subst("k", MultiPoly(0)) == (M + 5) * (M + 3));
    CHECK(d.delta3.subst("k", MultiPoly(0)) == -(M + 5) * (M + 3));
    CHECK(d.delta4.subst("k", MultiPoly(0)).is_zero());

    // Degrees in k: linear, quadratic, cubic, quartic.
    CHECK(d.delta1.degree("k") == 1);
    CHECK(d.delta2.degree("k") == 2);
    CHECK(d.delta3.degree("k") == 3);
    CHECK(d.delta4.degree("k") == 4);
}

TEST_CASE("greek coefficients expand as expected in (k, m)") {
    const GreekSet g = build_greek_set();

    CHECK(g.alpha == M + 3 - 2 * K);
    CHECK(g.alpha0 == M + 5 - 2 * K);
    CHECK(g.alpha0 - g.alpha == MultiPoly(2));
    CHECK(g.beta == K * (K - M - 2));
    CHECK(g.beta0 == K * (K - M - 4));
    CHECK(g.beta0.subst("k", MultiPoly(0)).is_zero());
    CHECK(g.beta0 - g.beta == -2 * K);
}

TEST_CASE("A1, A2, B1 reach their closed forms") {
    const CoeffSet c = build_coeff_set(build_delta_set(), build_greek_set());

    CHECK(c.A1 == -10 * K * K + 10 * K * M - M * M + 12 * M + 25);
    CHECK(c.B1 == -6 * K * K + 6 * K * M + 12 * M + 30);

    CHECK(eval_km(c.A2, 0, 1) == 72);
    CHECK(c.A2.subst("k", M + 1).is_zero());
    CHECK(c.A2.subst("k", M + 3).is_zero());
    CHECK(c.A2.subst("k", MultiPoly(-1)).is_zero());
    CHECK(c.A2.subst("k", MultiPoly(-3)).is_zero());
}

TEST_CASE("verify_km_forms proves all five closed-form statements") {
    const Report rep = verify_km_forms(build_coeff_set(build_delta_set(), build_greek_set()));

    CHECK(rep.all_pass());
    CHECK(rep.checks().size() == 5);
    for (const char* id : {"coeff.km.a1", "coeff.km.a2", "coeff.km.b1",
                           "coeff.factor.a2", "coeff.vieta.b1"}) {
        const CheckResult* c = rep.find(id);
        REQUIRE(c != nullptr);
        CHECK(c->pass);
        CHECK(c->residual.empty());
    }

    // A deliberately corrupted coefficient set fails with the exact difference.
    CoeffSet broken = build_coeff_set(build_delta_set(), build_greek_set());
    broken.B1 += MultiPoly(7);
    const Report bad = verify_km_forms(broken);
    CHECK_FALSE(bad.all_pass());
    const CheckResult* b1 = bad.find("coeff.km.b1");
    REQUIRE(b1 != nullptr);
    CHECK_FALSE(b1->pass);
    CHECK(b1->residual == "7");
}

TEST_CASE("report serializes to JSON with name/pass/residual per check") {
    const Report rep = verify_km_forms(build_coeff_set(build_delta_set(), build_greek_set()));
    const nlohmann::json j = rep.json();

    CHECK(j.at("all_pass").get<bool>());
    REQUIRE(j.at("checks").is_array());
    REQUIRE(j.at("checks").size() == 5);
    const auto& first = j.at("checks").at(0);
    CHECK(first.at("name").get<std::string>() == "coeff.km.a1");
    CHECK(first.at("pass").get<bool>());
    CHECK(first.at("residual").get<std::string>().empty());
}

TEST_CASE("A2 and B1 are positive strictly between k = 0 and k = m/2") {
    const CoeffSet c = build_coeff_set(build_delta_set(), build_greek_set());

    const std::vector<Rational> ms = {1, 2, 5, rat(25, 2), 30};
    const std::vector<Rational> ts = {rat(1, 10), rat(1, 3), rat(1, 2), rat(9, 10),
                                      rat(99, 100)};
    for (const Rational& m : ms) {
        for (const Rational& t : ts) {
            const Rational k = m / 2 * t;
            CAPTURE(to_string(k), to_string(m));
            CHECK(eval_km(c.A2, k, m) > 0);
            CHECK(eval_km(c.B1, k, m) > 0);
        }
    }

    // At the endpoint k = m/2 both survive (two negative factors in A2)...
    CHECK(eval_km(c.A2, rat(5, 2), 5) > 0);
    // ...but far beyond it A2 goes negative: k between m+1 and m+3.
    CHECK(eval_km(c.A2, 7, 5) < 0);
}

TEST_CASE("sign_analysis evaluates exactly at rational parameter points") {
    const SignAnalysis sa = sign_analysis(30.0, 2.5, 3.0);
    CHECK(sa.k == rat(5, 2));
    CHECK(sa.m == 25);
    CHECK(sa.supercritical);
    CHECK(sa.A1_pos12);
    CHECK(sa.A2_pos);
    CHECK(sa.B1_pos);

    // p below the Sobolev exponent lands at k >= m/2 and is flagged, not refused.
    const SignAnalysis sub = sign_analysis(30.0, 2.5, 1.25);
    CHECK(sub.k == 20);
    CHECK_FALSE(sub.supercritical);

    CHECK_THROWS_AS(sign_analysis(30.0, 2.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(sign_analysis(4.0, 2.5, 3.0), std::domain_error);
    CHECK_THROWS_AS(sign_analysis(30.0, -1.0, 3.0), std::domain_error);
}

TEST_CASE("jordan_decompose at the selected parameters (2, 0)") {
    const CoeffSet c = build_coeff_set(build_delta_set(), build_greek_set());
    const JordanDecomposition jd = jordan_decompose(2, 0);

    CHECK(jd.ok);
    CHECK(jd.residual.is_zero());
    CHECK(jd.d1 == c.A1 + 12);
    CHECK(jd.d2 == c.A2);

    // Boundary table: only e_{2,2} = -3 c1 = -6 survives at c2 = 0.
    REQUIRE(jd.boundary_coeffs.count({2, 2}) == 1);
    CHECK(jd.boundary_coeffs.at({2, 2}) == MultiPoly(-6));
    CHECK(jd.boundary_coeffs.count({1, 1}) == 0);
}

TEST_CASE("jordan_decompose balances for generic rational (c1, c2)") {
    const CoeffSet c = build_coeff_set(build_delta_set(), build_greek_set());

    const JordanDecomposition zero = jordan_decompose(0, 0);
    CHECK(zero.ok);
    CHECK(zero.d1 == c.A1);
    CHECK(zero.d2 == c.A2);
    CHECK(zero.boundary_coeffs.empty());

    const JordanDecomposition jd = jordan_decompose(1, 1);
    CHECK(jd.ok);
    CHECK(jd.d1 == c.A1 + 9);
    CHECK(jd.d2 == c.A2 + c.A1 + 9);
    REQUIRE(jd.boundary_coeffs.count({2, 2}) == 1);
    CHECK(jd.boundary_coeffs.at({2, 2}) == MultiPoly(-3));
    REQUIRE(jd.boundary_coeffs.count({1, 1}) == 1);
    CHECK(jd.boundary_coeffs.at({1, 1}) == -(c.A1 + 9));

    const JordanDecomposition q = jordan_decompose(rat(3, 2), rat(-1, 3));
    CHECK(q.ok);
    CHECK(q.residual.is_zero());
}

TEST_CASE("d1(c1) is maximized exactly at c1 = 2") {
    const CoeffSet c = build_coeff_set(build_delta_set(), build_greek_set());

    for (const Rational& c1 : {Rational(0), Rational(1), rat(3, 2), Rational(2),
                               rat(5, 2), Rational(3)}) {
        const JordanDecomposition jd = jordan_decompose(c1, 0);
        const MultiPoly gap = c.A1 + 12 - jd.d1;
        CAPTURE(to_string(c1));
        // gap = 3 (c1 - 2)^2: a nonnegative constant, zero only at c1 = 2.
        CHECK(gap == MultiPoly(3 * (c1 - 2) * (c1 - 2)));
        if (c1 == 2) {
            CHECK(gap.is_zero());
        } else {
            CHECK(gap.constant_value() > 0);
        }
    }
}

TEST_CASE("the integration-by-parts catalog verifies in full") {
    const Report rep = verify_ibp_catalog();

    for (const auto& c : rep.checks()) {
        CAPTURE(c.id, c.residual);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());

    // The base entries every downstream reduction leans on.
    for (const char* id :
         {"ibp.f5_f1", "ibp.f4_f1", "ibp.f3_f1", "ibp.f2_f1", "ibp.neg_f4_f2",
          "ibp.neg_f2_f0", "ibp.neg5_f4_f1", "ibp.neg_f3_f1", "ibp.g2_g0",
          "ibp.h3_h1", "ibp.h2_h0", "ibp.d_f2sq", "ibp.d_f1sq"}) {
        const CheckResult* c = rep.find(id);
        REQUIRE(c != nullptr);
        CHECK(c->pass);
    }

    // The assembled combinations and sector totals.
    for (const char* id :
         {"ibp.combo_first", "ibp.combo_second", "ibp.combo_third", "ibp.combo_total",
          "ibp.combo_total_coeff", "ibp.k1_core", "ibp.k2_core", "ibp.k3_core",
          "ibp.k_total", "ibp.l2_core", "ibp.l_total", "ibp.j_total",
          "vpart.radial_bracket", "vpart.gradient_cross"}) {
        const CheckResult* c = rep.find(id);
        REQUIRE(c != nullptr);
        CHECK(c->pass);
    }
}

TEST_CASE("the coefficient-variant probe logs the exact residual") {
    const Report rep = verify_ibp_catalog();
    const CheckResult* c = rep.find("ibp.combo_total_coeff");
    REQUIRE(c != nullptr);
    CHECK(c->pass);
    // The wrong variant misses by 5*delta2 * lam * (f')^2.
    CHECK(c->residual.find("delta2") != std::string::npos);
    CHECK(c->residual.find("f1") != std::string::npos);
}

TEST_CASE("combo remainders specialize to A1 and A2 under the delta substitution") {
    // Substituting the concrete delta polynomials into the symbolic remainder
    // coefficients of ibp.combo_total reproduces the radial-sector parts of
    // A1 and A2; adding the diagonal parts of the extra quadratic block then
    // gives A1 and A2 themselves.  This stitches the differential-ring layer
    // to the (k, m) layer.
    const DeltaSet d = build_delta_set();
    const GreekSet g = build_greek_set();
    const CoeffSet c = build_coeff_set(d, g);

    const MultiPoly sector_f2 = 10 * d.delta1 - 2 * d.delta2 - 56;
    const MultiPoly sector_f1 =
        -18 * d.delta1 + 6 * d.delta2 - 4 * d.delta3 + 2 * d.delta4 + 72;
    const MultiPoly diag_f2 =
        g.alpha0 * g.alpha0 - 2 * g.alpha0 - 2 * g.beta0 - 4;
    const MultiPoly diag_f1 =
        -(g.alpha0 * g.alpha0) + g.beta0 * g.beta0 + 2 * g.alpha0 + 2 * g.beta0;

    CHECK(sector_f2 + diag_f2 == c.A1);
    CHECK(sector_f1 + diag_f1 == c.A2);
}
