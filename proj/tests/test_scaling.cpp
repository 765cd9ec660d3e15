#include "lestab/scaling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace lestab;

namespace {
const std::vector<Rational> kGridK = {Rational(0), Rational(1) / 2, Rational(1),
                                      Rational(3) / 2, Rational(5) / 7};
}

TEST_CASE("scaled family derivatives reduce to falling factorials") {
    // u = lam^{k+j} r^j with j = 2, k = 1: plain power rule
    const ScaledFamily f(RadialMonomial(2), Rational(1));
    CHECK(lambda_derivative(f, 0, 1, 1) == 1);
    CHECK(lambda_derivative(f, 1, 1, 1) == 3);       // (k+j) = 3
    CHECK(lambda_derivative(f, 2, 1, 1) == 6);       // 3*2
    CHECK(lambda_derivative(f, 3, 1, 1) == 6);       // 3*2*1
    CHECK(lambda_derivative(f, 4, 1, 1) == 0);       // 3*2*1*0
    CHECK(radial_derivative(f, 1, 1, 1) == 2);       // j = 2
    CHECK(radial_derivative(f, 2, 1, 1) == 2);       // 2*1
    CHECK(radial_derivative(f, 3, 1, 1) == 0);

    // i=1, j=0, k=3: (k+j) lam^{k+j-1} = 3 at lam = 1
    const ScaledFamily g(RadialMonomial(0), Rational(3));
    CHECK(lambda_derivative(g, 1, 1, 1) == 3);

    // integer k: lam and r powers evaluate away from 1
    CHECK(lambda_derivative(f, 1, 2, 1) == 3 * 4);           // 3 lam^2 at lam=2
    CHECK(lambda_derivative(f, 0, 2, 3) == 8 * 9);           // lam^3 r^2
    CHECK(radial_derivative(f, 1, 2, 3) == 8 * 2 * 3);       // lam^3 * 2r
    CHECK(lambda_derivative(f, 1, Rational(1) / 2, 1) == Rational(3) / 4);

    // fractional k: the lam-power is left symbolic (treated as 1)
    const ScaledFamily h(RadialMonomial(1), Rational(5) / 7);
    CHECK(lambda_derivative(h, 1, 2, 1) == Rational(12) / 7);

    CHECK_THROWS_AS(lambda_derivative(f, 5, 1, 1), std::domain_error);
    CHECK_THROWS_AS(lambda_derivative(f, -1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(lambda_derivative(f, 1, 0, 1), std::domain_error);
    CHECK_THROWS_AS(lambda_derivative(f, 1, 1, Rational(-1)), std::domain_error);
    CHECK_THROWS_AS(RadialMonomial(-2), std::domain_error);
}

TEST_CASE("Euler relation holds off the sphere for integer k") {
    // lam u' = k u + r d_r u is an identity in (lam, r), not just at (1,1)
    for (int j = 0; j <= 6; ++j) {
        for (long long kk : {0LL, 1LL, 2LL, 5LL}) {
            const ScaledFamily f{RadialMonomial(j), Rational(kk)};
            for (const Rational& lam : {Rational(1), Rational(2), Rational(1) / 3}) {
                for (const Rational& r : {Rational(1), Rational(3), Rational(2) / 5}) {
                    const Rational lhs = lam * lambda_derivative(f, 1, lam, r);
                    const Rational rhs =
                        Rational(kk) * lambda_derivative(f, 0, lam, r) +
                        r * radial_derivative(f, 1, lam, r);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("verify_scaling_calculus passes on the full grid") {
    const Report rep = verify_scaling_calculus(8, kGridK);
    CHECK(rep.all_pass());
    CHECK(rep.failed_count() == 0);

    // the catalog covers every conversion identity plus the chain and
    // operator-derivative extras
    for (const char* id :
         {"scaling.euler", "scaling.euler_d1", "scaling.euler_d2", "scaling.euler_d3", "scaling.euler_r1",
          "scaling.euler_r2", "scaling.euler_r3", "scaling.dr_u", "scaling.dr_u1", "scaling.drr_u_step",
          "scaling.drr_u", "scaling.drr_u1_step", "scaling.drr_u1", "scaling.drrr_u_step",
          "scaling.drrr_u", "scaling.drrr_u1_step", "scaling.drr_u2_step", "scaling.drr_u2",
          "scaling.drr_u1_again", "scaling.drrr_u1", "scaling.drrrr_u_step", "scaling.drrrr_u",
          "scaling.summary_r1", "scaling.summary_r2", "scaling.summary_r3",
          "scaling.chain1", "scaling.chain2", "scaling.chain3", "scaling.chain4",
          "scaling.dI_dlam", "scaling.delta_b"}) {
        const CheckResult* cr = rep.find(id);
        REQUIRE(cr != nullptr);
        CHECK(cr->pass);
    }

    CHECK_THROWS_AS(verify_scaling_calculus(3, kGridK), std::domain_error);
}

TEST_CASE("verify_scaling_calculus on higher degree and extra k samples") {
    std::vector<Rational> ks = kGridK;
    ks.push_back(Rational(-2) / 3);  // negative k is as good as any
    ks.push_back(Rational(22) / 7);
    const Report rep = verify_scaling_calculus(12, ks);
    CHECK(rep.all_pass());
}

TEST_CASE("verify_radial_I ties the delta-set to the radial operator") {
    CHECK(verify_radial_I(4, Rational(1), Rational(10)));
    CHECK(verify_radial_I(1, Rational(0), Rational(7)));  // pure calculus at k=0
    CHECK(verify_radial_I(0, Rational(2), Rational(3)));  // constant-term consistency
    for (int j = 0; j <= 8; ++j)
        for (const Rational& k : kGridK)
            for (const Rational& m : {Rational(10), Rational(5), Rational(1) / 2})
                CHECK(verify_radial_I(j, k, m));
    CHECK_THROWS_AS(verify_radial_I(-1, Rational(1), Rational(1)), std::domain_error);
}

TEST_CASE("verify_urr_form covers the block and its lambda-derivative") {
    CHECK(verify_urr_form(2, Rational(1), Rational(10)));
    CHECK(verify_urr_form(2, Rational(0), Rational(10)));  // Euler identity case
    CHECK(verify_urr_form(3, Rational(2), Rational(8)));
    for (int j = 0; j <= 8; ++j)
        for (const Rational& k : kGridK)
            for (const Rational& m : {Rational(10), Rational(5), Rational(1) / 2})
                CHECK(verify_urr_form(j, k, m));
    CHECK_THROWS_AS(verify_urr_form(-3, Rational(1), Rational(1)), std::domain_error);
}

TEST_CASE("linearity: identities extend to a random degree-6 polynomial") {
    // u = sum_j c_j r^j; both sides of each identity are linear in u, so the
    // monomial checks must add up with the same coefficients
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 12);
    std::vector<Rational> c;
    for (int j = 0; j <= 6; ++j) c.push_back(rat(num(rng), den(rng)));

    const Rational k = Rational(5) / 7;
    const auto T = [&](int i, int a) {
        Rational acc = 0;
        for (int j = 0; j <= 6; ++j)
            acc += c[j] * scaled_term(ScaledFamily(RadialMonomial(j), k), i, a, 1, 1);
        return acc;
    };

    // fourth-derivative expansion on the polynomial
    const Rational lhs4 = T(0, 4);
    const Rational rhs4 = T(4, 0) - 4 * k * T(3, 0) + 6 * k * (1 + k) * T(2, 0) -
                          4 * k * (1 + k) * (2 + k) * T(1, 0) +
                          (3 + k) * (2 + k) * (1 + k) * k * T(0, 0);
    CHECK(lhs4 == rhs4);

    // third-derivative expansion on the polynomial
    const Rational lhs3 = T(0, 3);
    const Rational rhs3 = T(3, 0) - 3 * k * T(2, 0) + 3 * k * (1 + k) * T(1, 0) -
                          (2 + k) * (1 + k) * k * T(0, 0);
    CHECK(lhs3 == rhs3);
}

TEST_CASE("scaling report serializes to JSON") {
    const Report rep = verify_scaling_calculus(4, {Rational(1) / 2});
    const nlohmann::json j = rep.json();
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("checks").is_array());
    CHECK(j.at("checks").size() >= 25);
    bool saw_ue0 = false;
    for (const auto& e : j.at("checks"))
        if (e.at("name") == "scaling.euler") {
            saw_ue0 = true;
            CHECK(e.at("pass") == true);
        }
    CHECK(saw_ue0);
}
