#pragma once

// The aggregated exact-verification suite: every algebraic fact the stability
// analysis rests on, checked by rational/polynomial arithmetic or certified by
// Sturm sequences.  Nothing in this header touches floating point.
//
// The suite merges
//   - the (k, m) closed forms and factorizations of the quadratic-form
//     coefficients A1, A2, B1 (coefficients module),
//   - the integration-by-parts catalog with its bracket/remainder splits,
//   - the Jordan-type diagonalization of the fifth-order form,
//   - the sphere calculus of scaling derivatives (scaling module) plus the
//     cross-module radial-operator and second-order-block grids,
//   - Sturm-certified root brackets for the comparison quartic and the
//     branch-point quadratic of p_m, and
//   - the perfect-cube radicand identity behind the sixth-order closed form.
//
// The check set is fixed: identical builds produce identical reports, so the
// JSON output doubles as a regression artifact.

#include "lestab/check.hpp"
#include "lestab/coefficients.hpp"
#include "lestab/exponents.hpp"
#include "lestab/scaling.hpp"
#include "lestab/unipoly.hpp"

#include <iterator>
#include <string>
#include <vector>

namespace lestab {

// Root brackets and polynomial identities for the numeric thresholds of the
// exponent-comparison arguments.
inline Report verify_thresholds() {
    Report rep("threshold certificates");

    // the comparison quartic: where its largest real root sits decides the
    // m-range on which p_c < p_m can be read off directly
    {
        const UniPoly q = UniPoly::from_ints({7236, -29088, -17244, -720, 225});
        bool pass = false;
        std::string residual;
        try {
            const Rational lo = rat(1111, 100), hi = rat(1113, 100);
            const int inside = count_real_roots(q, lo, hi);
            const int above = count_real_roots(q, hi, cauchy_root_bound(q) + 1);
            pass = (inside == 1 && above == 0);
            if (!pass)
                residual = "roots in (11.11,11.13]: " + std::to_string(inside) +
                           ", above 11.13: " + std::to_string(above);
        } catch (const std::exception& e) {
            residual = e.what();
        }
        rep.add("quartic.root_bracket",
                "largest real root of 225m^4 - 720m^3 - 17244m^2 - 29088m + 7236 "
                "lies in (11.11, 11.13] and none lie above (Sturm)",
                pass, residual);
    }

    // p_m branch point: the denominator 5n - 10s - sqrt(15m^2 + 120m + 370)
    // vanishes exactly where 10(m^2 - 12m - 37) does, i.e. at m = 6 + sqrt(73)
    {
        const UniPoly diff = UniPoly::from_ints({-370, -120, 10});  // (5m)^2 - R(m)
        const UniPoly q73 = UniPoly::from_ints({-37, -12, 1});
        const bool ident = (diff == Rational(10) * q73);
        rep.add("threshold.pm_denominator",
                "(5m)^2 - (15m^2 + 120m + 370) = 10 (m^2 - 12m - 37) exactly",
                ident, ident ? "" : "polynomial mismatch");

        bool pass = false;
        std::string residual;
        try {
            const int inside = count_real_roots(q73, rat(1454, 100), rat(1455, 100));
            const int above =
                count_real_roots(q73, rat(1455, 100), cauchy_root_bound(q73) + 1);
            pass = (inside == 1 && above == 0);
            if (!pass)
                residual = "roots in (14.54,14.55]: " + std::to_string(inside) +
                           ", above: " + std::to_string(above);
        } catch (const std::exception& e) {
            residual = e.what();
        }
        rep.add("threshold.sqrt73",
                "6 + sqrt(73), the positive root of m^2 - 12m - 37, lies in "
                "(14.54, 14.55] and is the largest root (Sturm)",
                pass, residual);
    }

    // sixth-order closed form: the Cardano radicand satisfies
    // D1(n)^2 - 1296 D2(n) = (1024 + 768 n^2)^3, which pins down both
    // polynomial transcriptions at once
    {
        const auto to_poly = [](const long long* b, const long long* e) {
            std::vector<Rational> c;
            for (const long long* p = b; p != e; ++p) c.emplace_back(*p);
            return UniPoly(std::move(c));
        };
        const UniPoly d1 = to_poly(std::begin(kSixthOrderD1), std::end(kSixthOrderD1));
        const UniPoly d2 = to_poly(std::begin(kSixthOrderD2), std::end(kSixthOrderD2));
        const UniPoly base = UniPoly::from_ints({1024, 0, 768});
        const bool pass = (d1 * d1 - Rational(1296) * d2 == base * base * base);
        rep.add("closedform.radicand_cube",
                "D1^2 - 1296 D2 = (1024 + 768 n^2)^3: the discriminant under the "
                "sixth-order cube root is a perfect cube",
                pass, pass ? "" : "polynomial mismatch");
    }

    return rep;
}

// Jordan-type diagonalization entries: the canonical square-completing choice,
// one generic rational parameter pair, and the exact statement that the first
// diagonal entry is maximized at c1 = 2.
inline Report verify_jordan() {
    Report rep("fifth-order form diagonalization");

    const JordanDecomposition canonical = jordan_decompose(2, 0);
    rep.add("jordan.canonical",
            "square completion at (c1, c2) = (2, 0): d1 = A1 + 12, d2 = A2",
            canonical.ok, canonical.ok ? "" : canonical.residual.str());

    const JordanDecomposition general = jordan_decompose(rat(3, 2), rat(-1, 3));
    rep.add("jordan.general",
            "decomposition balances at the generic parameters (c1, c2) = (3/2, -1/3)",
            general.ok, general.ok ? "" : general.residual.str());

    const MultiPoly c1 = MultiPoly::variable("c1");
    const MultiPoly gap = 3 * c1.pow(2) - 12 * c1 + 12;  // A1 + 12 - d1(c1)
    const bool sq = (gap - 3 * (c1 - 2).pow(2)).is_zero();
    rep.add("jordan.gap_square",
            "A1 + 12 - d1(c1) = 3 (c1 - 2)^2: the diagonal entry d1 is maximal "
            "exactly at the square-completing choice",
            sq, sq ? "" : (gap - 3 * (c1 - 2).pow(2)).str());

    return rep;
}

// The full fixed suite.  One entry per identity; all exact.
inline Report verify_suite() {
    Report rep("exact verification suite");

    rep.merge(verify_km_forms(build_coeff_set(build_delta_set(), build_greek_set())));
    rep.merge(verify_ibp_catalog());
    rep.merge(verify_jordan());

    const std::vector<Rational> kGrid = {Rational(0), Rational(1) / 2, Rational(1),
                                         Rational(3) / 2, Rational(5) / 7};
    rep.merge(verify_scaling_calculus(8, kGrid));

    // cross-module grids as single aggregated entries
    {
        bool all = true;
        std::string residual;
        for (int j = 0; j <= 8 && all; ++j)
            for (const Rational& k : kGrid) {
                for (const Rational& m : {Rational(10), Rational(5), Rational(1) / 2})
                    if (!verify_radial_I(j, k, m)) {
                        all = false;
                        std::ostringstream os;
                        os << "j=" << j << " k=" << k << " m=" << m;
                        residual = os.str();
                        break;
                    }
                if (!all) break;
            }
        rep.add("scaling.radial_I_grid",
                "fourth-order radial operator vs its delta-combination on the full "
                "(j, k, m) grid, delta-set imported from the coefficients module",
                all, residual);
    }
    {
        bool all = true;
        std::string residual;
        for (int j = 0; j <= 8 && all; ++j)
            for (const Rational& k : kGrid) {
                for (const Rational& m : {Rational(10), Rational(5), Rational(1) / 2})
                    if (!verify_urr_form(j, k, m)) {
                        all = false;
                        std::ostringstream os;
                        os << "j=" << j << " k=" << k << " m=" << m;
                        residual = os.str();
                        break;
                    }
                if (!all) break;
            }
        rep.add("scaling.urr_grid",
                "second-order radial block vs its (alpha, beta) combination and its "
                "lambda-derivative on the full (j, k, m) grid",
                all, residual);
    }

    rep.merge(verify_thresholds());
    return rep;
}

}  // namespace lestab
