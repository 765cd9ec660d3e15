#pragma once

// Critical exponents and dimension thresholds for (-Delta)^s u = |u|^{p-1} u.
//
//   p_s(n)   Sobolev exponent (n+2s)/(n-2s), infinite for n <= 2s.
//   p_c(n)   the stability threshold: the unique root in p of the Gamma
//            criterion F(n, s, p) = 0 above p_s, or infinity when the
//            p -> inf limit G(n, s) is still nonnegative.
//   n_0(s)   the dimension below which p_c = infinity: the root in n of
//            G(n, s) = 0.
//   p_m(n)   the auxiliary exponent with the square root of
//            15m^2 + 120m + 370, m = n - 2s; infinite for m < 6 + sqrt(73).
//   a_{n,s}  the coefficient in the algebraic form of p_c,
//            p_c = (n+2s-2-2a sqrt(n)) / (n-2s-2-2a sqrt(n)), recovered by
//            inverting that relation around the computed p_c.
//
// For s = 1, 2, 3 the threshold has classical closed forms (second-, fourth-
// and sixth-order Joseph-Lundgren exponents); closed_form_exponent evaluates
// them, including the sixth-order Cardano cascade, and the test suite uses
// the agreement with the criterion root as a three-way consistency proof.
//
// Branch handling in the sixth-order formula: D0 = -(D1 + 36 sqrt(D2))^{1/3}
// needs the *real* cube root.  On the finite branch (n >= 15) the radicand
// D2 is positive, so the base D1 + 36 sqrt(D2) is real (and negative); the
// principal complex cube root would pick up a spurious rotation, so the real
// root is taken directly.  Should the base ever come out complex, all three
// cube-root branches are tried and the one yielding a real D is kept.  A
// final guard asserts |Im D| < 1e-9 |Re D| and errors otherwise.

#include "lestab/criterion.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace lestab {

inline constexpr double kRootTol = 1e-10;         // default for p_c / n_0 bisection
inline constexpr double kCriticalRelTol = 1e-12;  // |p - p_s| <= tol * p_s
inline constexpr double kPCap = 1e8;              // give up growing the p-bracket here

inline double sobolev_exponent(double n, double s) {
    if (!(n > 0) || !(s > 0))
        throw std::domain_error("sobolev_exponent: requires n > 0 and s > 0");
    if (n <= 2 * s) return std::numeric_limits<double>::infinity();
    return (n + 2 * s) / (n - 2 * s);
}

inline double pm_exponent(double n, double s) {
    if (!(n > 2 * s)) throw std::domain_error("pm_exponent: requires n > 2s");
    const double m = n - 2 * s;
    if (m < 6 + std::sqrt(73.0)) return std::numeric_limits<double>::infinity();
    const double r = std::sqrt(15 * m * m + 120 * m + 370);
    return (5 * n + 10 * s - r) / (5 * n - 10 * s - r);
}

// The p -> inf limit G(n,s) decides finiteness; then a 64-sample log-spaced
// scan guards the uniqueness assumption, a geometrically grown bracket pins
// the sign change, and plain bisection finishes.  No derivative of F exists
// in closed form, so nothing fancier than bisection is attempted.
inline double pc_exponent(double n, double s, double tol = kRootTol) {
    if (!(n > 2 * s)) throw std::domain_error("pc_exponent: requires n > 2s");
    if (!(tol > 0)) throw std::domain_error("pc_exponent: requires tol > 0");
    if (gamma_condition_limit(n, s) >= 0.0)
        return std::numeric_limits<double>::infinity();

    const double ps = (n + 2 * s) / (n - 2 * s);
    const auto F = [n, s](double p) { return gamma_condition(ParamPoint(n, s, p)).F; };

    const double start = ps * (1.0 + 1e-9);
    const double f_start = F(start);

    int sign_changes = 0;
    {
        double prev = f_start;
        for (int i = 1; i <= 64; ++i) {
            const double p = start * std::pow(kPCap / start, i / 64.0);
            const double cur = F(p);
            if ((prev > 0) != (cur > 0)) ++sign_changes;
            prev = cur;
        }
    }
    if (sign_changes > 1)
        throw std::runtime_error(
            "pc_exponent: multiple sign changes of F on the scan grid; the "
            "threshold is not unique at n=" + std::to_string(n) + ", s=" + std::to_string(s));

    double lo = start, flo = f_start;
    double hi = start, fhi = f_start;
    while (fhi > 0) {
        if (hi >= kPCap)
            throw std::runtime_error(
                "pc_exponent: no sign change of F below p=1e8: F(" + std::to_string(start) +
                ")=" + std::to_string(f_start) + ", F(1e8)=" + std::to_string(fhi));
        lo = hi;
        flo = fhi;
        hi = std::min(hi * 2.0, kPCap);
        fhi = F(hi);
    }
    (void)flo;

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (F(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline double n0_threshold(double s, double tol = kRootTol) {
    if (!(s > 0)) throw std::domain_error("n0_threshold: requires s > 0");
    if (!(tol > 0)) throw std::domain_error("n0_threshold: requires tol > 0");

    double lo = 2 * s + 1e-9;
    double hi = 2 * s + 20.0;
    const double glo = gamma_condition_limit(lo, s);
    const double ghi = gamma_condition_limit(hi, s);
    if (!(glo > 0) || !(ghi < 0))
        throw std::runtime_error("n0_threshold: no sign change of G on (2s, 2s+20]: G(lo)=" +
                                 std::to_string(glo) + ", G(hi)=" + std::to_string(ghi));
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (gamma_condition_limit(mid, s) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline double a_ns(double n, double s) {
    const double pc = pc_exponent(n, s);
    if (std::isinf(pc))
        throw std::domain_error("a_ns: undefined, p_c is infinite (n <= n_0(s))");
    return (n + 2 * s - 2 - pc * (n - 2 * s - 2)) / (2 * std::sqrt(n) * (1 - pc));
}

// Ascending integer coefficients of the two auxiliary polynomials inside the
// sixth-order closed form.  Shared with the exact-verification suite, which
// proves D1(n)^2 - 1296 D2(n) = (1024 + 768 n^2)^3 — the algebraic fact making
// the Cardano radicand a perfect structure and guarding this transcription.
inline constexpr long long kSixthOrderD1[7] = {-94976, 20736, 103104, -10368,
                                               -3024,  1296,  -108};
inline constexpr long long kSixthOrderD2[13] = {6131712,  -3039232, -16644096,
                                                4818944,  6915840,  -1936384,
                                                -690432,  251136,   -30864,
                                                -4320,    1800,     -216,
                                                9};

namespace detail {

inline double triharmonic_closed_form(double n) {
    using C = std::complex<long double>;
    const long double x = n;

    // Horner; both polynomials are exact in long double for the n of interest
    // (all intermediate terms stay below 2^63)
    long double d1 = 0.0L, d2 = 0.0L;
    for (int i = 6; i >= 0; --i) d1 = d1 * x + static_cast<long double>(kSixthOrderD1[i]);
    for (int i = 12; i >= 0; --i) d2 = d2 * x + static_cast<long double>(kSixthOrderD2[i]);

    const C base = C(d1, 0.0L) + 36.0L * std::sqrt(C(d2, 0.0L));

    std::optional<C> best;
    const auto consider = [&](const C& d0) {
        const C rad = C(9.0L * x * x + 96.0L, 0.0L) -
                      (C(1536.0L + 1152.0L * x * x, 0.0L) / d0) - 1.5L * d0;
        const C D = std::sqrt(rad) / 6.0L;
        if (!best || std::fabs((double)D.imag()) < std::fabs((double)best->imag()))
            best = D;
    };

    if (std::abs(base.imag()) <= 1e-12L * std::max(1.0L, std::abs(base.real()))) {
        // real base: the real cube root is the correct (and only real) branch
        consider(C(-std::cbrt(base.real()), 0.0L));
    } else {
        const C principal = std::pow(base, C(1.0L / 3.0L, 0.0L));
        const long double two_pi_3 = 2.0943951023931954923084289221863L;
        for (int k = 0; k < 3; ++k)
            consider(-(principal * std::polar(1.0L, two_pi_3 * k)));
    }

    const double re = static_cast<double>(best->real());
    const double im = static_cast<double>(best->imag());
    if (std::fabs(im) > 1e-9 * std::max(1.0, std::fabs(re)))
        throw std::runtime_error(
            "closed_form_exponent: sixth-order branch selection failed, |Im D| = " +
            std::to_string(im) + " at n = " + std::to_string(n));
    return (n + 4 - 2 * re) / (n - 8 - 2 * re);
}

}  // namespace detail

inline double closed_form_exponent(double n, int s_int) {
    if (!(n > 0)) throw std::domain_error("closed_form_exponent: requires n > 0");
    const double inf = std::numeric_limits<double>::infinity();
    switch (s_int) {
        case 1:
            if (n <= 10.0) return inf;
            return ((n - 2) * (n - 2) - 4 * n + 8 * std::sqrt(n - 1)) /
                   ((n - 2) * (n - 10));
        case 2: {
            if (n <= 12.0) return inf;
            const double X =
                std::sqrt(n * n + 4 - n * std::sqrt(n * n - 8 * n + 32));
            return (n + 2 - X) / (n - 6 - X);
        }
        case 3:
            if (n <= 14.0) return inf;
            return detail::triharmonic_closed_form(n);
        default:
            throw std::invalid_argument("closed_form_exponent: s_int must be 1, 2, or 3");
    }
}

inline double jl_classical(double n) { return closed_form_exponent(n, 1); }
inline double jl_biharmonic(double n) { return closed_form_exponent(n, 2); }
inline double jl_triharmonic(double n) { return closed_form_exponent(n, 3); }

struct ExponentProfile {
    double n = 0, s = 0;
    double p_s = 0, p_m = 0, p_c = 0;  // may be infinite
    double n0 = 0;
    std::optional<double> a_ns;  // absent when p_c is infinite
};

inline ExponentProfile exponent_profile(double n, double s, double tol = kRootTol) {
    ExponentProfile ep;
    ep.n = n;
    ep.s = s;
    ep.p_s = sobolev_exponent(n, s);
    if (!(n > 2 * s))
        throw std::domain_error("exponent_profile: requires n > 2s");
    ep.p_m = pm_exponent(n, s);
    ep.p_c = pc_exponent(n, s, tol);
    ep.n0 = n0_threshold(s, tol);
    if (!std::isinf(ep.p_c))
        ep.a_ns = (n + 2 * s - 2 - ep.p_c * (n - 2 * s - 2)) /
                  (2 * std::sqrt(n) * (1 - ep.p_c));
    return ep;
}

// JSON convention for possibly-infinite / possibly-absent reals:
//   finite x   -> {"value": x,    "infinite": false}
//   infinite   -> {"value": null, "infinite": true}
//   undefined  -> {"value": null, "infinite": false}
inline nlohmann::json real_field_json(double v) {
    if (std::isinf(v)) return nlohmann::json{{"value", nullptr}, {"infinite", true}};
    return nlohmann::json{{"value", v}, {"infinite", false}};
}

inline void to_json(nlohmann::json& j, const ExponentProfile& ep) {
    j = nlohmann::json{{"n", ep.n},
                       {"s", ep.s},
                       {"p_s", real_field_json(ep.p_s)},
                       {"p_m", real_field_json(ep.p_m)},
                       {"p_c", real_field_json(ep.p_c)},
                       {"n0", ep.n0},
                       {"a_ns", ep.a_ns ? real_field_json(*ep.a_ns)
                                        : nlohmann::json{{"value", nullptr},
                                                         {"infinite", false}}}};
}

enum class Regime {
    Subcritical,
    Critical,
    SupercriticalLiouville,
    SupercriticalStableSingular
};

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Subcritical: return "Subcritical";
        case Regime::Critical: return "Critical";
        case Regime::SupercriticalLiouville: return "SupercriticalLiouville";
        default: return "SupercriticalStableSingular";
    }
}

struct RegimeVerdict {
    Regime regime = Regime::Subcritical;
    std::optional<CriterionValue> criterion;  // present only in the supercritical cases
    std::string statement;
};

inline RegimeVerdict classify_regime(const ParamPoint& pt, double tol = kCriticalRelTol) {
    if (!(pt.n > 2 * pt.s))
        throw std::domain_error("classify_regime: requires n > 2s");
    const double ps = sobolev_exponent(pt.n, pt.s);

    RegimeVerdict rv;
    if (std::fabs(pt.p - ps) <= tol * ps) {
        rv.regime = Regime::Critical;
        rv.statement =
            "critical exponent: every stable solution has finite energy and "
            "vanishes identically";
    } else if (pt.p < ps) {
        rv.regime = Regime::Subcritical;
        rv.statement = "subcritical range: every stable solution vanishes identically";
    } else {
        rv.criterion = gamma_condition(pt);
        if (rv.criterion->F > 0) {
            rv.regime = Regime::SupercriticalLiouville;
            rv.statement =
                "supercritical, Gamma criterion satisfied: every stable solution "
                "vanishes identically";
        } else {
            rv.regime = Regime::SupercriticalStableSingular;
            rv.statement =
                "supercritical, Gamma criterion fails: the singular radial "
                "solution is stable and no Liouville conclusion applies";
        }
    }
    return rv;
}

inline void to_json(nlohmann::json& j, const RegimeVerdict& rv) {
    j = nlohmann::json{{"regime", regime_name(rv.regime)},
                       {"statement", rv.statement},
                       {"criterion", rv.criterion ? nlohmann::json(*rv.criterion)
                                                  : nlohmann::json(nullptr)}};
}

}  // namespace lestab
