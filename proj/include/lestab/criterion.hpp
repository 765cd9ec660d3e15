#pragma once

// The Gamma-quotient stability criterion for the singular radial solution of
//
//     (-Delta)^s u = |u|^{p-1} u        on R^n,   n > 2s.
//
// The singular solution u = A |x|^{-2s/(p-1)} exists for p > n/(n-2s), and
// its (in)stability reduces to comparing a product of Gamma values against
// the fractional Hardy constant.  Writing eps = s/(p-1), the quantity
//
//     F = ln p + ln G(n/2 - eps) + ln G(s + eps)
//              - ln G(eps) - ln G((n-2s)/2 - eps) - ln Lambda_{n,s}
//
// with Lambda_{n,s} = G((n+2s)/4)^2 / G((n-2s)/4)^2 decides: F > 0 means the
// instability (hence Liouville) range, F <= 0 means the singular solution is
// stable.  Everything is done in log space; Gamma ratios at moderate n
// already overflow doubles.
//
// The p -> infinity limit of F is finite and explicit: ln G(eps) ~ -ln eps
// as eps -> 0+, so  ln p - ln G(eps) -> ln s  and
//
//     G(n, s) = ln s + ln G(n/2) + ln G(s) - ln G((n-2s)/2) - ln Lambda_{n,s}.
//
// Its sign decides whether the instability range is all of (p_s, infinity)
// (G >= 0) or bounded (G < 0); the boundary in n is the threshold n_0(s)
// computed in exponents.hpp.
//
// singular_lambda() is an independent check on the left side: the classical
// formula  (-Delta)^s |x|^{-a} = lambda(a) |x|^{-a-2s}  with
//
//     lambda(a) = 2^{2s} G((a+2s)/2) G((n-a)/2) / ( G(a/2) G((n-a-2s)/2) )
//
// gives  exp(log_lhs) = p * lambda(2s/(p-1)) * 2^{-2s}  for every valid p.

#include "lestab/gamma.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace lestab {

struct ParamPoint {
    double n = 0, s = 0, p = 0;
    // derived, always consistent with (n, s, p)
    double k = 0;  // 2s/(p-1)
    double m = 0;  // n - 2s
    double b = 0;  // 5 - 2s

    ParamPoint() = default;
    ParamPoint(double n_, double s_, double p_) : n(n_), s(s_), p(p_) {
        if (!(n > 0)) throw std::domain_error("ParamPoint: requires n > 0");
        if (!(s > 0)) throw std::domain_error("ParamPoint: requires s > 0");
        if (!(p > 1)) throw std::domain_error("ParamPoint: requires p > 1");
        k = 2 * s / (p - 1);
        m = n - 2 * s;
        b = 5 - 2 * s;
    }
};

enum class Verdict { InstabilityHolds, SingularStable };

inline const char* verdict_name(Verdict v) {
    return v == Verdict::InstabilityHolds ? "InstabilityHolds" : "SingularStable";
}

struct CriterionValue {
    double log_lhs = 0;  // ln p + the two numerator Gammas - the two denominator Gammas
    double log_rhs = 0;  // ln of the Hardy constant
    double F = 0;        // log_lhs - log_rhs
    Verdict verdict = Verdict::SingularStable;
    bool boundary = false;  // F landed exactly on 0
};

inline void to_json(nlohmann::json& j, const CriterionValue& v) {
    j = nlohmann::json{{"log_lhs", v.log_lhs},
                       {"log_rhs", v.log_rhs},
                       {"F", v.F},
                       {"verdict", verdict_name(v.verdict)},
                       {"boundary", v.boundary}};
}

// Lambda_{n,s} = ( G((n+2s)/4) / G((n-2s)/4) )^2, the fractional Hardy
// constant of order 2s.
inline double hardy_constant(double n, double s) {
    if (!(n > 2 * s))
        throw std::domain_error("hardy_constant: requires n > 2s");
    return std::exp(2.0 * (log_gamma((n + 2 * s) / 4) - log_gamma((n - 2 * s) / 4)));
}

namespace detail {
inline double checked_log_gamma(double x, const char* what) {
    if (!(x > 0.0))
        throw std::domain_error(std::string("gamma_condition: Gamma argument ") + what +
                                " = " + std::to_string(x) + " is not positive");
    return log_gamma(x);
}
}  // namespace detail

inline CriterionValue gamma_condition(const ParamPoint& pt) {
    if (!(pt.n > 2 * pt.s))
        throw std::domain_error("gamma_condition: requires n > 2s");
    const double eps = pt.s / (pt.p - 1);

    CriterionValue v;
    v.log_lhs = std::log(pt.p) +
                detail::checked_log_gamma(pt.n / 2 - eps, "n/2 - s/(p-1)") +
                detail::checked_log_gamma(pt.s + eps, "s + s/(p-1)") -
                detail::checked_log_gamma(eps, "s/(p-1)") -
                detail::checked_log_gamma((pt.n - 2 * pt.s) / 2 - eps,
                                          "(n-2s)/2 - s/(p-1)");
    v.log_rhs = 2.0 * (log_gamma((pt.n + 2 * pt.s) / 4) -
                       log_gamma((pt.n - 2 * pt.s) / 4));
    v.F = v.log_lhs - v.log_rhs;
    v.boundary = v.F == 0.0;
    v.verdict = v.F > 0.0 ? Verdict::InstabilityHolds : Verdict::SingularStable;
    return v;
}

// lim_{p -> inf} F at fixed (n, s); evaluated analytically, never by pushing
// p to large values (the Gamma pole at eps -> 0 would eat all precision).
inline double gamma_condition_limit(double n, double s) {
    if (!(s > 0)) throw std::domain_error("gamma_condition_limit: requires s > 0");
    if (!(n > 2 * s))
        throw std::domain_error("gamma_condition_limit: requires n > 2s");
    return std::log(s) + log_gamma(n / 2) + log_gamma(s) - log_gamma((n - 2 * s) / 2) -
           std::log(hardy_constant(n, s));
}

inline double singular_lambda(double n, double s, double alpha) {
    if (!(alpha > 0) || !(alpha < n - 2 * s))
        throw std::domain_error(
            "singular_lambda: requires 0 < alpha < n - 2s (Gamma poles otherwise)");
    return std::exp(2 * s * std::log(2.0) + log_gamma((alpha + 2 * s) / 2) +
                    log_gamma((n - alpha) / 2) - log_gamma(alpha / 2) -
                    log_gamma((n - alpha - 2 * s) / 2));
}

}  // namespace lestab
