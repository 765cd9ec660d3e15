// Five-minute tour of the library: exponents, the Gamma criterion, and the
// exact verification suite, all from the public headers.
//
// Build: part of the default CMake build; run ./demo_quickstart

#include "lestab/exponents.hpp"
#include "lestab/verification.hpp"

#include <cstdio>

using namespace lestab;

int main() {
    const double n = 20, s = 2.5;

    // Every threshold exponent at once.  p_m and p_c may be infinite; a_ns
    // is only defined when p_c is finite.
    const ExponentProfile ep = exponent_profile(n, s);
    std::printf("exponents at n = %g, s = %g\n", n, s);
    std::printf("  p_s  = %-18.12g Sobolev exponent (n+2s)/(n-2s)\n", ep.p_s);
    std::printf("  p_m  = %-18.12g monotonicity threshold\n", ep.p_m);
    std::printf("  p_c  = %-18.12g root of the Gamma criterion\n", ep.p_c);
    std::printf("  n0   = %-18.12g largest n with p_c = infinity at this s\n", ep.n0);
    if (ep.a_ns)
        std::printf("  a_ns = %-18.12g spectral parameter at p_c\n", *ep.a_ns);

    // The stability criterion itself at a concrete supercritical p: F > 0
    // means every stable solution vanishes, F <= 0 means the singular radial
    // solution is stable.
    std::printf("\nregimes along p at the same (n, s):\n");
    for (double p : {1.2, ep.p_s, 2.0, ep.p_c + 0.5}) {
        const RegimeVerdict rv = classify_regime(ParamPoint(n, s, p));
        std::printf("  p = %-10.6g %-28s", p, regime_name(rv.regime));
        if (rv.criterion)
            std::printf(" F = %+.6f", rv.criterion->F);
        std::printf("\n");
    }

    // The exact layer: every algebraic identity behind the monotonicity
    // formula, proved in rational arithmetic.  all_pass() is the one-line
    // health check; individual entries carry their statements.
    const Report rep = verify_suite();
    std::printf("\nexact verification suite: %zu checks, %s\n", rep.checks().size(),
                rep.all_pass() ? "all pass" : "FAILURES PRESENT");
    const CheckResult* c = rep.find("coeff.factor.a2");
    if (c) std::printf("  e.g. %s: %s\n", c->id.c_str(), c->anchor.c_str());

    // Everything serializes: profiles, verdicts, and reports.
    std::printf("\nprofile as JSON:\n%s\n", nlohmann::json(ep).dump(2).c_str());
    return rep.all_pass() ? 0 : 1;
}
