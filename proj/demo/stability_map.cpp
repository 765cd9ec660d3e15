// ASCII map of the (p, n) parameter plane at fixed s: where stable solutions
// must vanish and where the singular solution u = A |x|^{-2s/(p-1)} becomes
// stable.  One character per grid point:
//
//     .   subcritical            (p < p_s)
//     *   critical band          (p ~ p_s)
//     +   supercritical, F > 0   (Liouville range)
//     #   supercritical, F <= 0  (stable singular solution)
//
// The '#' region is non-empty exactly for n > n0(s); its left boundary is the
// curve p = p_c(n).
//
// Usage: ./demo_stability_map [s]      (default s = 2.5)

#include "lestab/exponents.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace lestab;

int main(int argc, char** argv) {
    const double s = argc > 1 ? std::atof(argv[1]) : 2.5;
    if (!(s > 0)) {
        std::fprintf(stderr, "usage: %s [s > 0]\n", argv[0]);
        return 2;
    }

    const int cols = 72;
    const double p_lo = 1.05, p_hi = 120.0;
    const auto p_at = [&](int c) {
        return p_lo * std::pow(p_hi / p_lo, double(c) / (cols - 1));
    };

    const double n0 = n0_threshold(s);
    std::printf("s = %g, n0(s) = %.6f; p from %g to %g (log scale)\n\n", s, n0, p_lo,
                p_hi);

    // Rows sweep n downward so the map reads like the usual (p, n) diagrams:
    // large dimensions (rich '#' region) on top, the Sobolev wedge at bottom.
    for (double n = 2 * s + 25.0; n >= 2 * s + 1.0 - 1e-9; n -= 1.0) {
        std::string row;
        const double ps = sobolev_exponent(n, s);
        for (int c = 0; c < cols; ++c) {
            const double p = p_at(c);
            // a visible band around p_s, not just the measure-zero line
            if (std::fabs(p - ps) <= 0.02 * ps) {
                row += '*';
                continue;
            }
            const RegimeVerdict rv = classify_regime(ParamPoint(n, s, p));
            switch (rv.regime) {
                case Regime::Subcritical: row += '.'; break;
                case Regime::Critical: row += '*'; break;
                case Regime::SupercriticalLiouville: row += '+'; break;
                default: row += '#'; break;
            }
        }
        const double pc = pc_exponent(n, s);
        if (std::isfinite(pc))
            std::printf("n = %5.1f  %s  p_c = %.4f\n", n, row.c_str(), pc);
        else
            std::printf("n = %5.1f  %s  p_c = inf%s\n", n, row.c_str(),
                        n <= n0 ? "  (n <= n0)" : "");
    }

    std::printf("\nlegend: . subcritical   * critical band   + Liouville   "
                "# stable singular\n");
    return 0;
}
