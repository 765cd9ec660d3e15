#pragma once

// log Gamma for positive real arguments.
//
// Lanczos approximation, g = 7, nine coefficients, evaluated in long double
// (80-bit on x86) so the double result keeps full precision even where the
// leading Stirling-like terms cancel (1 < x < 3, where ln Gamma dips through
// zero twice).  For x < 1 the recurrence ln Gamma(x) = ln Gamma(x+1) - ln x
// is applied once; near the pole at 0 this is also the numerically right
// thing, since -ln x carries the growth and the Lanczos part stays small.
//
// Accuracy: relative error well under 1e-13 against a 30-term shifted
// Stirling series (see the test suite's independent oracle); the weakest
// spots are the zeros of ln Gamma at x = 1, 2 where the error is absolute
// ~1e-17.

#include <cmath>
#include <stdexcept>
#include <string>

namespace lestab {

inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: requires x > 0, got " + std::to_string(x));

    static const long double kC[9] = {
        0.99999999999980993227684700473478L,
        676.520368121885098567009190444019L,
        -1259.13921672240287047156078755283L,
        771.3234287776530788486528258894L,
        -176.61502916214059906584551354L,
        12.507343278686904814458936853L,
        -0.13857109526572011689554707L,
        9.984369578019570859563e-6L,
        1.50563273514931155834e-7L};
    // ln(2 pi) / 2
    constexpr long double kHalfLog2Pi = 0.91893853320467274178032973640562L;

    long double z = x;
    long double correction = 0.0L;
    if (z < 1.0L) {
        correction = -std::log(z);
        z += 1.0L;
    }

    const long double y = z - 1.0L;
    long double a = kC[0];
    for (int i = 1; i < 9; ++i) a += kC[i] / (y + i);
    const long double t = y + 7.5L;
    const long double r = (y + 0.5L) * std::log(t) - t + kHalfLog2Pi + std::log(a);
    return static_cast<double>(r + correction);
}

}  // namespace lestab
