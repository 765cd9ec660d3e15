#pragma once

// Slow, independent ln Gamma oracle for the test suite: shifted Stirling
// series in long double.  The argument is pushed above 32 by the recurrence
// ln G(x) = ln G(x+N) - sum ln(x+i); at z >= 32 the asymptotic series with
// twelve Bernoulli corrections has truncation error below 1e-30, so the
// 80-bit arithmetic (~1e-19) is the accuracy floor.  Shares no code or
// constants with lestab::log_gamma.

#include <cmath>

namespace oracle {

inline long double log_gamma_ld(long double x) {
    // B_{2j} / ( 2j (2j-1) ) for j = 1..12
    static const long double kCoef[12] = {
        1.0L / 12.0L,
        -1.0L / 360.0L,
        1.0L / 1260.0L,
        -1.0L / 1680.0L,
        1.0L / 1188.0L,
        -691.0L / 360360.0L,
        1.0L / 156.0L,
        -3617.0L / 122400.0L,
        43867.0L / 244188.0L,
        -174611.0L / 125400.0L,
        854513.0L / 63756.0L,
        -236364091.0L / 1506960.0L};
    constexpr long double kHalfLog2Pi = 0.91893853320467274178032973640562L;

    long double shift = 0.0L;
    long double z = x;
    while (z < 32.0L) {
        shift -= std::log(z);
        z += 1.0L;
    }

    long double series = 0.0L;
    const long double z2 = z * z;
    long double zp = z;  // z^(2j-1)
    for (int j = 0; j < 12; ++j) {
        series += kCoef[j] / zp;
        zp *= z2;
    }
    return (z - 0.5L) * std::log(z) - z + kHalfLog2Pi + series + shift;
}

}  // namespace oracle
