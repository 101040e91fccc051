#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "wpcn/kernels.hpp"

// Per-element reference operations. The vector backends replay exactly
// these operations lane-wise (explicit fma on both sides, kernel sources
// build with -ffp-contract=off), so scalar and vector results are
// required to agree bitwise.

namespace wpcn::kernels::detail {

inline constexpr double kTwoOverLn2 = 2.8853900817779268147198493620038;
inline constexpr double kSqrt2 = 1.4142135623730951; // nearest double
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// atanh Taylor coefficients 1/(2k+1); with the mantissa reduced to
// [1/sqrt(2), sqrt(2)) the argument r^2 stays below 0.0295, so the
// truncation error of degree 12 is ~1e-20.
inline constexpr double kAtanhCoeff[13] = {
    1.0,        1.0 / 3.0,  1.0 / 5.0,  1.0 / 7.0,  1.0 / 9.0,
    1.0 / 11.0, 1.0 / 13.0, 1.0 / 15.0, 1.0 / 17.0, 1.0 / 19.0,
    1.0 / 21.0, 1.0 / 23.0, 1.0 / 25.0,
};

// log2 for positive, finite, normal x.
inline double log2_elem(double x) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    double e =
        static_cast<double>(static_cast<std::int64_t>(bits >> 52)) - 1023.0;
    double m = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) |
                                     0x3FF0000000000000ull);
    if (m > kSqrt2) {
        m *= 0.5;
        e += 1.0;
    }
    const double r = (m - 1.0) / (m + 1.0);
    const double s = r * r;
    double p = kAtanhCoeff[12];
    for (int k = 11; k >= 0; --k) p = std::fma(p, s, kAtanhCoeff[k]);
    return std::fma(kTwoOverLn2 * r, p, e);
}

inline double ec_elem(double c, double tau2) {
    if (tau2 > 0.0) return tau2 * log2_elem(1.0 + c / tau2);
    return 0.0;
}

inline double dc_elem(double half_tau2, double base, double gamma_sr,
                      double gra) {
    const double num = gamma_sr * gra;
    const double den = (gamma_sr + gra) + 1.0;
    return half_tau2 * log2_elem(base + num / den);
}

inline double gamma_elem(double a, double b, double c, double d, double e,
                         double t) {
    const double u = 1.0 / (t + 1.0);
    const double w = t * u;
    const double g1 = c + d * u;
    const double g2 = e * w;
    return (a + b * u) + (g1 * g2) / ((g1 + g2) + 1.0);
}

} // namespace wpcn::kernels::detail
