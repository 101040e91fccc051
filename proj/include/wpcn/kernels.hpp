#pragma once

#include <cstdint>

namespace wpcn::kernels {

/// Value and position of a row maximum. Ties keep the smallest index, so
/// the result matches a sequential first-maximum scan exactly.
struct RowBest {
    double value = 0.0;
    std::int64_t index = -1;
};

/// One backend of the data-parallel throughput kernels. The scalar
/// backend is the reference; vector backends must reproduce it bitwise
/// (same operations in the same order, fma used explicitly on both
/// sides).
struct Backend {
    const char* name;

    /// max over j of tau2[j] * log2(1 + c / tau2[j]), with tau2[j] == 0
    /// contributing 0. Requires c >= 0 finite, n >= 1.
    RowBest (*best_ec_row)(double c, const double* tau2, std::int64_t n);

    /// max over j of half_tau2 * log2(1 + gamma_sa + s_j) with
    /// s_j = gamma_sr * gamma_ra[j] / (gamma_sr + gamma_ra[j] + 1).
    RowBest (*best_dc_row)(double half_tau2, double gamma_sa,
                           double gamma_sr, const double* gamma_ra,
                           std::int64_t n);

    /// out[j] = a + b/(t_j+1) + (c + d/(t_j+1)) * w_j
    ///          / (c + d/(t_j+1) + w_j + 1),  w_j = e * t_j/(t_j+1).
    /// Requires finite t_j >= 0.
    void (*gamma_ratio_scan)(double a, double b, double c, double d,
                             double e, const double* t, double* out,
                             std::int64_t n);
};

const Backend& scalar_backend();

/// nullptr when the build has no AVX2 translation unit.
const Backend* avx2_backend();

/// True when the running CPU offers AVX2 + FMA.
bool cpu_has_avx2();

/// AVX2 backend when compiled in and supported by the CPU, else scalar.
const Backend& active_backend();

/// Polynomial log2 shared by every backend; the vector paths evaluate the
/// same operations lane-wise. Requires a positive, finite, normal input.
/// Accurate to a few ulp of std::log2.
double log2_poly(double x);

} // namespace wpcn::kernels
