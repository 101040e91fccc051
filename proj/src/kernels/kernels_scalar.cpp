#include "kernels_detail.hpp"

namespace wpcn::kernels {
namespace {

using namespace detail;

RowBest best_ec_row_scalar(double c, const double* tau2, std::int64_t n) {
    RowBest rb{kNegInf, -1};
    for (std::int64_t j = 0; j < n; ++j) {
        const double v = ec_elem(c, tau2[j]);
        if (v > rb.value) rb = {v, j};
    }
    return rb;
}

RowBest best_dc_row_scalar(double half_tau2, double gamma_sa,
                           double gamma_sr, const double* gamma_ra,
                           std::int64_t n) {
    const double base = 1.0 + gamma_sa;
    RowBest rb{kNegInf, -1};
    for (std::int64_t j = 0; j < n; ++j) {
        const double v = dc_elem(half_tau2, base, gamma_sr, gamma_ra[j]);
        if (v > rb.value) rb = {v, j};
    }
    return rb;
}

void gamma_ratio_scan_scalar(double a, double b, double c, double d,
                             double e, const double* t, double* out,
                             std::int64_t n) {
    for (std::int64_t j = 0; j < n; ++j)
        out[j] = gamma_elem(a, b, c, d, e, t[j]);
}

} // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar",
        &best_ec_row_scalar,
        &best_dc_row_scalar,
        &gamma_ratio_scan_scalar,
    };
    return backend;
}

} // namespace wpcn::kernels
