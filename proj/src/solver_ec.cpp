#include "wpcn/solver_ec.hpp"

#include <cmath>
#include <stdexcept>

namespace wpcn {
namespace {

double char_fn(double z) { return z * std::log(z) - z + 1.0; }

} // namespace

double solve_z(double a_const) {
    if (a_const < 0.0)
        throw std::domain_error("solve_z: a_const must be non-negative");
    if (a_const == 0.0) return 1.0;

    // char_fn is 0 at z = 1 and strictly increasing beyond, so a
    // geometric bracket always exists. Bisection over Newton: the
    // derivative ln z vanishes at the left end.
    double hi = 2.0;
    while (char_fn(hi) < a_const) hi *= 2.0;
    double lo = 1.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (char_fn(mid) < a_const ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double ec_snr_constant(const NetworkConfig& cfg,
                       const ChannelRealization& ch) {
    return cfg.eta * (cfg.p_a_max * ch.h_as + cfg.p_r_max * ch.h_rs) *
           ch.h_sa / cfg.noise_w();
}

EcOptimum optimize_ec(const NetworkConfig& cfg, const ChannelRealization& ch) {
    cfg.validate();

    EcOptimum out;
    out.alloc.p_a = cfg.p_a_max;
    out.alloc.p_r = cfg.p_r_max;

    const double a_const = ec_snr_constant(cfg, ch);
    if (a_const <= 0.0) {
        // Dead downlink or dead uplink: nothing to optimize. Canonical
        // degenerate output keeps regression tests deterministic.
        out.alloc.tau1 = 0.0;
        out.alloc.tau2 = 1.0;
        return out;
    }

    out.z_star = solve_z(a_const);
    out.tau1_unconstrained = (out.z_star - 1.0) / (a_const + out.z_star - 1.0);
    out.capped = out.tau1_unconstrained > cfg.mu;
    out.alloc.tau1 = out.capped ? cfg.mu : out.tau1_unconstrained;
    out.alloc.tau2 = 1.0 - out.alloc.tau1;
    out.throughput = ec_throughput(cfg, ch, out.alloc);
    return out;
}

} // namespace wpcn
