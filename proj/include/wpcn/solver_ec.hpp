#pragma once

#include "wpcn/protocols.hpp"

namespace wpcn {

/// Globally optimal E-C allocation plus solver diagnostics.
struct EcOptimum {
    EcAllocation alloc;
    double throughput = 0.0;  ///< bps/Hz, equals ec_throughput(alloc)
    double z_star = 1.0;      ///< root of z ln z - z + 1 = a_const
    bool capped = false;      ///< whether tau1 was clamped to mu
    double tau1_unconstrained = 0.0; ///< optimizer of the cap-free problem
};

/// Unique z >= 1 with z ln z - z + 1 = a_const, to 1e-12 relative width.
/// Returns 1 for a_const == 0; throws std::domain_error on negative input.
double solve_z(double a_const);

/// The SNR-scale constant driving the E-C time split:
/// eta * (p_a_max * h_as + p_r_max * h_rs) * h_sa / N0.
double ec_snr_constant(const NetworkConfig& cfg, const ChannelRealization& ch);

/// Closed-form E-C optimum: both nodes at peak power, tau1 from the root
/// of the characteristic equation, clamped to mu when the average-power
/// cap binds, tau2 = 1 - tau1. When no allocation can harvest anything
/// the canonical degenerate optimum (tau1 = 0, tau2 = 1, peak powers,
/// zero throughput) is returned.
EcOptimum optimize_ec(const NetworkConfig& cfg, const ChannelRealization& ch);

} // namespace wpcn
