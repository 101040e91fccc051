#pragma once

#include "wpcn/protocols.hpp"

namespace wpcn {

/// Resolution of the brute-force searches. Defaults keep the 4-D D-C
/// grid near 7e6 evaluations per realization.
struct GridSpec {
    int n_tau = 101;   ///< points per time dimension (>= 2)
    int n_power = 41;  ///< points per power dimension (>= 2)
    double t_cap = 1e4; ///< finite stand-in for unbounded ratio scans

    void validate() const;
};

struct EcOracleResult {
    EcAllocation alloc;
    double throughput = 0.0;
};

struct DcOracleResult {
    DcAllocation alloc;
    double throughput = 0.0;
};

/// Exhaustive feasibility-filtered search over the full E-C variable
/// space (p_a, p_r, tau1, tau2) on a product grid. Deliberately assumes
/// neither tau1 + tau2 = 1 nor peak powers, so it independently confirms
/// those reductions. Ties keep the first point in iteration order
/// (p_a, p_r, tau1, tau2).
EcOracleResult oracle_ec(const NetworkConfig& cfg,
                         const ChannelRealization& ch, const GridSpec& grid);

/// Exhaustive search over (p_a, p_r_d, p_r_u, tau1) with tau2 = 1 - tau1.
/// Ties keep the first point in iteration order (p_a, p_r_d, tau1,
/// p_r_u).
DcOracleResult oracle_dc(const NetworkConfig& cfg,
                         const ChannelRealization& ch, const GridSpec& grid);

struct ScanBest {
    double t = 0.0;
    double value = 0.0;
};

/// Dense linear scan of the relay-split SNR g(t) over [t_lo, t_hi]
/// (n_points >= 2), used as ground truth for the closed-form candidate
/// set. Ties keep the smallest t.
ScanBest dense_scan_gamma_ratio(double a, double b, double c, double d,
                                double e, double t_lo, double t_hi,
                                int n_points);

/// Same scan followed by `stages` zoom passes (n_points each, window two
/// steps around the incumbent). A single linear pass over a wide
/// interval cannot localize a peak to 1e-6 relative; the zooms can.
ScanBest dense_scan_gamma_ratio_refined(double a, double b, double c,
                                        double d, double e, double t_lo,
                                        double t_hi, int n_points,
                                        int stages);

} // namespace wpcn
