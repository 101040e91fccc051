#pragma once

#include <cstdint>

namespace wpcn {

/// Static description of the three-node line network: the AP at one end,
/// the source at the other, and the relay on the segment between them.
/// Distances are in meters, powers in watts, noise in dBm.
struct NetworkConfig {
    double d_as = 10.0;   ///< AP-source distance (> 0)
    double d_sr = 5.0;    ///< source-relay distance (0 < d_sr < d_as)
    double alpha = 2.0;   ///< path-loss exponent, in [2, 5]
    double eta = 0.5;     ///< energy harvesting efficiency, in (0, 1)
    double n0_dbm = -80.0;
    double p_a_max = 2.0; ///< AP peak transmit power (> 0)
    double p_r_max = 2.0; ///< relay peak transmit power (> 0)
    double mu = 0.5;      ///< average-to-peak power ratio, in [0, 1]
    bool reciprocal_channels = true;

    double d_ar() const { return d_as - d_sr; }
    double p_a_avg() const { return mu * p_a_max; }
    double p_r_avg() const { return mu * p_r_max; }
    double noise_w() const;

    /// Throws std::invalid_argument when any field is out of range.
    void validate() const;
};

/// Channel power gains for one transmission block. With reciprocal
/// channels h_as == h_sa and h_rs == h_sr hold bitwise.
struct ChannelRealization {
    double h_as = 0.0;
    double h_sa = 0.0;
    double h_rs = 0.0;
    double h_sr = 0.0;
    double h_ra = 0.0;
};

/// Unit-mean exponential fading draws, one per directed link. Geometry
/// independent, so the same draws can be re-scaled across sweep points.
struct UnitFading {
    double u_as = 0.0;
    double u_sa = 0.0;
    double u_rs = 0.0;
    double u_sr = 0.0;
    double u_ra = 0.0;
};

/// Mean channel power gain at distance d: 30 dB attenuation at the 1 m
/// reference, decaying as d^-alpha. Throws std::domain_error on d <= 0
/// or alpha outside [2, 5].
double mean_gain(double d, double alpha);

/// dBm -> watts.
double noise_watts(double n0_dbm);

/// Fading draws for block `block_index` of stream `seed`. Pure function
/// of (seed, block_index, reciprocal): safe to call concurrently and
/// stable under any evaluation order. When `reciprocal` is set the two
/// directions of the A-S and S-R pairs share one draw.
UnitFading sample_unit_fading(std::uint64_t seed, std::uint64_t block_index,
                              bool reciprocal);

/// Scales unit draws by the mean gains of the configured geometry.
ChannelRealization realize(const NetworkConfig& cfg, const UnitFading& u);

/// sample_unit_fading + realize in one call.
ChannelRealization sample_realization(const NetworkConfig& cfg,
                                      std::uint64_t seed,
                                      std::uint64_t block_index);

} // namespace wpcn
