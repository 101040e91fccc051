#include "wpcn/protocols.hpp"

#include <cmath>

namespace wpcn {
namespace {

constexpr double kTol = kFeasibilityTol;

// Time fractions compare with absolute slack, powers with slack relative
// to their bound.
bool power_at_most(double x, double bound) {
    return x <= bound + kTol * bound;
}

bool power_non_negative(double x, double scale) {
    return x >= -kTol * scale;
}

} // namespace

const char* to_string(Constraint c) {
    switch (c) {
    case Constraint::none: return "none";
    case Constraint::non_negative: return "non-negative";
    case Constraint::time_budget: return "time-budget";
    case Constraint::ap_peak_power: return "ap-peak-power";
    case Constraint::relay_peak_power: return "relay-peak-power";
    case Constraint::ap_average_power: return "ap-average-power";
    case Constraint::relay_average_power: return "relay-average-power";
    }
    return "unknown";
}

Constraint ec_violation(const NetworkConfig& cfg, const EcAllocation& a) {
    if (!power_non_negative(a.p_a, cfg.p_a_max) ||
        !power_non_negative(a.p_r, cfg.p_r_max) || a.tau1 < -kTol ||
        a.tau2 < -kTol)
        return Constraint::non_negative;
    if (a.tau1 + a.tau2 > 1.0 + kTol) return Constraint::time_budget;
    if (!power_at_most(a.p_a, cfg.p_a_max)) return Constraint::ap_peak_power;
    if (!power_at_most(a.p_r, cfg.p_r_max))
        return Constraint::relay_peak_power;
    if (!power_at_most(a.tau1 * a.p_a, cfg.p_a_avg()))
        return Constraint::ap_average_power;
    if (!power_at_most(a.tau1 * a.p_r, cfg.p_r_avg()))
        return Constraint::relay_average_power;
    return Constraint::none;
}

Constraint dc_violation(const NetworkConfig& cfg, const DcAllocation& a) {
    if (!power_non_negative(a.p_a, cfg.p_a_max) ||
        !power_non_negative(a.p_r_d, cfg.p_r_max) ||
        !power_non_negative(a.p_r_u, cfg.p_r_max) || a.tau1 < -kTol ||
        a.tau2 < -kTol)
        return Constraint::non_negative;
    if (a.tau1 + a.tau2 > 1.0 + kTol) return Constraint::time_budget;
    if (!power_at_most(a.p_a, cfg.p_a_max)) return Constraint::ap_peak_power;
    if (!power_at_most(a.p_r_d, cfg.p_r_max) ||
        !power_at_most(a.p_r_u, cfg.p_r_max))
        return Constraint::relay_peak_power;
    if (!power_at_most(a.tau1 * a.p_a, cfg.p_a_avg()))
        return Constraint::ap_average_power;
    if (!power_at_most(a.tau1 * a.p_r_d + 0.5 * a.tau2 * a.p_r_u,
                       cfg.p_r_avg()))
        return Constraint::relay_average_power;
    return Constraint::none;
}

bool ec_feasible(const NetworkConfig& cfg, const EcAllocation& a) {
    return ec_violation(cfg, a) == Constraint::none;
}

bool dc_feasible(const NetworkConfig& cfg, const DcAllocation& a) {
    return dc_violation(cfg, a) == Constraint::none;
}

double harvested_energy(const NetworkConfig& cfg, const ChannelRealization& ch,
                        double p_a, double p_r_dl, double tau1) {
    return cfg.eta * tau1 * (p_a * ch.h_as + p_r_dl * ch.h_rs);
}

namespace detail {

double ec_throughput_unchecked(const NetworkConfig& cfg,
                               const ChannelRealization& ch,
                               const EcAllocation& a) {
    if (a.tau1 <= 0.0 || a.tau2 <= 0.0) return 0.0;
    const double snr = cfg.eta * a.tau1 *
                       (a.p_a * ch.h_as + a.p_r * ch.h_rs) * ch.h_sa /
                       (a.tau2 * cfg.noise_w());
    return a.tau2 * std::log2(1.0 + snr);
}

double dc_throughput_unchecked(const NetworkConfig& cfg,
                               const ChannelRealization& ch,
                               const DcAllocation& a) {
    if (a.tau1 <= 0.0 || a.tau2 <= 0.0) return 0.0;
    const DcSnrComponents s = dc_snr_components(cfg, ch, a);
    return 0.5 * a.tau2 * std::log2(1.0 + s.gamma_sa + s.gamma_sra);
}

} // namespace detail

double ec_throughput(const NetworkConfig& cfg, const ChannelRealization& ch,
                     const EcAllocation& a) {
    const Constraint v = ec_violation(cfg, a);
    if (v != Constraint::none)
        throw FeasibilityError(v, std::string("ec_throughput: infeasible "
                                              "allocation violates ") +
                                      to_string(v));
    return detail::ec_throughput_unchecked(cfg, ch, a);
}

DcSnrComponents dc_snr_components(const NetworkConfig& cfg,
                                  const ChannelRealization& ch,
                                  const DcAllocation& a) {
    DcSnrComponents s;
    if (a.tau2 <= 0.0) return s; // degenerate block: all SNRs zero
    const double n0 = cfg.noise_w();
    // The source spends its harvested energy in tau2/2, doubling the
    // effective power relative to the E-C uplink.
    const double harvested = 2.0 * cfg.eta * a.tau1 *
                             (a.p_a * ch.h_as + a.p_r_d * ch.h_rs) /
                             (a.tau2 * n0);
    s.gamma_sa = harvested * ch.h_sa;
    s.gamma_sr = harvested * ch.h_sr;
    s.gamma_ra = a.p_r_u * ch.h_ra / n0;
    s.gamma_sra =
        s.gamma_sr * s.gamma_ra / (s.gamma_sr + s.gamma_ra + 1.0);
    return s;
}

double dc_throughput(const NetworkConfig& cfg, const ChannelRealization& ch,
                     const DcAllocation& a) {
    const Constraint v = dc_violation(cfg, a);
    if (v != Constraint::none)
        throw FeasibilityError(v, std::string("dc_throughput: infeasible "
                                              "allocation violates ") +
                                      to_string(v));
    return detail::dc_throughput_unchecked(cfg, ch, a);
}

} // namespace wpcn
