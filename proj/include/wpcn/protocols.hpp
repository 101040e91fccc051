#pragma once

#include <stdexcept>
#include <string>

#include "wpcn/channel.hpp"

namespace wpcn {

/// Decision variables of the energy-cooperation protocol: the AP and
/// relay transmit at p_a / p_r for the tau1 downlink fraction, then the
/// source transmits alone for the tau2 uplink fraction.
struct EcAllocation {
    double p_a = 0.0;
    double p_r = 0.0;
    double tau1 = 0.0;
    double tau2 = 0.0;
};

/// Decision variables of the dual-cooperation protocol. The relay powers
/// the downlink at p_r_d, then amplifies-and-forwards the source's uplink
/// signal at p_r_u during the second half of tau2.
struct DcAllocation {
    double p_a = 0.0;
    double p_r_d = 0.0;
    double p_r_u = 0.0;
    double tau1 = 0.0;
    double tau2 = 0.0;
};

enum class Constraint {
    none,
    non_negative,
    time_budget,
    ap_peak_power,
    relay_peak_power,
    ap_average_power,
    relay_average_power,
};

const char* to_string(Constraint c);

/// Feasibility comparisons accept this much slack: absolute on time
/// fractions, relative on powers. Solver outputs sit exactly on
/// constraint boundaries; exact comparison would reject valid optima.
inline constexpr double kFeasibilityTol = 1e-9;

class FeasibilityError : public std::runtime_error {
public:
    FeasibilityError(Constraint violated, const std::string& what)
        : std::runtime_error(what), violated_(violated) {}
    Constraint violated() const { return violated_; }

private:
    Constraint violated_;
};

/// First violated constraint, or Constraint::none when feasible.
Constraint ec_violation(const NetworkConfig& cfg, const EcAllocation& a);
Constraint dc_violation(const NetworkConfig& cfg, const DcAllocation& a);

bool ec_feasible(const NetworkConfig& cfg, const EcAllocation& a);
bool dc_feasible(const NetworkConfig& cfg, const DcAllocation& a);

/// Energy harvested by the source over the downlink phase (block length
/// normalized to 1): eta * tau1 * (p_a * h_as + p_r_dl * h_rs).
double harvested_energy(const NetworkConfig& cfg, const ChannelRealization& ch,
                        double p_a, double p_r_dl, double tau1);

/// Throughput of the E-C protocol in bps/Hz. Zero when tau1 or tau2 is
/// zero (the x*log(1 + c/x) limit). Throws FeasibilityError on an
/// infeasible allocation.
double ec_throughput(const NetworkConfig& cfg, const ChannelRealization& ch,
                     const EcAllocation& a);

struct DcSnrComponents {
    double gamma_sa = 0.0;  ///< direct source->AP link
    double gamma_sr = 0.0;  ///< source->relay link
    double gamma_ra = 0.0;  ///< relay->AP link
    double gamma_sra = 0.0; ///< amplify-and-forward two-hop equivalent
};

/// The four SNRs of the D-C protocol. The source empties its battery in
/// tau2/2, hence the factor 2 in gamma_sa and gamma_sr. All zero when
/// tau2 == 0.
DcSnrComponents dc_snr_components(const NetworkConfig& cfg,
                                  const ChannelRealization& ch,
                                  const DcAllocation& a);

/// Throughput of the D-C protocol in bps/Hz: the direct and relayed
/// copies combine by MRC, and only tau2/2 carries new information.
/// Throws FeasibilityError on an infeasible allocation.
double dc_throughput(const NetworkConfig& cfg, const ChannelRealization& ch,
                     const DcAllocation& a);

namespace detail {
// Evaluation without the feasibility gate; used by grid search internals
// that pre-filter points with the exact same comparisons.
double ec_throughput_unchecked(const NetworkConfig& cfg,
                               const ChannelRealization& ch,
                               const EcAllocation& a);
double dc_throughput_unchecked(const NetworkConfig& cfg,
                               const ChannelRealization& ch,
                               const DcAllocation& a);
} // namespace detail

} // namespace wpcn
