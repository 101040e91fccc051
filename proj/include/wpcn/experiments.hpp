#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "wpcn/channel.hpp"

namespace wpcn {

enum class Protocol { EC = 0, DC = 1 };
const char* to_string(Protocol p);

enum class SweepKind { power, distance };

/// One Monte Carlo experiment. For a power sweep the swept values are
/// AP/relay average powers in watts (peaks derive as p_avg / mu); for a
/// distance sweep they are source-relay distances in meters, with the
/// average power taken from the base config (mu * p_max). Realization i
/// always uses fading draw (seed, i), for every protocol, mu, and sweep
/// value, so all curves are paired-sample comparable.
struct SweepSpec {
    SweepKind kind = SweepKind::power;
    std::vector<double> sweep_values; ///< strictly increasing
    std::vector<double> mu_values;
    NetworkConfig base;
    int n_realizations = 5000;
    std::uint64_t seed = 1;

    void validate() const;
};

struct SweepRow {
    double sweep_value = 0.0;
    double mu = 0.0;
    Protocol protocol = Protocol::EC;
    double mean_throughput = 0.0;
    double std_error = 0.0; ///< sample standard deviation / sqrt(n)
    int n = 0;
    std::uint64_t seed = 0;
};

/// Rows come back sorted by (protocol, mu, sweep_value). `workers` only
/// distributes the realizations; any worker count yields byte-identical
/// results (indexed accumulation, order-independent reduction).
std::vector<SweepRow> run_power_sweep(const SweepSpec& spec, int workers = 1);
std::vector<SweepRow> run_distance_sweep(const SweepSpec& spec,
                                         int workers = 1);

/// CSV with header sweep_value,mu,protocol,mean_throughput,std_error,n,seed
/// and floats printed to 17 significant digits (value-preserving).
void write_csv(const std::vector<SweepRow>& rows,
               const std::filesystem::path& path);

/// Inverse of write_csv, for round-trip checks and downstream tooling.
std::vector<SweepRow> read_csv(const std::filesystem::path& path);

} // namespace wpcn
