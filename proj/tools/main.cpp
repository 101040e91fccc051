// Command-line front end: single-realization optimization, Monte Carlo
// sweeps, and solver-vs-oracle validation.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpcn/experiments.hpp"
#include "wpcn/oracle.hpp"
#include "wpcn/solver_dc.hpp"
#include "wpcn/solver_ec.hpp"

namespace {

struct CommonOpts {
    double d_as = 10.0;
    double d_sr = 5.0;
    double alpha = 2.0;
    double eta = 0.5;
    double n0_dbm = -80.0;
    bool non_reciprocal = false;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOpts* o) {
    cmd->add_option("--d-as", o->d_as, "AP-source distance [m]")
        ->capture_default_str();
    cmd->add_option("--alpha", o->alpha, "path-loss exponent")
        ->capture_default_str();
    cmd->add_option("--eta", o->eta, "energy harvesting efficiency")
        ->capture_default_str();
    cmd->add_option("--n0-dbm", o->n0_dbm, "noise power [dBm]")
        ->capture_default_str();
    cmd->add_flag("--non-reciprocal", o->non_reciprocal,
                  "draw all five gains independently");
    cmd->add_option("--seed", o->seed, "RNG stream seed")
        ->capture_default_str();
}

wpcn::NetworkConfig base_config(const CommonOpts& o, double d_sr, double mu,
                                double p_avg) {
    wpcn::NetworkConfig cfg;
    cfg.d_as = o.d_as;
    cfg.d_sr = d_sr;
    cfg.alpha = o.alpha;
    cfg.eta = o.eta;
    cfg.n0_dbm = o.n0_dbm;
    cfg.reciprocal_channels = !o.non_reciprocal;
    cfg.mu = mu;
    cfg.p_a_max = p_avg / mu;
    cfg.p_r_max = p_avg / mu;
    cfg.validate();
    return cfg;
}

int run_optimize(const CommonOpts& o, double d_sr, double mu, double p_avg,
                 const std::string& protocol, std::uint64_t block_index) {
    const wpcn::NetworkConfig cfg = base_config(o, d_sr, mu, p_avg);
    const wpcn::ChannelRealization ch =
        wpcn::sample_realization(cfg, o.seed, block_index);

    std::printf("protocol: %s\n", protocol.c_str());
    std::printf("seed: %llu\n", static_cast<unsigned long long>(o.seed));
    std::printf("block_index: %llu\n",
                static_cast<unsigned long long>(block_index));
    std::printf("h_as: %.17g\nh_sa: %.17g\nh_rs: %.17g\nh_sr: %.17g\n"
                "h_ra: %.17g\n",
                ch.h_as, ch.h_sa, ch.h_rs, ch.h_sr, ch.h_ra);

    if (protocol == "ec") {
        const wpcn::EcOptimum opt = wpcn::optimize_ec(cfg, ch);
        std::printf("p_a: %.17g\np_r: %.17g\ntau1: %.17g\ntau2: %.17g\n",
                    opt.alloc.p_a, opt.alloc.p_r, opt.alloc.tau1,
                    opt.alloc.tau2);
        std::printf("z_star: %.17g\ncapped: %s\n", opt.z_star,
                    opt.capped ? "true" : "false");
        std::printf("throughput_bps_hz: %.17g\n", opt.throughput);
    } else {
        const wpcn::DcOptimum opt = wpcn::optimize_dc(cfg, ch);
        std::printf("p_a: %.17g\np_r_d: %.17g\np_r_u: %.17g\n"
                    "tau1: %.17g\ntau2: %.17g\n",
                    opt.alloc.p_a, opt.alloc.p_r_d, opt.alloc.p_r_u,
                    opt.alloc.tau1, opt.alloc.tau2);
        std::printf("case_id: %d\n", opt.inner.case_id);
        if (opt.inner.t_star)
            std::printf("t_star: %.17g\n", *opt.inner.t_star);
        std::printf("throughput_bps_hz: %.17g\n", opt.throughput);
    }
    return 0;
}

int run_validate(const CommonOpts& o, double d_sr, double mu, double p_avg,
                 int n, int grid_tau, int grid_power) {
    const wpcn::NetworkConfig cfg = base_config(o, d_sr, mu, p_avg);
    wpcn::GridSpec grid;
    grid.n_tau = grid_tau;
    grid.n_power = grid_power;

    const auto t0 = std::chrono::steady_clock::now();
    int failures = 0;
    double worst_ec_gap = 0.0;   // oracle - solver, should stay <= 0
    double worst_ec_snap = 0.0;  // on-grid re-evaluation shortfall
    double worst_dc_rel = 0.0;   // (oracle - solver) / oracle

    for (int i = 0; i < n; ++i) {
        const wpcn::ChannelRealization ch = wpcn::sample_realization(
            cfg, o.seed, static_cast<std::uint64_t>(i));

        const wpcn::EcOptimum ec = wpcn::optimize_ec(cfg, ch);
        const wpcn::EcOracleResult ec_or = wpcn::oracle_ec(cfg, ch, grid);
        worst_ec_gap = std::max(worst_ec_gap, ec_or.throughput - ec.throughput);
        if (ec.throughput < ec_or.throughput) {
            std::printf("FAIL ec realization %d: solver %.17g < oracle %.17g\n",
                        i, ec.throughput, ec_or.throughput);
            ++failures;
        }
        // Snap the analytic optimum onto the grid; the drop bounds how
        // far the solver may legitimately exceed the oracle.
        if (ec.throughput > 0.0) {
            const long j1 = std::lround(ec.alloc.tau1 * (grid.n_tau - 1));
            wpcn::EcAllocation snap = ec.alloc;
            snap.tau1 = (static_cast<double>(j1)) / (grid.n_tau - 1);
            snap.tau2 =
                (static_cast<double>(grid.n_tau - 1 - j1)) / (grid.n_tau - 1);
            const double t_snap = wpcn::ec_throughput(cfg, ch, snap);
            const double shortfall =
                (ec.throughput - t_snap) / ec.throughput;
            worst_ec_snap = std::max(worst_ec_snap, shortfall);
            if (shortfall > 1e-3) {
                std::printf("FAIL ec realization %d: grid snap drop %.3g\n",
                            i, shortfall);
                ++failures;
            }
        }

        const wpcn::DcOptimum dc = wpcn::optimize_dc(cfg, ch);
        const wpcn::DcOracleResult dc_or = wpcn::oracle_dc(cfg, ch, grid);
        const double rel =
            dc_or.throughput > 0.0
                ? (dc_or.throughput - dc.throughput) / dc_or.throughput
                : 0.0;
        worst_dc_rel = std::max(worst_dc_rel, rel);
        if (rel > 1e-3) {
            std::printf("FAIL dc realization %d: solver %.17g vs oracle "
                        "%.17g (rel gap %.3g)\n",
                        i, dc.throughput, dc_or.throughput, rel);
            ++failures;
        }

        if (ec.alloc.p_a != cfg.p_a_max || ec.alloc.p_r != cfg.p_r_max) {
            std::printf("FAIL ec realization %d: powers off peak\n", i);
            ++failures;
        }
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("validate: %d realizations in %.1f s\n", n, secs);
    std::printf("  ec: worst oracle-solver gap %.3g (<= 0 expected), worst "
                "grid-snap drop %.3g (limit 1e-3)\n",
                worst_ec_gap, worst_ec_snap);
    std::printf("  dc: worst relative gap %.3g (limit 1e-3)\n", worst_dc_rel);
    if (failures > 0) {
        std::printf("validate: %d failure(s)\n", failures);
        return 1;
    }
    std::printf("validate: all checks passed\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wireless-powered cooperative relay protocols: solvers, "
                 "oracles, Monte Carlo sweeps"};
    app.require_subcommand(1);

    // optimize
    auto* opt_cmd =
        app.add_subcommand("optimize", "optimize one channel realization");
    CommonOpts opt_common;
    std::string protocol;
    double opt_d_sr = 5.0, opt_mu = 0.5, opt_p_avg = 1.0;
    std::uint64_t block_index = 0;
    add_common(opt_cmd, &opt_common);
    opt_cmd->add_option("--protocol", protocol, "ec or dc")
        ->required()
        ->check(CLI::IsMember({"ec", "dc"}));
    opt_cmd->add_option("--d-sr", opt_d_sr, "source-relay distance [m]")
        ->capture_default_str();
    opt_cmd->add_option("--mu", opt_mu, "average-to-peak power ratio")
        ->capture_default_str();
    opt_cmd->add_option("--p-avg", opt_p_avg, "average transmit power [W]")
        ->capture_default_str();
    opt_cmd->add_option("--block-index", block_index, "fading block index")
        ->capture_default_str();

    // sweep-power
    auto* sp_cmd = app.add_subcommand(
        "sweep-power", "mean throughput vs average power (CSV)");
    CommonOpts sp_common;
    double sp_d_sr = 5.0;
    std::vector<double> sp_p{0.05, 0.1, 0.2, 0.4, 0.8, 1.2, 1.6, 2.0, 3.0, 5.0};
    std::vector<double> sp_mu{0.35, 0.5, 0.8};
    int sp_n = 5000, sp_workers = 1;
    std::string sp_out;
    add_common(sp_cmd, &sp_common);
    sp_cmd->add_option("--d-sr", sp_d_sr, "source-relay distance [m]")
        ->capture_default_str();
    sp_cmd->add_option("--p-avg", sp_p, "swept average powers [W]")
        ->capture_default_str();
    sp_cmd->add_option("--mu", sp_mu, "average-to-peak ratios")
        ->capture_default_str();
    sp_cmd->add_option("--realizations", sp_n, "Monte Carlo realizations")
        ->capture_default_str();
    sp_cmd->add_option("--workers", sp_workers, "worker threads")
        ->capture_default_str();
    sp_cmd->add_option("--out", sp_out, "output CSV path")->required();

    // sweep-distance
    auto* sd_cmd = app.add_subcommand(
        "sweep-distance", "mean throughput vs relay position (CSV)");
    CommonOpts sd_common;
    std::vector<double> sd_d{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<double> sd_mu{0.5};
    double sd_p_avg = 2.0;
    int sd_n = 5000, sd_workers = 1;
    std::string sd_out;
    add_common(sd_cmd, &sd_common);
    sd_cmd->add_option("--d-sr", sd_d, "swept source-relay distances [m]")
        ->capture_default_str();
    sd_cmd->add_option("--mu", sd_mu, "average-to-peak ratios")
        ->capture_default_str();
    sd_cmd->add_option("--p-avg", sd_p_avg, "average transmit power [W]")
        ->capture_default_str();
    sd_cmd->add_option("--realizations", sd_n, "Monte Carlo realizations")
        ->capture_default_str();
    sd_cmd->add_option("--workers", sd_workers, "worker threads")
        ->capture_default_str();
    sd_cmd->add_option("--out", sd_out, "output CSV path")->required();

    // validate
    auto* val_cmd = app.add_subcommand(
        "validate", "check solvers against the brute-force oracles");
    CommonOpts val_common;
    double val_d_sr = 5.0, val_mu = 0.5, val_p_avg = 1.0;
    int val_n = 200, val_grid_tau = 101, val_grid_power = 41;
    add_common(val_cmd, &val_common);
    val_cmd->add_option("--d-sr", val_d_sr, "source-relay distance [m]")
        ->capture_default_str();
    val_cmd->add_option("--mu", val_mu, "average-to-peak power ratio")
        ->capture_default_str();
    val_cmd->add_option("--p-avg", val_p_avg, "average transmit power [W]")
        ->capture_default_str();
    val_cmd->add_option("--n", val_n, "number of seeded realizations")
        ->capture_default_str();
    val_cmd->add_option("--grid-tau", val_grid_tau, "oracle time-axis points")
        ->capture_default_str();
    val_cmd->add_option("--grid-power", val_grid_power,
                        "oracle power-axis points")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*opt_cmd)
            return run_optimize(opt_common, opt_d_sr, opt_mu, opt_p_avg,
                                protocol, block_index);

        if (*sp_cmd) {
            wpcn::SweepSpec spec;
            spec.kind = wpcn::SweepKind::power;
            spec.sweep_values = sp_p;
            std::sort(spec.sweep_values.begin(), spec.sweep_values.end());
            spec.mu_values = sp_mu;
            spec.base = base_config(sp_common, sp_d_sr, sp_mu.front(),
                                    sp_p.front());
            spec.n_realizations = sp_n;
            spec.seed = sp_common.seed;
            wpcn::write_csv(wpcn::run_power_sweep(spec, sp_workers), sp_out);
            std::printf("wrote %s\n", sp_out.c_str());
            return 0;
        }

        if (*sd_cmd) {
            wpcn::SweepSpec spec;
            spec.kind = wpcn::SweepKind::distance;
            spec.sweep_values = sd_d;
            std::sort(spec.sweep_values.begin(), spec.sweep_values.end());
            spec.mu_values = sd_mu;
            spec.base = base_config(sd_common, sd_d.front(), sd_mu.front(),
                                    sd_p_avg);
            spec.n_realizations = sd_n;
            spec.seed = sd_common.seed;
            wpcn::write_csv(wpcn::run_distance_sweep(spec, sd_workers),
                            sd_out);
            std::printf("wrote %s\n", sd_out.c_str());
            return 0;
        }

        if (*val_cmd)
            return run_validate(val_common, val_d_sr, val_mu, val_p_avg,
                                val_n, val_grid_tau, val_grid_power);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 1;
    }
    return 0;
}
