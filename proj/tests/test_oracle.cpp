#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wpcn/oracle.hpp"
#include "wpcn/solver_dc.hpp"
#include "wpcn/solver_ec.hpp"

using namespace wpcn;

namespace {

NetworkConfig paper_config() {
    NetworkConfig cfg;
    cfg.d_as = 10.0;
    cfg.d_sr = 5.0;
    cfg.alpha = 2.0;
    cfg.eta = 0.5;
    cfg.n0_dbm = -80.0;
    cfg.p_a_max = 2.0;
    cfg.p_r_max = 2.0;
    cfg.mu = 0.5;
    return cfg;
}

GridSpec small_grid(int n_tau, int n_power) {
    GridSpec g;
    g.n_tau = n_tau;
    g.n_power = n_power;
    return g;
}

// Reference implementation straight off the public evaluators, no
// kernels, no hoisting.
EcOracleResult naive_oracle_ec(const NetworkConfig& cfg,
                               const ChannelRealization& ch,
                               const GridSpec& grid) {
    EcOracleResult best;
    best.throughput = -1.0;
    for (int ia = 0; ia < grid.n_power; ++ia) {
        for (int ir = 0; ir < grid.n_power; ++ir) {
            for (int i1 = 0; i1 < grid.n_tau; ++i1) {
                for (int i2 = 0; i2 < grid.n_tau; ++i2) {
                    const EcAllocation a{
                        (ia * cfg.p_a_max) / (grid.n_power - 1),
                        (ir * cfg.p_r_max) / (grid.n_power - 1),
                        (i1 * 1.0) / (grid.n_tau - 1),
                        (i2 * 1.0) / (grid.n_tau - 1)};
                    if (!ec_feasible(cfg, a)) continue;
                    const double v = ec_throughput(cfg, ch, a);
                    if (v > best.throughput) best = {a, v};
                }
            }
        }
    }
    return best;
}

DcOracleResult naive_oracle_dc(const NetworkConfig& cfg,
                               const ChannelRealization& ch,
                               const GridSpec& grid) {
    DcOracleResult best;
    best.throughput = -1.0;
    for (int ia = 0; ia < grid.n_power; ++ia) {
        for (int id = 0; id < grid.n_power; ++id) {
            for (int i1 = 0; i1 < grid.n_tau; ++i1) {
                for (int iu = 0; iu < grid.n_power; ++iu) {
                    const double tau1 = (i1 * 1.0) / (grid.n_tau - 1);
                    const DcAllocation a{
                        (ia * cfg.p_a_max) / (grid.n_power - 1),
                        (id * cfg.p_r_max) / (grid.n_power - 1),
                        (iu * cfg.p_r_max) / (grid.n_power - 1), tau1,
                        1.0 - tau1};
                    if (!dc_feasible(cfg, a)) continue;
                    const double v = dc_throughput(cfg, ch, a);
                    if (v > best.throughput) best = {a, v};
                }
            }
        }
    }
    return best;
}

} // namespace

TEST_CASE("zero-gain channels yield the first grid point") {
    const NetworkConfig cfg = paper_config();
    const ChannelRealization dead{};
    const GridSpec g = small_grid(11, 9);

    const EcOracleResult ec = oracle_ec(cfg, dead, g);
    CHECK(ec.throughput == 0.0);
    CHECK(ec.alloc.p_a == 0.0);
    CHECK(ec.alloc.p_r == 0.0);
    CHECK(ec.alloc.tau1 == 0.0);
    CHECK(ec.alloc.tau2 == 0.0);

    const DcOracleResult dc = oracle_dc(cfg, dead, g);
    CHECK(dc.throughput == 0.0);
    CHECK(dc.alloc.p_a == 0.0);
    CHECK(dc.alloc.tau1 == 0.0);
}

TEST_CASE("oracles match the naive reference search") {
    const NetworkConfig cfg = paper_config();
    for (std::uint64_t i = 0; i < 5; ++i) {
        const ChannelRealization ch = sample_realization(cfg, 1000, i);

        const GridSpec ge = small_grid(21, 9);
        const EcOracleResult fast = oracle_ec(cfg, ch, ge);
        const EcOracleResult ref = naive_oracle_ec(cfg, ch, ge);
        CHECK(fast.alloc.p_a == ref.alloc.p_a);
        CHECK(fast.alloc.p_r == ref.alloc.p_r);
        CHECK(fast.alloc.tau1 == ref.alloc.tau1);
        CHECK(fast.alloc.tau2 == ref.alloc.tau2);
        CHECK(fast.throughput ==
              doctest::Approx(ref.throughput).epsilon(1e-12));

        const GridSpec gd = small_grid(13, 7);
        const DcOracleResult dfast = oracle_dc(cfg, ch, gd);
        const DcOracleResult dref = naive_oracle_dc(cfg, ch, gd);
        CHECK(dfast.alloc.p_a == dref.alloc.p_a);
        CHECK(dfast.alloc.p_r_d == dref.alloc.p_r_d);
        CHECK(dfast.alloc.p_r_u == dref.alloc.p_r_u);
        CHECK(dfast.alloc.tau1 == dref.alloc.tau1);
        CHECK(dfast.throughput ==
              doctest::Approx(dref.throughput).epsilon(1e-12));
    }
}

TEST_CASE("nested grids never lose throughput") {
    const NetworkConfig cfg = paper_config();
    for (std::uint64_t i = 0; i < 3; ++i) {
        const ChannelRealization ch = sample_realization(cfg, 2000, i);
        // 2n-1 point grids contain the n point grids.
        double prev_ec = -1.0, prev_dc = -1.0;
        for (const auto [nt, np] : {std::pair{11, 5},
                                    std::pair{21, 9},
                                    std::pair{41, 17}}) {
            const GridSpec g = small_grid(nt, np);
            const double ec = oracle_ec(cfg, ch, g).throughput;
            const double dc = oracle_dc(cfg, ch, g).throughput;
            CHECK(ec >= prev_ec);
            CHECK(dc >= prev_dc);
            prev_ec = ec;
            prev_dc = dc;
        }
    }
}

TEST_CASE("oracle runs are deterministic") {
    const NetworkConfig cfg = paper_config();
    const ChannelRealization ch = sample_realization(cfg, 3000, 1);
    const GridSpec g = small_grid(21, 9);
    const EcOracleResult a = oracle_ec(cfg, ch, g);
    const EcOracleResult b = oracle_ec(cfg, ch, g);
    CHECK(a.throughput == b.throughput);
    CHECK(a.alloc.tau1 == b.alloc.tau1);
    const DcOracleResult c = oracle_dc(cfg, ch, g);
    const DcOracleResult d = oracle_dc(cfg, ch, g);
    CHECK(c.throughput == d.throughput);
    CHECK(c.alloc.p_r_u == d.alloc.p_r_u);
}

TEST_CASE("grid optima confirm the analytic reductions") {
    // Full-space search lands next to tau1 + tau2 = 1 and peak powers.
    const NetworkConfig cfg = paper_config();
    const GridSpec g = small_grid(41, 21);
    const double tau_step = 1.0 / (g.n_tau - 1);
    const double pow_step = cfg.p_a_max / (g.n_power - 1);
    for (std::uint64_t i = 0; i < 5; ++i) {
        const ChannelRealization ch = sample_realization(cfg, 4000, i);
        const EcOracleResult ec = oracle_ec(cfg, ch, g);
        CHECK(ec.alloc.tau1 + ec.alloc.tau2 >= 1.0 - tau_step - 1e-12);
        CHECK(ec.alloc.tau1 + ec.alloc.tau2 <= 1.0 + 1e-12);
        CHECK(ec.alloc.p_a >= cfg.p_a_max - pow_step - 1e-12);
        CHECK(ec.alloc.p_r >= cfg.p_r_max - pow_step - 1e-12);
    }
}

TEST_CASE("tau2 saturation dominates pointwise (5-D spot check)") {
    // For every feasible 5-D point, sliding tau2 up to 1 - tau1 while
    // keeping the energies fixed is feasible and at least as good; this
    // is the reduction the 4-D oracle builds on.
    const NetworkConfig cfg = paper_config();
    const ChannelRealization ch = sample_realization(cfg, 5000, 2);
    const int np = 7, nt = 9;
    for (int ia = 0; ia < np; ++ia)
        for (int id = 0; id < np; ++id)
            for (int iu = 0; iu < np; ++iu)
                for (int i1 = 0; i1 < nt; ++i1)
                    for (int i2 = 0; i2 < nt; ++i2) {
                        const double tau1 = (i1 * 1.0) / (nt - 1);
                        const double tau2 = (i2 * 1.0) / (nt - 1);
                        const DcAllocation a{
                            (ia * cfg.p_a_max) / (np - 1),
                            (id * cfg.p_r_max) / (np - 1),
                            (iu * cfg.p_r_max) / (np - 1), tau1, tau2};
                        if (!dc_feasible(cfg, a)) continue;
                        if (tau2 == 0.0) continue;
                        const double tau2_full = 1.0 - tau1;
                        DcAllocation b = a;
                        b.tau2 = tau2_full;
                        // same uplink energy, spread over the longer slot
                        b.p_r_u = a.p_r_u * tau2 / tau2_full;
                        REQUIRE(dc_feasible(cfg, b));
                        CHECK(dc_throughput(cfg, ch, b) >=
                              dc_throughput(cfg, ch, a) - 1e-12);
                    }
}

TEST_CASE("solvers dominate their oracles on sampled realizations") {
    const NetworkConfig cfg = paper_config();
    const GridSpec g; // default 101/41
    for (std::uint64_t i = 0; i < 10; ++i) {
        const ChannelRealization ch = sample_realization(cfg, 6000, i);
        const EcOptimum ec = optimize_ec(cfg, ch);
        const EcOracleResult eor = oracle_ec(cfg, ch, g);
        CHECK(ec.throughput >= eor.throughput);

        const DcOptimum dc = optimize_dc(cfg, ch);
        const DcOracleResult dor = oracle_dc(cfg, ch, g);
        CHECK(dc.throughput >= dor.throughput * (1.0 - 1e-3));
    }
}

TEST_CASE("dense scan matches a direct loop") {
    const QuadraticCoeffs q = make_quadratic(2.0, 30.0, 0.7, 4.0, 11.0);
    const ScanBest scan =
        dense_scan_gamma_ratio(q.a, q.b, q.c, q.d, q.e, 0.5, 9.5, 1001);

    double best_v = -1.0, best_t = 0.0;
    for (int j = 0; j < 1001; ++j) {
        const double t = 0.5 + (j * 9.0) / 1000;
        const double g = gamma_ratio(q, t);
        if (g > best_v) {
            best_v = g;
            best_t = t;
        }
    }
    CHECK(scan.value == doctest::Approx(best_v).epsilon(1e-13));
    CHECK(scan.t == doctest::Approx(best_t).epsilon(1e-12));

    CHECK_THROWS_AS(dense_scan_gamma_ratio(1, 1, 1, 1, 1, 0.0, 1.0, 1),
                    std::invalid_argument);
    GridSpec bad;
    bad.n_tau = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
