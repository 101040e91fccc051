#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wpcn/experiments.hpp"
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

SweepSpec small_power_spec(int n) {
    SweepSpec spec;
    spec.kind = SweepKind::power;
    spec.sweep_values = {0.1, 0.4, 1.0, 2.0};
    spec.mu_values = {0.35, 0.5, 0.8};
    spec.base = paper_config();
    spec.n_realizations = n;
    spec.seed = 99;
    return spec;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const SweepRow& find_row(const std::vector<SweepRow>& rows, Protocol proto,
                         double mu, double value) {
    for (const auto& r : rows)
        if (r.protocol == proto && r.mu == mu && r.sweep_value == value)
            return r;
    REQUIRE(false);
    return rows.front();
}

} // namespace

TEST_CASE("csv writing: header, order, round trip") {
    const auto path = std::filesystem::temp_directory_path() /
                      "wpcn_test_roundtrip.csv";

    write_csv({}, path);
    CHECK(slurp(path) ==
          "sweep_value,mu,protocol,mean_throughput,std_error,n,seed\n");

    std::vector<SweepRow> rows;
    rows.push_back(SweepRow{5.0, 0.5, Protocol::DC, 1.25, 0.01, 10, 7});
    rows.push_back(SweepRow{1.0, 0.5, Protocol::EC, 0.7312345678901234,
                            0.002, 10, 7});
    rows.push_back(SweepRow{1.0, 0.35, Protocol::EC, 2.0 / 3.0, 0.1, 10, 7});
    write_csv(rows, path);

    const auto back = read_csv(path);
    REQUIRE(back.size() == 3);
    // sorted by (protocol, mu, sweep_value)
    CHECK(back[0].protocol == Protocol::EC);
    CHECK(back[0].mu == 0.35);
    CHECK(back[1].protocol == Protocol::EC);
    CHECK(back[1].mu == 0.5);
    CHECK(back[2].protocol == Protocol::DC);
    // 17 significant digits reproduce doubles exactly
    CHECK(back[1].mean_throughput == 0.7312345678901234);
    CHECK(back[0].mean_throughput == 2.0 / 3.0);
    CHECK(back[2].seed == 7);
    std::filesystem::remove(path);
}

TEST_CASE("single-realization sweep equals the raw solver output") {
    SweepSpec spec = small_power_spec(1);
    spec.sweep_values = {1.0};
    spec.mu_values = {0.5};
    const auto rows = run_power_sweep(spec);
    REQUIRE(rows.size() == 2);

    NetworkConfig cfg = spec.base;
    cfg.mu = 0.5;
    cfg.p_a_max = 2.0;
    cfg.p_r_max = 2.0;
    const ChannelRealization ch = sample_realization(cfg, spec.seed, 0);
    CHECK(find_row(rows, Protocol::EC, 0.5, 1.0).mean_throughput ==
          optimize_ec(cfg, ch).throughput);
    CHECK(find_row(rows, Protocol::DC, 0.5, 1.0).mean_throughput ==
          optimize_dc(cfg, ch).throughput);
    CHECK(rows[0].std_error == 0.0);
    CHECK(rows[0].n == 1);
}

TEST_CASE("sweeps are byte-identical across runs and worker counts") {
    const SweepSpec spec = small_power_spec(60);
    const auto p1 = std::filesystem::temp_directory_path() / "wpcn_w1.csv";
    const auto p2 = std::filesystem::temp_directory_path() / "wpcn_w4.csv";
    write_csv(run_power_sweep(spec, 1), p1);
    write_csv(run_power_sweep(spec, 4), p2);
    CHECK(slurp(p1) == slurp(p2));

    write_csv(run_power_sweep(spec, 3), p2);
    CHECK(slurp(p1) == slurp(p2));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("paired sampling makes budget monotonicity exact") {
    // A larger average budget (same mu) or a smaller mu (same budget)
    // enlarges the feasible set realization by realization, so with
    // paired draws even small-n means are ordered.
    const auto rows = run_power_sweep(small_power_spec(40));
    for (const Protocol proto : {Protocol::EC, Protocol::DC}) {
        for (const double mu : {0.35, 0.5, 0.8}) {
            double prev = -1.0;
            for (const double p : {0.1, 0.4, 1.0, 2.0}) {
                const double m =
                    find_row(rows, proto, mu, p).mean_throughput;
                CHECK(m >= prev - 1e-12);
                prev = m;
            }
        }
        for (const double p : {0.1, 0.4, 1.0, 2.0}) {
            const double loose =
                find_row(rows, proto, 0.35, p).mean_throughput;
            const double mid = find_row(rows, proto, 0.5, p).mean_throughput;
            const double tight =
                find_row(rows, proto, 0.8, p).mean_throughput;
            CHECK(tight <= mid + 1e-12);
            CHECK(mid <= loose + 1e-12);
        }
    }
}

TEST_CASE("standard errors match a direct recomputation") {
    SweepSpec spec = small_power_spec(25);
    spec.sweep_values = {1.0};
    spec.mu_values = {0.5};
    const auto rows = run_power_sweep(spec);

    NetworkConfig cfg = spec.base;
    cfg.mu = 0.5;
    cfg.p_a_max = 2.0;
    cfg.p_r_max = 2.0;
    double sum = 0.0;
    std::vector<double> vals;
    for (int i = 0; i < spec.n_realizations; ++i) {
        const ChannelRealization ch =
            sample_realization(cfg, spec.seed, static_cast<std::uint64_t>(i));
        vals.push_back(optimize_ec(cfg, ch).throughput);
        sum += vals.back();
    }
    const double mean = sum / spec.n_realizations;
    double ss = 0.0;
    for (const double v : vals) ss += (v - mean) * (v - mean);
    const double se = std::sqrt(ss / (spec.n_realizations - 1)) /
                      std::sqrt(static_cast<double>(spec.n_realizations));

    const SweepRow& row = find_row(rows, Protocol::EC, 0.5, 1.0);
    CHECK(row.mean_throughput == doctest::Approx(mean).epsilon(1e-14));
    CHECK(row.std_error == doctest::Approx(se).epsilon(1e-12));
}

TEST_CASE("distance sweeps share fading across positions") {
    SweepSpec spec;
    spec.kind = SweepKind::distance;
    spec.sweep_values = {2.0, 5.0, 8.0};
    spec.mu_values = {0.5};
    spec.base = paper_config();
    spec.n_realizations = 30;
    spec.seed = 11;
    const auto rows = run_distance_sweep(spec);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK(r.mean_throughput >= 0.0);
        CHECK(r.n == 30);
    }

    // Both protocols prefer the relay near the source.
    for (const Protocol proto : {Protocol::EC, Protocol::DC}) {
        const double near = find_row(rows, proto, 0.5, 2.0).mean_throughput;
        const double far = find_row(rows, proto, 0.5, 8.0).mean_throughput;
        CHECK(near > far);
    }
}

TEST_CASE("spec validation") {
    SweepSpec spec = small_power_spec(10);
    CHECK_NOTHROW(spec.validate());

    SweepSpec bad = spec;
    bad.sweep_values = {1.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = spec;
    bad.sweep_values.clear();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = spec;
    bad.n_realizations = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = spec;
    bad.mu_values = {0.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = spec;
    bad.kind = SweepKind::distance;
    bad.sweep_values = {5.0, 10.0}; // touches d_as
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    CHECK_THROWS_AS(run_power_sweep(bad), std::invalid_argument);
}
