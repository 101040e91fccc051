#include "wpcn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wpcn/kernels.hpp"

namespace wpcn {
namespace {

constexpr double kTol = kFeasibilityTol;

// Grid from 0 to hi whose round decimals land exactly: (j * hi) / (n - 1)
// reproduces values like 0.5 or the peak power bitwise, which lets grid
// optima coincide with closed-form optima instead of sitting an ulp away.
std::vector<double> linspace0(double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        v[static_cast<std::size_t>(j)] = (j * hi) / (n - 1);
    v.back() = hi;
    return v;
}

} // namespace

void GridSpec::validate() const {
    if (n_tau < 2 || n_power < 2)
        throw std::invalid_argument("GridSpec: need at least 2 points per axis");
    if (!(t_cap > 0.0))
        throw std::invalid_argument("GridSpec: t_cap must be positive");
}

EcOracleResult oracle_ec(const NetworkConfig& cfg,
                         const ChannelRealization& ch, const GridSpec& grid) {
    cfg.validate();
    grid.validate();

    const auto pa = linspace0(cfg.p_a_max, grid.n_power);
    const auto pr = linspace0(cfg.p_r_max, grid.n_power);
    const auto tau = linspace0(1.0, grid.n_tau);
    const double n0 = cfg.noise_w();
    const double pa_bound = cfg.p_a_avg() + kTol * cfg.p_a_avg();
    const double pr_bound = cfg.p_r_avg() + kTol * cfg.p_r_avg();
    const auto& kern = kernels::active_backend();

    double best = -1.0;
    std::size_t ba = 0, br = 0, b1 = 0, b2 = 0;
    for (std::size_t ia = 0; ia < pa.size(); ++ia) {
        for (std::size_t ir = 0; ir < pr.size(); ++ir) {
            const double hpow =
                cfg.eta * (pa[ia] * ch.h_as + pr[ir] * ch.h_rs) * ch.h_sa /
                n0;
            for (std::size_t i1 = 0; i1 < tau.size(); ++i1) {
                const double tau1 = tau[i1];
                if (tau1 * pa[ia] > pa_bound) continue;
                if (tau1 * pr[ir] > pr_bound) continue;
                // Largest feasible tau2 prefix under the time budget.
                const auto end = std::partition_point(
                    tau.begin(), tau.end(),
                    [&](double t2) { return tau1 + t2 <= 1.0 + kTol; });
                const auto m =
                    static_cast<std::int64_t>(end - tau.begin());
                if (m <= 0) continue;
                const kernels::RowBest rb =
                    kern.best_ec_row(hpow * tau1, tau.data(), m);
                if (rb.value > best) {
                    best = rb.value;
                    ba = ia;
                    br = ir;
                    b1 = i1;
                    b2 = static_cast<std::size_t>(rb.index);
                }
            }
        }
    }

    EcOracleResult out;
    out.alloc = EcAllocation{pa[ba], pr[br], tau[b1], tau[b2]};
    out.throughput = detail::ec_throughput_unchecked(cfg, ch, out.alloc);
    return out;
}

DcOracleResult oracle_dc(const NetworkConfig& cfg,
                         const ChannelRealization& ch, const GridSpec& grid) {
    cfg.validate();
    grid.validate();

    const auto pa = linspace0(cfg.p_a_max, grid.n_power);
    const auto prd = linspace0(cfg.p_r_max, grid.n_power);
    const auto pru = linspace0(cfg.p_r_max, grid.n_power);
    const auto tau = linspace0(1.0, grid.n_tau);
    const double n0 = cfg.noise_w();
    const double pa_bound = cfg.p_a_avg() + kTol * cfg.p_a_avg();
    const double pr_bound = cfg.p_r_avg() + kTol * cfg.p_r_avg();
    const auto& kern = kernels::active_backend();

    // gamma_ra depends only on p_r_u.
    std::vector<double> gra(pru.size());
    for (std::size_t j = 0; j < pru.size(); ++j)
        gra[j] = pru[j] * ch.h_ra / n0;

    double best = -1.0;
    std::size_t ba = 0, bd = 0, bu = 0, b1 = 0;
    for (std::size_t ia = 0; ia < pa.size(); ++ia) {
        for (std::size_t id = 0; id < prd.size(); ++id) {
            for (std::size_t i1 = 0; i1 < tau.size(); ++i1) {
                const double tau1 = tau[i1];
                if (tau1 * pa[ia] > pa_bound) continue;
                const double tau2 = 1.0 - tau1;
                const double half = 0.5 * tau2;
                const auto end = std::partition_point(
                    pru.begin(), pru.end(), [&](double p) {
                        return tau1 * prd[id] + half * p <= pr_bound;
                    });
                const auto m =
                    static_cast<std::int64_t>(end - pru.begin());
                if (m <= 0) continue;
                double gsa = 0.0, gsr = 0.0;
                if (tau2 > 0.0) {
                    const double harvested =
                        2.0 * cfg.eta * tau1 *
                        (pa[ia] * ch.h_as + prd[id] * ch.h_rs) /
                        (tau2 * n0);
                    gsa = harvested * ch.h_sa;
                    gsr = harvested * ch.h_sr;
                } // tau2 == 0: half == 0 makes the whole row zero
                const kernels::RowBest rb =
                    kern.best_dc_row(half, gsa, gsr, gra.data(), m);
                if (rb.value > best) {
                    best = rb.value;
                    ba = ia;
                    bd = id;
                    b1 = i1;
                    bu = static_cast<std::size_t>(rb.index);
                }
            }
        }
    }

    DcOracleResult out;
    out.alloc =
        DcAllocation{pa[ba], prd[bd], pru[bu], tau[b1], 1.0 - tau[b1]};
    out.throughput = detail::dc_throughput_unchecked(cfg, ch, out.alloc);
    return out;
}

ScanBest dense_scan_gamma_ratio(double a, double b, double c, double d,
                                double e, double t_lo, double t_hi,
                                int n_points) {
    if (n_points < 2)
        throw std::invalid_argument("dense_scan_gamma_ratio: n_points < 2");
    if (!(t_hi >= t_lo) || !std::isfinite(t_hi) || !std::isfinite(t_lo))
        throw std::invalid_argument("dense_scan_gamma_ratio: bad interval");

    const auto& kern = kernels::active_backend();
    constexpr std::int64_t kChunk = 4096;
    std::vector<double> ts(kChunk), gs(kChunk);

    ScanBest best{t_lo, -std::numeric_limits<double>::infinity()};
    std::int64_t done = 0;
    const auto total = static_cast<std::int64_t>(n_points);
    while (done < total) {
        const std::int64_t m = std::min(kChunk, total - done);
        for (std::int64_t j = 0; j < m; ++j) {
            const std::int64_t idx = done + j;
            ts[j] = (idx == total - 1)
                        ? t_hi
                        : t_lo + (idx * (t_hi - t_lo)) / (total - 1);
        }
        kern.gamma_ratio_scan(a, b, c, d, e, ts.data(), gs.data(), m);
        for (std::int64_t j = 0; j < m; ++j) {
            if (gs[j] > best.value) best = {ts[j], gs[j]};
        }
        done += m;
    }
    return best;
}

ScanBest dense_scan_gamma_ratio_refined(double a, double b, double c,
                                        double d, double e, double t_lo,
                                        double t_hi, int n_points,
                                        int stages) {
    ScanBest best = dense_scan_gamma_ratio(a, b, c, d, e, t_lo, t_hi,
                                           n_points);
    double step = (t_hi - t_lo) / (n_points - 1);
    for (int stage = 0; stage < stages; ++stage) {
        const double lo = std::max(t_lo, best.t - 2.0 * step);
        const double hi = std::min(t_hi, best.t + 2.0 * step);
        if (!(hi > lo)) break;
        const ScanBest zoom =
            dense_scan_gamma_ratio(a, b, c, d, e, lo, hi, n_points);
        if (zoom.value > best.value) best = zoom;
        step = (hi - lo) / (n_points - 1);
    }
    return best;
}

} // namespace wpcn
