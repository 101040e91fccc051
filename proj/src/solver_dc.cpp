#include "wpcn/solver_dc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wpcn {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCaseEps = 1e-12; // slack on case-range checks

// SNR-scale constants of the relay-split problem for a given AP downlink
// energy. b, d, e always carry the full relay average budget.
QuadraticCoeffs case_coeffs(const NetworkConfig& cfg,
                            const ChannelRealization& ch, double tau1,
                            double e_a) {
    const double denom = (1.0 - tau1) * cfg.noise_w();
    const double k = 2.0 * cfg.eta / denom;
    const double pr_avg = cfg.p_r_avg();
    return make_quadratic(k * e_a * ch.h_as * ch.h_sa,
                          k * pr_avg * ch.h_rs * ch.h_sa,
                          k * e_a * ch.h_as * ch.h_sr,
                          k * pr_avg * ch.h_rs * ch.h_sr,
                          2.0 * pr_avg * ch.h_ra / denom);
}

// Upper ratio bound from the relay uplink peak constraint; +inf when the
// peak can never bind.
double ratio_upper_bound(double mu, double tau1) {
    const double denom = 2.0 * mu - 1.0 + tau1;
    return denom > 0.0 ? (1.0 - tau1) / denom : kInf;
}

// Splits the relay average budget at ratio t (t may be +inf).
void split_relay_budget(double pr_avg, double t, double* e_r_d,
                        double* e_r_u) {
    if (std::isinf(t)) {
        *e_r_d = 0.0;
        *e_r_u = pr_avg;
    } else {
        *e_r_d = pr_avg / (t + 1.0);
        *e_r_u = t * pr_avg / (t + 1.0);
    }
}

} // namespace

QuadraticCoeffs make_quadratic(double a, double b, double c, double d,
                               double e) {
    QuadraticCoeffs q;
    q.a = a;
    q.b = b;
    q.c = c;
    q.d = d;
    q.e = e;
    const double s1 = c + e + 1.0;
    const double s2 = c + d + 1.0;
    q.A = c * e * (c + 1.0) - b * s1 * s1 - d * e * (e + 1.0);
    q.B = 2.0 * s2 * (c * e - b * s1);
    q.C = s2 * (e * (c + d) - b * s2);
    q.delta = q.B * q.B - 4.0 * q.A * q.C;
    return q;
}

double gamma_ratio(const QuadraticCoeffs& q, double t) {
    const double u = 1.0 / (t + 1.0);
    const double w = t * u;
    const double g1 = q.c + q.d * u;
    const double g2 = q.e * w;
    return (q.a + q.b * u) + g1 * g2 / (g1 + g2 + 1.0);
}

double gamma_ratio_limit(const QuadraticCoeffs& q) {
    return q.a + q.c * q.e / (q.c + q.e + 1.0);
}

TBest maximize_gamma_ratio(const QuadraticCoeffs& q, double t_lo,
                           double t_hi) {
    std::array<double, 4> cand{};
    int nc = 0;
    auto push = [&](double t) {
        if (std::isfinite(t) && t >= t_lo && t <= t_hi) cand[nc++] = t;
    };

    cand[nc++] = t_lo;
    if (q.A == 0.0) {
        if (q.B != 0.0) push(-q.C / q.B);
    } else if (q.delta >= 0.0) {
        // Citardauq pairing keeps the small root accurate when |4AC| <<
        // B^2.
        const double sq = std::sqrt(q.delta);
        const double qq = -0.5 * (q.B + std::copysign(sq, q.B));
        push(qq / q.A);
        if (qq != 0.0) push(q.C / qq);
    }
    if (std::isfinite(t_hi)) push(t_hi);

    std::sort(cand.begin(), cand.begin() + nc);

    TBest best{cand[0], gamma_ratio(q, cand[0])};
    for (int i = 1; i < nc; ++i) {
        const double g = gamma_ratio(q, cand[i]);
        if (g > best.gamma) best = {cand[i], g};
    }
    if (std::isinf(t_hi)) {
        const double g = gamma_ratio_limit(q);
        if (g > best.gamma) best = {kInf, g};
    }
    return best;
}

double dc_objective_from_energies(const NetworkConfig& cfg,
                                  const ChannelRealization& ch, double tau1,
                                  double e_a, double e_r_d, double e_r_u) {
    if (tau1 <= 0.0 || tau1 >= 1.0) return 0.0;
    const double tau2 = 1.0 - tau1;
    const double scale = 2.0 / (tau2 * cfg.noise_w());
    const double harvested =
        cfg.eta * (e_a * ch.h_as + e_r_d * ch.h_rs) * scale;
    const double gsa = harvested * ch.h_sa;
    const double gsr = harvested * ch.h_sr;
    const double gra = e_r_u * ch.h_ra * scale;
    const double gsra = gsr * gra / (gsr + gra + 1.0);
    return 0.5 * tau2 * std::log2(1.0 + gsa + gsra);
}

DcInnerSolution dc_inner_case1(const NetworkConfig& cfg,
                               const ChannelRealization& ch, double tau1) {
    if (cfg.mu < 0.5 || tau1 < -kCaseEps ||
        tau1 > 2.0 * cfg.mu - 1.0 + kCaseEps)
        throw std::domain_error(
            "dc_inner_case1: tau1 outside [0, 2 mu - 1]");

    // Neither average budget can bind here, so every energy rides its
    // peak bound.
    DcInnerSolution s;
    s.case_id = 1;
    s.e_a = tau1 * cfg.p_a_max;
    s.e_r_d = tau1 * cfg.p_r_max;
    s.e_r_u = 0.5 * (1.0 - tau1) * cfg.p_r_max;
    s.objective =
        dc_objective_from_energies(cfg, ch, tau1, s.e_a, s.e_r_d, s.e_r_u);
    return s;
}

DcInnerSolution dc_inner_case2(const NetworkConfig& cfg,
                               const ChannelRealization& ch, double tau1) {
    const double mu = cfg.mu;
    if (tau1 < std::max(0.0, 2.0 * mu - 1.0) - kCaseEps ||
        tau1 > mu + kCaseEps)
        throw std::domain_error(
            "dc_inner_case2: tau1 outside [max(0, 2 mu - 1), mu]");

    DcInnerSolution s;
    s.case_id = 2;
    if (tau1 <= 0.0) return s; // lower ratio bound diverges: no energy

    s.e_a = tau1 * cfg.p_a_max;
    const QuadraticCoeffs q = case_coeffs(cfg, ch, tau1, s.e_a);
    const double t_lo = std::max(0.0, (mu - tau1) / tau1);
    // The bounds coincide at the case-1 boundary; rounding may cross
    // them by an ulp.
    const double t_hi = std::max(ratio_upper_bound(mu, tau1), t_lo);

    const TBest best = maximize_gamma_ratio(q, t_lo, t_hi);
    s.t_star = best.t;
    split_relay_budget(cfg.p_r_avg(), best.t, &s.e_r_d, &s.e_r_u);
    s.objective =
        dc_objective_from_energies(cfg, ch, tau1, s.e_a, s.e_r_d, s.e_r_u);
    return s;
}

DcInnerSolution dc_inner_case3(const NetworkConfig& cfg,
                               const ChannelRealization& ch, double tau1) {
    if (tau1 < cfg.mu - kCaseEps || tau1 > 1.0 + kCaseEps)
        throw std::domain_error("dc_inner_case3: tau1 outside (mu, 1]");

    DcInnerSolution s;
    s.case_id = 3;
    s.e_a = cfg.p_a_avg();
    if (tau1 >= 1.0) {
        // No uplink time left; relay split is immaterial.
        s.e_r_d = cfg.p_r_avg();
        s.t_star = 0.0;
        return s;
    }

    const QuadraticCoeffs q = case_coeffs(cfg, ch, tau1, s.e_a);
    // The relay downlink peak is slack for tau1 > mu, so only the uplink
    // peak bounds the ratio from above.
    const TBest best =
        maximize_gamma_ratio(q, 0.0, ratio_upper_bound(cfg.mu, tau1));
    s.t_star = best.t;
    split_relay_budget(cfg.p_r_avg(), best.t, &s.e_r_d, &s.e_r_u);
    s.objective =
        dc_objective_from_energies(cfg, ch, tau1, s.e_a, s.e_r_d, s.e_r_u);
    return s;
}

DcInnerSolution dc_inner(const NetworkConfig& cfg,
                         const ChannelRealization& ch, double tau1) {
    if (cfg.mu >= 0.5 && tau1 <= 2.0 * cfg.mu - 1.0)
        return dc_inner_case1(cfg, ch, tau1);
    return dc_inner_case2(cfg, ch, tau1);
}

DcOptimum optimize_dc(const NetworkConfig& cfg, const ChannelRealization& ch) {
    cfg.validate();

    constexpr int kGridPoints = 1001;
    constexpr double kRefineWidth = 1e-6;
    const double mu = cfg.mu;

    double best_obj = -1.0;
    double best_tau1 = 0.0;
    DcInnerSolution best;
    for (int k = 0; k < kGridPoints; ++k) {
        const double tau1 =
            (k == kGridPoints - 1) ? mu : (k * mu) / (kGridPoints - 1);
        DcInnerSolution s = dc_inner(cfg, ch, tau1);
        if (s.objective > best_obj) {
            best_obj = s.objective;
            best_tau1 = tau1;
            best = s;
        }
    }

    DcOptimum out;
    // Golden-section refinement of the bracketing interval. Strict
    // improvement only, which keeps the smallest-tau1 tie-break of the
    // grid pass.
    const double step = mu / (kGridPoints - 1);
    double lo = std::max(0.0, best_tau1 - step);
    double hi = std::min(mu, best_tau1 + step);
    if (hi - lo > kRefineWidth) {
        const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = hi - invphi * (hi - lo);
        double d = lo + invphi * (hi - lo);
        double fc = dc_inner(cfg, ch, c).objective;
        double fd = dc_inner(cfg, ch, d).objective;
        while (hi - lo > kRefineWidth) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - invphi * (hi - lo);
                fc = dc_inner(cfg, ch, c).objective;
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + invphi * (hi - lo);
                fd = dc_inner(cfg, ch, d).objective;
            }
        }
        const double tau1_r = 0.5 * (lo + hi);
        DcInnerSolution sr = dc_inner(cfg, ch, tau1_r);
        if (sr.objective > best_obj) {
            best_obj = sr.objective;
            best_tau1 = tau1_r;
            best = sr;
            out.refined = true;
        }
    }

    if (best_obj <= 0.0) {
        // Nothing beats silence; canonical degenerate output.
        out.alloc = DcAllocation{cfg.p_a_max, cfg.p_r_max, 0.0, 0.0, 1.0};
        out.tau1_star = 0.0;
        out.inner = DcInnerSolution{};
        out.throughput = 0.0;
        out.refined = false;
        return out;
    }

    out.tau1_star = best_tau1;
    out.inner = best;
    const double tau2 = 1.0 - best_tau1;
    out.alloc.p_a = best.e_a / best_tau1;
    out.alloc.p_r_d = best.e_r_d / best_tau1;
    out.alloc.p_r_u = 2.0 * best.e_r_u / tau2;
    out.alloc.tau1 = best_tau1;
    out.alloc.tau2 = tau2;
    out.throughput = dc_throughput(cfg, ch, out.alloc);
    return out;
}

} // namespace wpcn
