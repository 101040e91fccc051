#pragma once

#include <optional>

#include "wpcn/protocols.hpp"

namespace wpcn {

/// Constants of the one-dimensional relay split problem at a fixed tau1.
/// With t = E_R^U / E_R^D, the combined SNR becomes
///   g(t) = a + b/(t+1) + (c + d/(t+1)) * e*t/(t+1)
///                        / (c + d/(t+1) + e*t/(t+1) + 1)
/// and dg/dt has the sign of A t^2 + B t + C.
struct QuadraticCoeffs {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
    double A = 0.0, B = 0.0, C = 0.0;
    double delta = 0.0; ///< B^2 - 4 A C
};

/// Fills A, B, C, delta from a..e.
QuadraticCoeffs make_quadratic(double a, double b, double c, double d,
                               double e);

/// g(t) above; requires finite t >= 0.
double gamma_ratio(const QuadraticCoeffs& q, double t);

/// lim t->inf of g(t): a + c*e / (c + e + 1).
double gamma_ratio_limit(const QuadraticCoeffs& q);

struct TBest {
    double t = 0.0;      ///< +infinity when the limit wins
    double gamma = 0.0;  ///< g at the winner
};

/// Maximizes g over [t_lo, t_hi] (t_hi may be +infinity) by evaluating
/// the closed-form candidate set: both interval ends, the real roots of
/// the sign quadratic inside the interval, and the t->inf limit when the
/// interval is unbounded. Ties go to the smallest t.
TBest maximize_gamma_ratio(const QuadraticCoeffs& q, double t_lo,
                           double t_hi);

/// Relay-split solution of the inner problem at one tau1.
struct DcInnerSolution {
    double e_a = 0.0;   ///< AP downlink energy
    double e_r_d = 0.0; ///< relay downlink energy
    double e_r_u = 0.0; ///< relay uplink energy
    std::optional<double> t_star; ///< E_R^U/E_R^D; absent in case 1; may be +inf
    int case_id = 0;    ///< 1, 2, or 3 (3 only via the explicit evaluator)
    double objective = 0.0; ///< bps/Hz
};

/// Case 1 (tau1 <= 2 mu - 1, needs mu >= 0.5): every energy sits on its
/// peak-power bound. Throws std::domain_error outside the case range.
DcInnerSolution dc_inner_case1(const NetworkConfig& cfg,
                               const ChannelRealization& ch, double tau1);

/// Case 2 (max(0, 2 mu - 1) <= tau1 <= mu): the relay average-power
/// budget is tight and splits between downlink and uplink at the optimal
/// ratio t*. tau1 == 0 degenerates to the all-zero solution.
DcInnerSolution dc_inner_case2(const NetworkConfig& cfg,
                               const ChannelRealization& ch, double tau1);

/// Case 3 (mu < tau1 <= 1): both average-power budgets are tight. Never
/// optimal (its objective is dominated by tau1 = mu); provided for
/// validating exactly that.
DcInnerSolution dc_inner_case3(const NetworkConfig& cfg,
                               const ChannelRealization& ch, double tau1);

/// Case dispatch over [0, mu].
DcInnerSolution dc_inner(const NetworkConfig& cfg,
                         const ChannelRealization& ch, double tau1);

/// Objective from block-normalized energies, with the tau1 -> {0, 1}
/// limits defined as zero.
double dc_objective_from_energies(const NetworkConfig& cfg,
                                  const ChannelRealization& ch, double tau1,
                                  double e_a, double e_r_d, double e_r_u);

struct DcOptimum {
    DcAllocation alloc;
    double throughput = 0.0; ///< bps/Hz, equals dc_throughput(alloc)
    double tau1_star = 0.0;
    DcInnerSolution inner;
    bool refined = false; ///< golden-section improved on the grid point
};

/// Optimal D-C allocation: inner case analysis at each tau1 of a
/// 1001-point grid on [0, mu], then golden-section refinement of the best
/// bracket down to width 1e-6. Ties break toward the smallest tau1.
DcOptimum optimize_dc(const NetworkConfig& cfg, const ChannelRealization& ch);

} // namespace wpcn
