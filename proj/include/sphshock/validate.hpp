#pragma once

#include <string>

#include "sphshock/scheme.hpp"

namespace sphshock {

/// Leading-order quotients Q_f = sup |f - L_f| / v^2 over v >= band for the
/// four fields, with L_f the predicted linear parts at the interaction point.
struct AsymptoticQuotients {
    double q_r, q_t, q_alpha, q_beta;
    double band;  // exclusion height actually used
};

/// band <= 0 selects the run's own 4h band.
AsymptoticQuotients asymptotic_check(const Solution& sol, double band = 0.0);

/// Stability of the quotients under N -> 2N, evaluated over the common band
/// 4 h_coarse (the per-run band is not N-stable: shrinking it admits points
/// with larger u/v where the mixed and uu second-derivative terms enter).
struct AsymptoticStability {
    AsymptoticQuotients coarse, fine;
    double max_ratio;  // max of ratio/ inverse ratio across the four fields
};

AsymptoticStability asymptotic_stability(const Solution& coarse, const Solution& fine);

struct JacobianCheck {
    double origin;    // centered-difference det at the origin
    double expected;  // -2 / (eta0 Gamma0)
    double min_abs;   // min |det| over interior nodes
    bool sign_constant;
};

JacobianCheck jacobian_check(const Solution& sol);

/// Least-squares order of each residual class against h over the given
/// resolutions (needs at least two).
struct RefinementStudy {
    std::vector<int> resolutions;
    std::vector<ResidualReport> reports;
    double order_char_u, order_char_v, order_transport_a, order_transport_b;
};

RefinementStudy refinement_study(const Problem& prob, const std::vector<int>& resolutions);

/// Max final-field difference between the standard initialization and one
/// with amplitude * v^2 added to r.
struct UniquenessProbe {
    double delta_r, delta_alpha, delta_beta, delta_t;
    double max_delta;
};

UniquenessProbe uniqueness_probe(const Problem& prob, int n, double amplitude);

}  // namespace sphshock
