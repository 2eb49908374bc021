#pragma once

#include <memory>
#include <vector>

#include "sphshock/field.hpp"
#include "sphshock/interaction.hpp"

namespace sphshock {

/// Iteration state: r with its construction-exact first derivatives, the
/// tilde invariants (alpha~ vanishes on the left shock, beta~ on the right
/// shock), and the two boundary traces. The full invariants are
/// alpha = alpha1+(u) + alpha~, beta = beta2+(v) + beta~.
struct FieldSet {
    Field r, dr_du, dr_dv;
    Field alpha_tilde, beta_tilde;
    std::vector<double> trace1_alpha;  // alpha~1+ on the u grid
    std::vector<double> trace2_beta;   // beta~2+ on the v grid

    explicit FieldSet(const CharGrid& g)
        : r(g), dr_du(g), dr_dv(g), alpha_tilde(g), beta_tilde(g),
          trace1_alpha(g.n() + 1, 0.0), trace2_beta(g.n() + 1, 0.0) {}

    double alpha(int i, int j) const { return trace1_alpha[i] + alpha_tilde.at(i, j); }
    double beta(int i, int j) const { return trace2_beta[j] + beta_tilde.at(i, j); }
};

struct TimeField {
    Field t, dt_du, dt_dv;
    explicit TimeField(const CharGrid& g) : t(g), dt_du(g), dt_dv(g) {}
};

/// Boundary data of one iterate: positions, invariants on both sides, speeds
/// and boundary ratios along the two shock curves (trace 1 on the u grid,
/// trace 2 on the v grid).
struct TraceSet {
    std::vector<double> t1, r1, a1p, b1p, a1m, b1m, V1, Gamma1;
    std::vector<double> t2, r2, a2p, b2p, a2m, b2m, V2, Gamma2;
    std::vector<double> gamma1, gamma2;
};

struct IterationConfig {
    double tol_fix = 1e-10;
    int max_iters = 50;
    HSolveOptions newton{};
    Exec exec = Exec::Parallel;
};

struct IterDeltas {
    double r, alpha_tilde, beta_tilde, trace1, trace2;
    double max() const;
};

/// Discrete analogs of the function-space norms (sup of second differences).
struct DiscreteNorms {
    double r_c2;            // ||r||_0
    double alpha_tilde_c2;  // ||alpha~||_0
    double beta_tilde_c2;   // ||beta~||_0
    double trace1_c2;       // ||alpha~1+||_1
    double trace2_c2;       // ||beta~2+||_2
};

struct ResidualReport {
    // sup norms of the characteristic and transport equations over interior
    // nodes (centered differences; invariant equations differenced on tildes)
    double char_u;       // |dr/du - c_in dt/du|
    double char_v;       // |dr/dv - c_out dt/dv|
    double transport_a;  // |dalpha/dv - A dt/dv|
    double transport_b;  // |dbeta/du - A dt/du|
    // boundary-speed residuals |dr+ - V dt+| along the traces
    double bc1, bc2;
    // |J| along both shocks
    double J1, J2;
    // point conditions at the origin
    double origin_alpha, origin_beta;        // |alpha - beta0|, |beta - beta0|
    double origin_V1, origin_V2;             // |V(0) - V_0|
    double origin_dalpha_du, origin_dbeta_dv;
    // strict determinism at every trace node
    bool determinism1, determinism2;
    // mixed-derivative identity sup |d2r/dudv - M| of the final sweep
    double mixed_identity;
};

struct SolveReport {
    int iterations = 0;
    bool converged = false;
    std::vector<IterDeltas> history;
    std::vector<double> contraction;  // ratios of successive max deltas
    std::vector<DiscreteNorms> norms;
};

struct Solution {
    std::shared_ptr<const CharGrid> grid;
    FieldSet fields;
    TimeField time;
    TraceSet traces;
    InteractionData data;
};

FieldSet init_fields(const InteractionData& data, const CharGrid& grid);

/// t_m from r_m by integrating along the diagonal and up the columns;
/// dt_dv is exact by construction, dt_du via the compatibility integral.
TimeField time_field(const CharGrid& grid, const FieldSet& fields, const Eos& eos, Exec exec);

TraceSet shock_traces(const CharGrid& grid, const FieldSet& fields, const TimeField& tf,
                      const AheadField& ahead1, const AheadField& ahead2, const Eos& eos);

/// Shock speeds along both traces (fills V1, V2); origin values must agree
/// with the interaction data.
void shock_speeds(TraceSet& traces, const Eos& eos);

/// Boundary ratios Gamma and the gamma ratio functions (fills Gamma1, Gamma2,
/// gamma1, gamma2).
void gammas(TraceSet& traces, const CharGrid& grid, const Eos& eos);

struct RUpdate {
    Field r, dr_du, dr_dv;
    double mixed_identity;  // sup |FD d2r/dudv of the new r - M_m|
};

RUpdate update_r(const CharGrid& grid, const FieldSet& fields, const TraceSet& traces,
                 const InteractionData& data, const Eos& eos, Exec exec);

struct InvariantUpdate {
    Field alpha_tilde, beta_tilde;
    std::vector<double> trace1_alpha, trace2_beta;
};

InvariantUpdate update_invariants(const CharGrid& grid, const FieldSet& fields,
                                  const TimeField& tf, const TraceSet& traces, const Eos& eos,
                                  const HSolveOptions& newton, Exec exec);

/// Run the fixed-point iteration to tolerance. Throws NoConvergence with the
/// iteration index when max_iters is exhausted; the report (if given) retains
/// the delta history either way.
Solution iterate(const InteractionData& data, std::shared_ptr<const CharGrid> grid,
                 std::shared_ptr<const AheadField> ahead1,
                 std::shared_ptr<const AheadField> ahead2, const Eos& eos,
                 const IterationConfig& cfg, SolveReport* report = nullptr,
                 const FieldSet* init_override = nullptr);

/// A solvable configuration: everything iterate() needs except the grid
/// resolution.
struct Problem {
    Eos eos;
    InteractionData data;
    std::shared_ptr<const AheadField> ahead1, ahead2;
    double epsilon = 0.0;
    IterationConfig iter{};
};

Solution solve_at(const Problem& prob, int n, SolveReport* report = nullptr);

ResidualReport residuals(const Solution& sol, const Eos& eos);

DiscreteNorms discrete_norms(const CharGrid& grid, const FieldSet& fields, Exec exec);

}  // namespace sphshock
