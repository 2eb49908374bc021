#pragma once

#include <memory>
#include <optional>

#include "sphshock/ahead.hpp"
#include "sphshock/jump.hpp"

namespace sphshock {

/// Everything the scheme needs at the interaction point, in the frame where
/// the state behind is at rest (w0 subtracted from every velocity).
struct InteractionData {
    double r0 = 1.0;
    double rho0 = 0.0;          // behind density
    double eta0 = 0.0;          // behind sound speed
    double beta0 = 0.0;         // common invariant value (alpha0 = beta0)
    double V1_0 = 0.0;          // left shock speed, < 0
    double V2_0 = 0.0;          // right shock speed, > 0
    double a = 0.0;             // coordinate ratio f'(0), in (0, 1)
    double Gamma0 = 0.0;        // boundary ratio, in (-1, 0)
    double alpha_prime_0 = 0.0; // d alpha/du at the origin
    double beta_prime_0 = 0.0;  // d beta/dv at the origin
    double shift = 0.0;         // w0 of the pre-shift solve
    InvState ahead1_inv0{};     // shifted ahead invariants at the origin
    InvState ahead2_inv0{};
    double F1_0 = 0.0, F2_0 = 0.0;
    double detM = 0.0;          // determinant of the slope system, = 1 - a^3
};

struct PointSolution {
    PrimState behind;
    double V1, V2;
};

/// Solve the two Hugoniot conditions for the state behind and both shock
/// speeds. Newton on (rho0, w0) with a finite-difference Jacobian; both
/// determinism predicates must hold strictly at the root.
PointSolution solve_point(const Eos& eos, PrimState ahead1, PrimState ahead2, double r0,
                          std::optional<PrimState> guess = std::nullopt);

double compute_a(double eta0, double V1_0, double V2_0);
double compute_Gamma0(double eta0, double V1_0);

struct Slopes {
    double alpha_prime_0, beta_prime_0;
    double F1_0, F2_0;
    double detM;
};

/// Assemble and solve the 2x2 system for the initial invariant slopes from
/// the ahead fields' first derivatives at the interaction point. The fields
/// must already be in the shifted frame.
Slopes initial_slopes(const Eos& eos, const InteractionData& data, const AheadField& ahead1,
                      const AheadField& ahead2);

/// Frame-shifted problem: interaction data plus velocity-offset views of the
/// two ahead fields.
struct ShiftedProblem {
    InteractionData data;
    std::shared_ptr<const AheadField> ahead1;
    std::shared_ptr<const AheadField> ahead2;
};

/// Full interaction-point pipeline: point solve, frame shift, a / Gamma0,
/// initial slopes.
ShiftedProblem make_interaction(const Eos& eos, std::shared_ptr<const AheadField> ahead1,
                                std::shared_ptr<const AheadField> ahead2, double r0,
                                std::optional<PrimState> guess = std::nullopt);

}  // namespace sphshock
