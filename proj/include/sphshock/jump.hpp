#pragma once

#include "sphshock/fluid.hpp"

namespace sphshock {

enum class ShockFamily { Left, Right };  // shock 1 / shock 2

/// plus = state behind, minus = state ahead
struct ShockPair {
    PrimState plus;
    PrimState minus;
};

// relative density-jump tolerance below which the shock speed is indeterminate
inline constexpr double kRhoJumpTol = 1e-9;

/// I := [rho w]^2 - [rho w^2 + p] [rho], zero exactly on the Hugoniot locus.
double hugoniot_I(const ShockPair& pair, const Eos& eos);

/// V = [rho w] / [rho]; DegenerateJump when |[rho]| <= kRhoJumpTol * max(rho).
double shock_speed(const ShockPair& pair);

/// I composed with the invariant-to-primitive map.
double jump_J(const Eos& eos, InvState plus, InvState minus);

/// Exact partials of J in all four invariant arguments (chain rule on I,
/// valid off the Hugoniot locus; used by the Newton solves).
struct JGradient {
    double dalpha_plus, dbeta_plus;
    double dalpha_minus, dbeta_minus;
};

JGradient jump_J_gradient(const Eos& eos, InvState plus, InvState minus);

/// Closed forms -([rho] rho+/2 eta+)(c_out+ - V)^2 and -([rho] rho+/2 eta+)(V - c_in+)^2;
/// equal to the chain-rule partials on the locus I = 0.
double dJ_dalpha_plus(const ShockPair& pair, const Eos& eos);
double dJ_dbeta_plus(const ShockPair& pair, const Eos& eos);

struct HSolveOptions {
    double tol = 1e-13;  // |J| <= tol * scale at the accepted root
    int max_iters = 60;
};

/// alpha+ root of J(., beta_plus, alpha_minus, beta_minus) = 0 near guess.
/// The root must satisfy strict Left-family determinism (InadmissibleBranch
/// otherwise; the zero-jump root is rejected the same way).
double solve_H1(const Eos& eos, double beta_plus, double alpha_minus, double beta_minus,
                double guess, const HSolveOptions& opt = {});

/// beta+ root of J(alpha_plus, ., alpha_minus, beta_minus) = 0; Right family.
double solve_H2(const Eos& eos, double alpha_plus, double alpha_minus, double beta_minus,
                double guess, const HSolveOptions& opt = {});

/// F1 = dH1/dbeta+ = -((V - c_in+)/(c_out+ - V))^2, F2 = dH2/dalpha+ mirrored.
double coeff_F1(const ShockPair& pair, const Eos& eos);
double coeff_F2(const ShockPair& pair, const Eos& eos);

/// M1 = dH/dalpha-, M2 = dH/dbeta- by implicit differentiation.
struct MCoeffs {
    double m1, m2;
};

MCoeffs coeff_M(const ShockPair& pair, const Eos& eos, ShockFamily family);

/// Strict Lax admissibility: c_in+ < V < c_in- (Left), c_out- < V < c_out+ (Right).
bool determinism(const ShockPair& pair, ShockFamily family, const Eos& eos);

}  // namespace sphshock
