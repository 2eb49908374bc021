#pragma once

#include "sphshock/errors.hpp"

namespace sphshock {

/// Gamma-law barotropic equation of state p = kappa * rho^gamma.
/// gamma = 1 is the isothermal case with constant sound speed sqrt(kappa).
struct Eos {
    double gamma = 2.0;
    double kappa = 1.0;

    void validate() const;
};

struct PrimState {
    double rho = 1.0;  // density, > 0
    double w = 0.0;    // radial velocity
};

/// Riemann invariants alpha = ell(rho) + w, beta = ell(rho) - w.
struct InvState {
    double alpha = 0.0;  // out-family invariant
    double beta = 0.0;   // in-family invariant
};

// admissible density floor for the inverse potential map
inline constexpr double kRhoFloor = 1e-10;

double pressure(const Eos& eos, double rho);
double sound_speed(const Eos& eos, double rho);

/// Sound-speed potential ell(rho) = integral of eta/rho, fixed so that
/// ell(1) = 2*eta(1)/(gamma-1) for gamma > 1 and ell(1) = 0 for gamma = 1.
double potential(const Eos& eos, double rho);
double rho_from_potential(const Eos& eos, double ell);

InvState to_invariants(const Eos& eos, PrimState s);
PrimState to_primitive(const Eos& eos, InvState s);

struct CharSpeeds {
    double in;   // c_in = w - eta
    double out;  // c_out = w + eta
};

CharSpeeds char_speeds(const Eos& eos, PrimState s);
CharSpeeds char_speeds(const Eos& eos, InvState s);

/// Geometric source A(alpha, beta, r) = -2 * eta * w / r.
double source_A(const Eos& eos, InvState s, double r);

/// d eta / d ell along the EOS; constant (gamma-1)/2 for the gamma law.
/// Used for analytic characteristic-speed gradients in invariant variables.
double deta_dell(const Eos& eos);

/// Partials of (c_in, c_out) with respect to (alpha, beta).
struct CharSpeedGradient {
    double din_dalpha, din_dbeta;
    double dout_dalpha, dout_dbeta;
};

CharSpeedGradient char_speed_gradient(const Eos& eos);

}  // namespace sphshock
