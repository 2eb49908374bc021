#include "sphshock/fluid.hpp"

#include <cmath>

namespace sphshock {

void Eos::validate() const
{
    if (!(gamma >= 1.0) || !std::isfinite(gamma))
        raise(ErrKind::ConfigError, "eos gamma must be >= 1");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        raise(ErrKind::ConfigError, "eos kappa must be > 0");
}

static void check_rho(double rho)
{
    if (!(rho > 0.0))
        raise(ErrKind::NonPositiveDensity, "rho = " + std::to_string(rho));
}

double pressure(const Eos& eos, double rho)
{
    check_rho(rho);
    return eos.kappa * std::pow(rho, eos.gamma);
}

double sound_speed(const Eos& eos, double rho)
{
    check_rho(rho);
    return std::sqrt(eos.gamma * eos.kappa) * std::pow(rho, 0.5 * (eos.gamma - 1.0));
}

double potential(const Eos& eos, double rho)
{
    check_rho(rho);
    if (eos.gamma == 1.0)
        return std::sqrt(eos.kappa) * std::log(rho);
    return 2.0 * sound_speed(eos, rho) / (eos.gamma - 1.0);
}

double rho_from_potential(const Eos& eos, double ell)
{
    if (eos.gamma == 1.0)
        return std::exp(ell / std::sqrt(eos.kappa));
    if (!(ell > 0.0))
        raise(ErrKind::PotentialOutOfRange, "ell = " + std::to_string(ell));
    double rho = std::pow(0.5 * (eos.gamma - 1.0) * ell / std::sqrt(eos.gamma * eos.kappa),
                          2.0 / (eos.gamma - 1.0));
    if (rho < kRhoFloor)
        raise(ErrKind::PotentialOutOfRange, "rho below admissible floor");
    return rho;
}

InvState to_invariants(const Eos& eos, PrimState s)
{
    double ell = potential(eos, s.rho);
    return {ell + s.w, ell - s.w};
}

PrimState to_primitive(const Eos& eos, InvState s)
{
    double rho = rho_from_potential(eos, 0.5 * (s.alpha + s.beta));
    return {rho, 0.5 * (s.alpha - s.beta)};
}

CharSpeeds char_speeds(const Eos& eos, PrimState s)
{
    double eta = sound_speed(eos, s.rho);
    return {s.w - eta, s.w + eta};
}

CharSpeeds char_speeds(const Eos& eos, InvState s)
{
    return char_speeds(eos, to_primitive(eos, s));
}

double source_A(const Eos& eos, InvState s, double r)
{
    if (!(r > 0.0))
        raise(ErrKind::NonPositiveRadius, "r = " + std::to_string(r));
    PrimState p = to_primitive(eos, s);
    return -2.0 * sound_speed(eos, p.rho) * p.w / r;
}

double deta_dell(const Eos& eos)
{
    return 0.5 * (eos.gamma - 1.0);
}

CharSpeedGradient char_speed_gradient(const Eos& eos)
{
    // w = (alpha-beta)/2, eta = eta(ell) with ell = (alpha+beta)/2
    double de = 0.5 * deta_dell(eos);
    return {0.5 - de, -0.5 - de, 0.5 + de, -0.5 + de};
}

}  // namespace sphshock
