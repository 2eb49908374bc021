#include "sphshock/ahead.hpp"

#include <cmath>
#include <string>

namespace sphshock {

FieldSample AheadField::evaluate(double t, double r) const
{
    if (!box_.contains(t, r))
        raise(ErrKind::OutOfDomain,
              "(t, r) = (" + std::to_string(t) + ", " + std::to_string(r) +
                  ") outside the field validity box");
    FieldSample s = eval_impl(t, r);
    if (!(s.state.rho > 0.0))
        raise(ErrKind::NonPositiveDensity, "ahead field produced rho <= 0");
    return s;
}

FieldSample TaylorField::eval_impl(double t, double r) const
{
    double d = r - r0_;
    FieldSample s;
    s.state.rho = rho_.value(base_.rho, t, d);
    s.state.w = w_.value(base_.w, t, d);
    s.drho_dt = rho_.t + rho_.tt * t + rho_.tr * d;
    s.drho_dr = rho_.r + rho_.tr * t + rho_.rr * d;
    s.dw_dt = w_.t + w_.tt * t + w_.tr * d;
    s.dw_dr = w_.r + w_.tr * t + w_.rr * d;
    return s;
}

FieldSample ShiftedField::eval_impl(double t, double r) const
{
    FieldSample s = inner_->evaluate(t, r);
    s.state.w -= shift_;
    return s;
}

InvState invariants_along(const AheadField& field, const Eos& eos, double t, double r)
{
    return to_invariants(eos, field.evaluate(t, r).state);
}

InvDerivs invariant_derivs(const AheadField& field, const Eos& eos, double t, double r)
{
    FieldSample s = field.evaluate(t, r);
    double k = sound_speed(eos, s.state.rho) / s.state.rho;  // d ell / d rho
    return {k * s.drho_dt + s.dw_dt, k * s.drho_dr + s.dw_dr,
            k * s.drho_dt - s.dw_dt, k * s.drho_dr - s.dw_dr};
}

EulerResidual euler_residual(const AheadField& field, const Eos& eos, double t, double r)
{
    if (!(r > 0.0))
        raise(ErrKind::NonPositiveRadius, "euler_residual needs r > 0");
    FieldSample s = field.evaluate(t, r);
    double rho = s.state.rho, w = s.state.w;
    double eta = sound_speed(eos, rho);
    EulerResidual res;
    res.mass = s.drho_dt + rho * s.dw_dr + w * s.drho_dr + 2.0 * rho * w / r;
    res.momentum = s.dw_dt + w * s.dw_dr + eta * eta / rho * s.drho_dr;
    return res;
}

}  // namespace sphshock
