#pragma once

#include <memory>

#include "sphshock/fluid.hpp"

namespace sphshock {

/// (t, r) rectangle on which a supplied state-ahead development is valid.
struct ValidityBox {
    double t_min, t_max;
    double r_min, r_max;

    bool contains(double t, double r) const
    {
        return t >= t_min && t <= t_max && r >= r_min && r <= r_max;
    }
};

enum class Side { Left, Right };  // r <= shock 1 / r >= shock 2

struct FieldSample {
    PrimState state;
    double drho_dt, drho_dr;
    double dw_dt, dw_dr;
};

/// A supplied smooth development (rho*, w*) with first (t, r)-derivatives.
/// The artifact does not solve the ahead region; it evaluates given fields
/// and reports how well they satisfy the equations of motion.
class AheadField {
public:
    AheadField(Side side, ValidityBox box) : side_(side), box_(box) {}
    virtual ~AheadField() = default;

    FieldSample evaluate(double t, double r) const;

    Side side() const { return side_; }
    const ValidityBox& box() const { return box_; }

protected:
    virtual FieldSample eval_impl(double t, double r) const = 0;

private:
    Side side_;
    ValidityBox box_;
};

/// Quadratic Taylor development around (t, r) = (0, r0).
class TaylorField final : public AheadField {
public:
    struct Coeffs {
        double t = 0, r = 0, tt = 0, tr = 0, rr = 0;

        double value(double base, double dt, double dr) const
        {
            return base + t * dt + r * dr + 0.5 * tt * dt * dt + tr * dt * dr + 0.5 * rr * dr * dr;
        }
    };

    TaylorField(Side side, ValidityBox box, double r0, PrimState base, Coeffs rho, Coeffs w)
        : AheadField(side, box), r0_(r0), base_(base), rho_(rho), w_(w) {}

    double r0() const { return r0_; }

protected:
    FieldSample eval_impl(double t, double r) const override;

private:
    double r0_;
    PrimState base_;
    Coeffs rho_, w_;
};

/// Velocity-offset view used by the interaction frame shift (w -> w - shift).
class ShiftedField final : public AheadField {
public:
    ShiftedField(std::shared_ptr<const AheadField> inner, double shift)
        : AheadField(inner->side(), inner->box()), inner_(std::move(inner)), shift_(shift) {}

    double shift() const { return shift_; }

protected:
    FieldSample eval_impl(double t, double r) const override;

private:
    std::shared_ptr<const AheadField> inner_;
    double shift_;
};

InvState invariants_along(const AheadField& field, const Eos& eos, double t, double r);

/// Invariant first derivatives of the development, (d alpha*/dt, d alpha*/dr, ...).
struct InvDerivs {
    double dalpha_dt, dalpha_dr;
    double dbeta_dt, dbeta_dr;
};

InvDerivs invariant_derivs(const AheadField& field, const Eos& eos, double t, double r);

/// Residuals of the spherically symmetric equations of motion at (t, r),
/// from the field's analytic first partials.
struct EulerResidual {
    double mass;      // dt rho + dr(rho w) + 2 rho w / r
    double momentum;  // dt w + w dr w + (1/rho) dr p
};

EulerResidual euler_residual(const AheadField& field, const Eos& eos, double t, double r);

}  // namespace sphshock
