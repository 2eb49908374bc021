#include "sphshock/interaction.hpp"

#include <cmath>

namespace sphshock {

PointSolution solve_point(const Eos& eos, PrimState ahead1, PrimState ahead2, double r0,
                          std::optional<PrimState> guess)
{
    if (!(r0 > 0.0))
        raise(ErrKind::NonPositiveRadius, "interaction radius r0");
    if (std::abs(ahead1.rho - ahead2.rho) <= kRhoJumpTol * std::max(ahead1.rho, ahead2.rho) &&
        std::abs(ahead1.w - ahead2.w) <= kRhoJumpTol * std::max(1.0, std::abs(ahead1.w)))
        raise(ErrKind::DegenerateJump, "identical ahead states, nothing to interact");
    double rho = guess ? guess->rho : 1.2 * std::max(ahead1.rho, ahead2.rho);
    double w = guess ? guess->w : 0.5 * (ahead1.w + ahead2.w);

    auto F1 = [&](double x, double y) { return hugoniot_I({{x, y}, ahead1}, eos); };
    auto F2 = [&](double x, double y) { return hugoniot_I({{x, y}, ahead2}, eos); };

    bool converged = false;
    for (int it = 0; it < 100; ++it) {
        double f1 = F1(rho, w), f2 = F2(rho, w);
        double h = 1e-7 * std::max(1.0, std::abs(rho));
        double a11 = (F1(rho + h, w) - F1(rho - h, w)) / (2 * h);
        double a12 = (F1(rho, w + h) - F1(rho, w - h)) / (2 * h);
        double a21 = (F2(rho + h, w) - F2(rho - h, w)) / (2 * h);
        double a22 = (F2(rho, w + h) - F2(rho, w - h)) / (2 * h);
        double det = a11 * a22 - a12 * a21;
        if (det == 0.0 || !std::isfinite(det))
            raise(ErrKind::NoConvergence, "singular Jacobian in the point solve");
        double drho = (-f1 * a22 + f2 * a12) / det;
        double dw = (-a11 * f2 + a21 * f1) / det;
        rho += drho;
        w += dw;
        if (!(rho > 0.0))
            raise(ErrKind::NoConvergence, "point solve left the admissible density range");
        if (std::max(std::abs(drho), std::abs(dw)) < 1e-14 * std::max(1.0, std::abs(rho))) {
            converged = true;
            break;
        }
    }
    if (!converged)
        raise(ErrKind::NoConvergence, "point solve did not converge");

    PointSolution sol;
    sol.behind = {rho, w};
    ShockPair left{sol.behind, ahead1};
    ShockPair right{sol.behind, ahead2};
    sol.V1 = shock_speed(left);   // DegenerateJump on zero strength
    sol.V2 = shock_speed(right);
    if (!determinism(left, ShockFamily::Left, eos) ||
        !determinism(right, ShockFamily::Right, eos))
        raise(ErrKind::InadmissibleConfiguration, "determinism fails at the interaction point");
    if (!(sol.V1 - w < 0.0 && 0.0 < sol.V2 - w))
        raise(ErrKind::InadmissibleConfiguration, "shock speeds do not separate");
    return sol;
}

double compute_a(double eta0, double V1_0, double V2_0)
{
    double a = (eta0 + V1_0) / (eta0 - V1_0) * ((eta0 - V2_0) / (eta0 + V2_0));
    if (!(a > 0.0 && a < 1.0))
        raise(ErrKind::InadmissibleConfiguration,
              "coordinate ratio a = " + std::to_string(a) + " outside (0, 1)");
    return a;
}

double compute_Gamma0(double eta0, double V1_0)
{
    if (!(-eta0 < V1_0 && V1_0 < 0.0))
        raise(ErrKind::InadmissibleConfiguration, "need -eta0 < V1_0 < 0");
    return -(eta0 + V1_0) / (eta0 - V1_0);
}

Slopes initial_slopes(const Eos& eos, const InteractionData& data, const AheadField& ahead1,
                      const AheadField& ahead2)
{
    const double eta0 = data.eta0, G0 = data.Gamma0, a = data.a;
    InvState plus{data.beta0, data.beta0};

    ShockPair left{to_primitive(eos, plus), to_primitive(eos, data.ahead1_inv0)};
    ShockPair right{to_primitive(eos, plus), to_primitive(eos, data.ahead2_inv0)};
    double F1 = coeff_F1(left, eos);
    double F2 = coeff_F2(right, eos);
    MCoeffs M1 = coeff_M(left, eos, ShockFamily::Left);
    MCoeffs M2 = coeff_M(right, eos, ShockFamily::Right);

    InvDerivs d1 = invariant_derivs(ahead1, eos, 0.0, data.r0);
    InvDerivs d2 = invariant_derivs(ahead2, eos, 0.0, data.r0);

    // trace tangents at the origin from the Jacobian d(t,r)/d(u,v)(0,0)
    double dt1 = (1.0 / eta0) * (1.0 - 1.0 / G0), dr1 = 1.0 + 1.0 / G0;
    double dt2 = (1.0 / eta0) * (1.0 - a / G0), dr2 = 1.0 + a / G0;

    double da1 = d1.dalpha_dt * dt1 + d1.dalpha_dr * dr1;
    double db1 = d1.dbeta_dt * dt1 + d1.dbeta_dr * dr1;
    double da2 = d2.dalpha_dt * dt2 + d2.dalpha_dr * dr2;
    double db2 = d2.dbeta_dt * dt2 + d2.dbeta_dr * dr2;

    double a0 = M1.m1 * da1 + M1.m2 * db1;
    double b0 = M2.m1 * da2 + M2.m2 * db2;

    // M (alpha'0, beta'0)^T = (a0, b0)^T with M = [[1, -F1], [-a F2, 1]]
    double det = 1.0 - a * F1 * F2;
    if (std::abs(det) < 1e-12)
        raise(ErrKind::SingularSystem, "slope system is singular");
    Slopes s;
    s.alpha_prime_0 = (a0 + F1 * b0) / det;
    s.beta_prime_0 = (b0 + a * F2 * a0) / det;
    s.F1_0 = F1;
    s.F2_0 = F2;
    s.detM = det;
    return s;
}

ShiftedProblem make_interaction(const Eos& eos, std::shared_ptr<const AheadField> ahead1,
                                std::shared_ptr<const AheadField> ahead2, double r0,
                                std::optional<PrimState> guess)
{
    PrimState m1 = ahead1->evaluate(0.0, r0).state;
    PrimState m2 = ahead2->evaluate(0.0, r0).state;
    PointSolution point = solve_point(eos, m1, m2, r0, guess);

    ShiftedProblem prob;
    double w0 = point.behind.w;
    prob.data.r0 = r0;
    prob.data.rho0 = point.behind.rho;
    prob.data.eta0 = sound_speed(eos, point.behind.rho);
    prob.data.beta0 = potential(eos, point.behind.rho);
    prob.data.V1_0 = point.V1 - w0;
    prob.data.V2_0 = point.V2 - w0;
    prob.data.shift = w0;
    prob.data.a = compute_a(prob.data.eta0, prob.data.V1_0, prob.data.V2_0);
    prob.data.Gamma0 = compute_Gamma0(prob.data.eta0, prob.data.V1_0);
    prob.ahead1 = std::make_shared<ShiftedField>(std::move(ahead1), w0);
    prob.ahead2 = std::make_shared<ShiftedField>(std::move(ahead2), w0);
    prob.data.ahead1_inv0 = invariants_along(*prob.ahead1, eos, 0.0, r0);
    prob.data.ahead2_inv0 = invariants_along(*prob.ahead2, eos, 0.0, r0);

    Slopes s = initial_slopes(eos, prob.data, *prob.ahead1, *prob.ahead2);
    prob.data.alpha_prime_0 = s.alpha_prime_0;
    prob.data.beta_prime_0 = s.beta_prime_0;
    prob.data.F1_0 = s.F1_0;
    prob.data.F2_0 = s.F2_0;
    prob.data.detM = s.detM;
    return prob;
}

}  // namespace sphshock
