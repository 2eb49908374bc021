#include "sphshock/jump.hpp"

#include <algorithm>
#include <cmath>

namespace sphshock {

namespace {

struct Brackets {
    double rho;   // [rho]
    double rw;    // [rho w]
    double rwwp;  // [rho w^2 + p]
};

Brackets brackets(const ShockPair& pair, const Eos& eos)
{
    const PrimState& p = pair.plus;
    const PrimState& m = pair.minus;
    return {p.rho - m.rho,
            p.rho * p.w - m.rho * m.w,
            p.rho * p.w * p.w + pressure(eos, p.rho) - m.rho * m.w * m.w - pressure(eos, m.rho)};
}

double I_scale(const ShockPair& pair, const Eos& eos)
{
    Brackets b = brackets(pair, eos);
    return std::max({1.0, b.rw * b.rw, std::abs(b.rwwp * b.rho)});
}

}  // namespace

double hugoniot_I(const ShockPair& pair, const Eos& eos)
{
    Brackets b = brackets(pair, eos);
    return b.rw * b.rw - b.rwwp * b.rho;
}

double shock_speed(const ShockPair& pair)
{
    double drho = pair.plus.rho - pair.minus.rho;
    if (std::abs(drho) <= kRhoJumpTol * std::max(pair.plus.rho, pair.minus.rho))
        raise(ErrKind::DegenerateJump, "zero-strength shock, speed indeterminate");
    return (pair.plus.rho * pair.plus.w - pair.minus.rho * pair.minus.w) / drho;
}

double jump_J(const Eos& eos, InvState plus, InvState minus)
{
    return hugoniot_I({to_primitive(eos, plus), to_primitive(eos, minus)}, eos);
}

JGradient jump_J_gradient(const Eos& eos, InvState plus, InvState minus)
{
    PrimState p = to_primitive(eos, plus);
    PrimState m = to_primitive(eos, minus);
    Brackets b = brackets({p, m}, eos);
    double ep = sound_speed(eos, p.rho);
    double em = sound_speed(eos, m.rho);

    double dI_drp = 2.0 * b.rw * p.w - b.rwwp - b.rho * (p.w * p.w + ep * ep);
    double dI_dwp = 2.0 * p.rho * (b.rw - b.rho * p.w);
    double dI_drm = -2.0 * b.rw * m.w + b.rwwp + b.rho * (m.w * m.w + em * em);
    double dI_dwm = -2.0 * m.rho * (b.rw - b.rho * m.w);

    // d(rho,w)/d(alpha,beta) = [[rho/2eta, rho/2eta], [1/2, -1/2]]
    double gp = dI_drp * p.rho / (2.0 * ep);
    double gm = dI_drm * m.rho / (2.0 * em);
    return {gp + 0.5 * dI_dwp, gp - 0.5 * dI_dwp, gm + 0.5 * dI_dwm, gm - 0.5 * dI_dwm};
}

double dJ_dalpha_plus(const ShockPair& pair, const Eos& eos)
{
    double V = shock_speed(pair);
    CharSpeeds c = char_speeds(eos, pair.plus);
    double drho = pair.plus.rho - pair.minus.rho;
    double eta = sound_speed(eos, pair.plus.rho);
    return -drho * pair.plus.rho / (2.0 * eta) * (c.out - V) * (c.out - V);
}

double dJ_dbeta_plus(const ShockPair& pair, const Eos& eos)
{
    double V = shock_speed(pair);
    CharSpeeds c = char_speeds(eos, pair.plus);
    double drho = pair.plus.rho - pair.minus.rho;
    double eta = sound_speed(eos, pair.plus.rho);
    return -drho * pair.plus.rho / (2.0 * eta) * (V - c.in) * (V - c.in);
}

namespace {

// Newton on one invariant component of J = 0, with a bracket-scan bisection
// fallback if the Newton path stalls or leaves the admissible range.
template <typename Eval>
double solve_scalar(Eval eval_J_and_dJ, double guess, const HSolveOptions& opt,
                    const char* label)
{
    double x = guess;
    double f = 0.0, scale = 1.0;
    for (int it = 0; it < opt.max_iters; ++it) {
        bool ok = true;
        double df = 0.0;
        try {
            eval_J_and_dJ(x, f, df, scale);
        } catch (const Error&) {
            ok = false;
        }
        if (ok && std::abs(f) <= opt.tol * scale)
            return x;
        if (!ok || df == 0.0 || !std::isfinite(f / df))
            break;
        double step = f / df;
        // damp wild steps relative to the guess scale
        double cap = 0.5 * std::max(1.0, std::abs(guess));
        if (std::abs(step) > cap)
            step = std::copysign(cap, step);
        x -= step;
        // step at rounding level: the residual tolerance is tighter than the
        // evaluation noise of J, and x is the numerical root
        if (it > 0 && std::abs(step) <= 8.0 * 2.22e-16 * std::max(1.0, std::abs(x)))
            return x;
    }

    // outward scan from the guess for a sign change, then bisection
    double span = 1e-4 * std::max(1.0, std::abs(guess));
    auto value = [&](double y) {
        double fy, dfy, sc;
        eval_J_and_dJ(y, fy, dfy, sc);
        return fy;
    };
    for (int k = 0; k < 40; ++k, span *= 1.7) {
        for (double lo : {guess - span, guess}) {
            double hi = lo + span;
            double flo, fhi;
            try {
                flo = value(lo);
                fhi = value(hi);
            } catch (const Error&) {
                continue;
            }
            if (flo == 0.0)
                return lo;
            if (flo * fhi < 0.0) {
                for (int it = 0; it < 200; ++it) {
                    double mid = 0.5 * (lo + hi);
                    double fm, dfm, sc;
                    eval_J_and_dJ(mid, fm, dfm, sc);
                    if (std::abs(fm) <= opt.tol * sc)
                        return mid;
                    if (flo * fm <= 0.0)
                        hi = mid;
                    else {
                        lo = mid;
                        flo = fm;
                    }
                }
            }
        }
    }
    raise(ErrKind::NoConvergence, std::string(label) + " root search failed");
}

}  // namespace

double solve_H1(const Eos& eos, double beta_plus, double alpha_minus, double beta_minus,
                double guess, const HSolveOptions& opt)
{
    InvState minus{alpha_minus, beta_minus};
    auto eval = [&](double ap, double& f, double& df, double& scale) {
        InvState plus{ap, beta_plus};
        f = jump_J(eos, plus, minus);
        df = jump_J_gradient(eos, plus, minus).dalpha_plus;
        scale = I_scale({to_primitive(eos, plus), to_primitive(eos, minus)}, eos);
    };
    double root = solve_scalar(eval, guess, opt, "H1");
    ShockPair pair{to_primitive(eos, {root, beta_plus}), to_primitive(eos, minus)};
    try {
        if (!determinism(pair, ShockFamily::Left, eos))
            raise(ErrKind::InadmissibleBranch, "H1 root violates Left determinism");
    } catch (const Error& e) {
        if (e.kind() == ErrKind::DegenerateJump)
            raise(ErrKind::InadmissibleBranch, "H1 found the zero-jump root");
        throw;
    }
    return root;
}

double solve_H2(const Eos& eos, double alpha_plus, double alpha_minus, double beta_minus,
                double guess, const HSolveOptions& opt)
{
    InvState minus{alpha_minus, beta_minus};
    auto eval = [&](double bp, double& f, double& df, double& scale) {
        InvState plus{alpha_plus, bp};
        f = jump_J(eos, plus, minus);
        df = jump_J_gradient(eos, plus, minus).dbeta_plus;
        scale = I_scale({to_primitive(eos, plus), to_primitive(eos, minus)}, eos);
    };
    double root = solve_scalar(eval, guess, opt, "H2");
    ShockPair pair{to_primitive(eos, {alpha_plus, root}), to_primitive(eos, minus)};
    try {
        if (!determinism(pair, ShockFamily::Right, eos))
            raise(ErrKind::InadmissibleBranch, "H2 root violates Right determinism");
    } catch (const Error& e) {
        if (e.kind() == ErrKind::DegenerateJump)
            raise(ErrKind::InadmissibleBranch, "H2 found the zero-jump root");
        throw;
    }
    return root;
}

double coeff_F1(const ShockPair& pair, const Eos& eos)
{
    double V = shock_speed(pair);
    CharSpeeds c = char_speeds(eos, pair.plus);
    if (c.out == V)
        raise(ErrKind::SonicShock, "c_out+ equals the shock speed");
    double q = (V - c.in) / (c.out - V);
    return -q * q;
}

double coeff_F2(const ShockPair& pair, const Eos& eos)
{
    double V = shock_speed(pair);
    CharSpeeds c = char_speeds(eos, pair.plus);
    if (c.in == V)
        raise(ErrKind::SonicShock, "c_in+ equals the shock speed");
    double q = (c.out - V) / (V - c.in);
    return -q * q;
}

MCoeffs coeff_M(const ShockPair& pair, const Eos& eos, ShockFamily family)
{
    shock_speed(pair);  // DegenerateJump guard
    JGradient g = jump_J_gradient(eos, to_invariants(eos, pair.plus),
                                  to_invariants(eos, pair.minus));
    double den = (family == ShockFamily::Left) ? g.dalpha_plus : g.dbeta_plus;
    if (den == 0.0)
        raise(ErrKind::SonicShock, "vanishing implicit-function denominator");
    return {-g.dalpha_minus / den, -g.dbeta_minus / den};
}

bool determinism(const ShockPair& pair, ShockFamily family, const Eos& eos)
{
    double V = shock_speed(pair);
    CharSpeeds cp = char_speeds(eos, pair.plus);
    CharSpeeds cm = char_speeds(eos, pair.minus);
    if (family == ShockFamily::Left)
        return cp.in < V && V < cm.in;
    return cm.out < V && V < cp.out;
}

}  // namespace sphshock
