#include "sphshock/validate.hpp"

#include <algorithm>
#include <cmath>

namespace sphshock {

using namespace kernels;

AsymptoticQuotients asymptotic_check(const Solution& sol, double band)
{
    const CharGrid& g = *sol.grid;
    const InteractionData& d = sol.data;
    if (band <= 0.0)
        band = 4.0 * g.h();
    AsymptoticQuotients q{0.0, 0.0, 0.0, 0.0, band};
    for (int i = 0; i <= g.n(); ++i) {
        double u = g.u(i);
        for (int j = g.row_lo(i); j <= i; ++j) {
            double v = g.v(j);
            if (v < band)
                continue;
            double v2 = v * v;
            q.q_r = std::max(q.q_r,
                             std::abs(sol.fields.r.at(i, j) - (d.r0 + u / d.Gamma0 + v)) / v2);
            q.q_t = std::max(
                q.q_t, std::abs(sol.time.t.at(i, j) - (v - u / d.Gamma0) / d.eta0) / v2);
            q.q_alpha = std::max(
                q.q_alpha,
                std::abs(sol.fields.alpha(i, j) - (d.beta0 + d.alpha_prime_0 * u)) / v2);
            q.q_beta = std::max(
                q.q_beta,
                std::abs(sol.fields.beta(i, j) - (d.beta0 + d.beta_prime_0 * v)) / v2);
        }
    }
    return q;
}

AsymptoticStability asymptotic_stability(const Solution& coarse, const Solution& fine)
{
    double band = 4.0 * coarse.grid->h();
    AsymptoticStability s{asymptotic_check(coarse, band), asymptotic_check(fine, band), 0.0};
    auto ratio = [](double a, double b) {
        if (a == 0.0 && b == 0.0)
            return 1.0;
        return std::max(a / b, b / a);
    };
    s.max_ratio = std::max({ratio(s.coarse.q_r, s.fine.q_r), ratio(s.coarse.q_t, s.fine.q_t),
                            ratio(s.coarse.q_alpha, s.fine.q_alpha),
                            ratio(s.coarse.q_beta, s.fine.q_beta)});
    return s;
}

JacobianCheck jacobian_check(const Solution& sol)
{
    const CharGrid& g = *sol.grid;
    JacobianCheck out;
    out.expected = -2.0 / (sol.data.eta0 * sol.data.Gamma0);
    // origin from the construction-exact derivative caches
    out.origin = sol.time.dt_du.anchor(0) * sol.fields.dr_dv.anchor(0) -
                 sol.time.dt_dv.anchor(0) * sol.fields.dr_du.anchor(0);
    out.min_abs = std::abs(out.origin);
    bool pos = out.origin > 0.0;
    out.sign_constant = true;
    for (int i = 1; i < g.n(); ++i) {
        for (int j = g.row_lo(i); j <= i; ++j) {
            if (j - 1 < g.row_lo(i) || j + 1 > i)
                continue;
            if (!g.has_node(i - 1, j) || !g.has_node(i + 1, j))
                continue;
            double du_t = (sol.time.t.at(i + 1, j) - sol.time.t.at(i - 1, j)) / (2 * g.hu());
            double dv_t = (sol.time.t.at(i, j + 1) - sol.time.t.at(i, j - 1)) / (2 * g.h());
            double du_r = (sol.fields.r.at(i + 1, j) - sol.fields.r.at(i - 1, j)) / (2 * g.hu());
            double dv_r = (sol.fields.r.at(i, j + 1) - sol.fields.r.at(i, j - 1)) / (2 * g.h());
            double det = du_t * dv_r - dv_t * du_r;
            out.min_abs = std::min(out.min_abs, std::abs(det));
            out.sign_constant = out.sign_constant && ((det > 0.0) == pos);
        }
    }
    return out;
}

RefinementStudy refinement_study(const Problem& prob, const std::vector<int>& resolutions)
{
    if (resolutions.size() < 2)
        raise(ErrKind::ConfigError, "refinement study needs at least two resolutions");
    RefinementStudy st;
    st.resolutions = resolutions;
    // the study measures discretization error, so the fixed-point and
    // root-solve errors must sit well below it at the finest grid
    Problem tight = prob;
    tight.iter.tol_fix = std::min(prob.iter.tol_fix, 1e-13);
    tight.iter.newton.tol = std::min(prob.iter.newton.tol, 1e-15);
    for (int n : resolutions) {
        Solution sol = solve_at(tight, n);
        st.reports.push_back(residuals(sol, prob.eos));
    }
    auto order = [&](auto pick) {
        // least-squares slope of log(residual) against log(h)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = static_cast<int>(resolutions.size());
        for (int k = 0; k < m; ++k) {
            double x = std::log(prob.epsilon / resolutions[k]);
            double y = std::log(std::max(pick(st.reports[k]), 1e-300));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        return (m * sxy - sx * sy) / (m * sxx - sx * sx);
    };
    st.order_char_u = order([](const ResidualReport& r) { return r.char_u; });
    st.order_char_v = order([](const ResidualReport& r) { return r.char_v; });
    st.order_transport_a = order([](const ResidualReport& r) { return r.transport_a; });
    st.order_transport_b = order([](const ResidualReport& r) { return r.transport_b; });
    return st;
}

UniquenessProbe uniqueness_probe(const Problem& prob, int n, double amplitude)
{
    auto grid = std::make_shared<CharGrid>(Region{prob.epsilon, prob.data.a}, n);
    Solution base =
        iterate(prob.data, grid, prob.ahead1, prob.ahead2, prob.eos, prob.iter);

    FieldSet seed = init_fields(prob.data, *grid);
    for (int i = 0; i <= grid->n(); ++i) {
        for (int j = grid->row_lo(i); j <= i; ++j)
            seed.r.at(i, j) += amplitude * grid->v(j) * grid->v(j);
        seed.r.anchor(i) += amplitude * grid->u(i) * grid->u(i);
    }
    Solution pert = iterate(prob.data, grid, prob.ahead1, prob.ahead2, prob.eos, prob.iter,
                            nullptr, &seed);

    UniquenessProbe out;
    out.delta_r = sup_abs_delta(base.fields.r, pert.fields.r, prob.iter.exec);
    out.delta_t = sup_abs_delta(base.time.t, pert.time.t, prob.iter.exec);
    double da = 0.0, db = 0.0;
    for (int i = 0; i <= grid->n(); ++i)
        for (int j = grid->row_lo(i); j <= i; ++j) {
            da = std::max(da, std::abs(base.fields.alpha(i, j) - pert.fields.alpha(i, j)));
            db = std::max(db, std::abs(base.fields.beta(i, j) - pert.fields.beta(i, j)));
        }
    out.delta_alpha = da;
    out.delta_beta = db;
    out.max_delta = std::max({out.delta_r, out.delta_t, out.delta_alpha, out.delta_beta});
    return out;
}

}  // namespace sphshock
