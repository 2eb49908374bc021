#include "sphshock/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sphshock/validate.hpp"

namespace sphshock {

namespace {

std::ofstream open_out(const RunConfig& cfg, const std::string& name)
{
    std::filesystem::create_directories(cfg.output_dir);
    std::string path = cfg.output_dir + "/" + name;
    std::ofstream out(path);
    if (!out)
        raise(ErrKind::ConfigError, "cannot write " + path);
    return out;
}

std::string g17(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_effective_config(const RunConfig& cfg)
{
    auto out = open_out(cfg, "effective_config.json");
    out << effective_config_json(cfg);
}

struct KV {
    std::ofstream out;
    void put(const std::string& key, double value) { out << key << " = " << g17(value) << "\n"; }
    void put(const std::string& key, const std::string& value)
    {
        out << key << " = " << value << "\n";
    }
    void put(const std::string& key, bool value) { out << key << " = " << (value ? "true" : "false") << "\n"; }
};

template <typename Fn>
int guarded(const RunConfig& cfg, std::ostream& log, Fn body)
{
    try {
        write_effective_config(cfg);
        return body();
    } catch (const Error& e) {
        log << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace

int exit_code_for(ErrKind kind)
{
    switch (kind) {
        case ErrKind::NoConvergence:
        case ErrKind::NonFinite:
            return 3;
        case ErrKind::ConfigError:
        case ErrKind::BadResolution:
            return 4;
        default:
            return 2;
    }
}

int cmd_riemann(const RunConfig& cfg, std::ostream& log)
{
    return guarded(cfg, log, [&]() {
        Problem prob = make_problem(cfg);
        const InteractionData& d = prob.data;

        KV kv{open_out(cfg, "point_summary.txt")};
        kv.put("config_hash", config_hash(cfg));
        kv.put("rho0", d.rho0);
        kv.put("w0", d.shift);
        kv.put("V1_0", d.V1_0 + d.shift);
        kv.put("V2_0", d.V2_0 + d.shift);
        kv.put("V1_0_shifted", d.V1_0);
        kv.put("V2_0_shifted", d.V2_0);
        kv.put("eta0", d.eta0);
        kv.put("beta0", d.beta0);
        kv.put("a", d.a);
        kv.put("Gamma0", d.Gamma0);
        kv.put("alpha_prime_0", d.alpha_prime_0);
        kv.put("beta_prime_0", d.beta_prime_0);
        kv.put("F1_0", d.F1_0);
        kv.put("F2_0", d.F2_0);
        kv.put("detM", d.detM);
        kv.put("detM_minus_1_plus_a3", d.detM - (1.0 - d.a * d.a * d.a));
        kv.put("F1F2_minus_a2", d.F1_0 * d.F2_0 - d.a * d.a);

        ShockPair left{to_primitive(prob.eos, InvState{d.beta0, d.beta0}),
                       to_primitive(prob.eos, d.ahead1_inv0)};
        ShockPair right{to_primitive(prob.eos, InvState{d.beta0, d.beta0}),
                        to_primitive(prob.eos, d.ahead2_inv0)};
        bool det1 = determinism(left, ShockFamily::Left, prob.eos);
        bool det2 = determinism(right, ShockFamily::Right, prob.eos);
        kv.put("determinism_left", det1);
        kv.put("determinism_right", det2);
        log << "interaction point: rho0 = " << g17(d.rho0) << ", a = " << g17(d.a) << "\n";
        return (det1 && det2) ? 0 : 2;
    });
}

namespace {

void write_solution_files(const RunConfig& cfg, const Problem& prob, const Solution& sol,
                          const SolveReport& rep)
{
    const CharGrid& g = *sol.grid;
    std::string hash = config_hash(cfg);

    {
        auto out = open_out(cfg, "fields.csv");
        out << "# config_hash = " << hash << "\n";
        out << "u,v,t,r,alpha,beta,rho,w\n";
        for (int i = 0; i <= g.n(); ++i) {
            for (int j = g.row_lo(i); j <= i; ++j) {
                double al = sol.fields.alpha(i, j);
                double be = sol.fields.beta(i, j);
                PrimState p = to_primitive(prob.eos, {al, be});
                out << g17(g.u(i)) << ',' << g17(g.v(j)) << ',' << g17(sol.time.t.at(i, j))
                    << ',' << g17(sol.fields.r.at(i, j)) << ',' << g17(al) << ',' << g17(be)
                    << ',' << g17(p.rho) << ',' << g17(p.w) << "\n";
            }
        }
    }

    const TraceSet& tr = sol.traces;
    auto write_trace = [&](const std::string& name, const char* param,
                           const std::vector<double>& x, const std::vector<double>& t,
                           const std::vector<double>& r, const std::vector<double>& V,
                           const std::vector<double>& ap, const std::vector<double>& bp,
                           const std::vector<double>& am, const std::vector<double>& bm) {
        auto out = open_out(cfg, name);
        out << "# config_hash = " << hash << "\n";
        out << param << ",t,r,V,J_residual\n";
        for (std::size_t k = 0; k < x.size(); ++k) {
            double J = jump_J(prob.eos, {ap[k], bp[k]}, {am[k], bm[k]});
            out << g17(x[k]) << ',' << g17(t[k]) << ',' << g17(r[k]) << ',' << g17(V[k]) << ','
                << g17(J) << "\n";
        }
    };
    std::vector<double> us(g.n() + 1), vs(g.n() + 1);
    for (int k = 0; k <= g.n(); ++k) {
        us[k] = g.u(k);
        vs[k] = g.v(k);
    }
    write_trace("trace1.csv", "u", us, tr.t1, tr.r1, tr.V1, tr.a1p, tr.b1p, tr.a1m, tr.b1m);
    write_trace("trace2.csv", "v", vs, tr.t2, tr.r2, tr.V2, tr.a2p, tr.b2p, tr.a2m, tr.b2m);

    ResidualReport res = residuals(sol, prob.eos);
    KV kv{open_out(cfg, "run_summary.txt")};
    kv.put("config_hash", hash);
    kv.put("grid_n", static_cast<double>(g.n()));
    kv.put("node_count", static_cast<double>(g.node_count()));
    kv.put("iterations", static_cast<double>(rep.iterations));
    kv.put("converged", rep.converged);
    for (std::size_t m = 0; m < rep.history.size(); ++m) {
        const IterDeltas& dl = rep.history[m];
        kv.out << "delta[" << m << "] = " << g17(dl.r) << ' ' << g17(dl.alpha_tilde) << ' '
               << g17(dl.beta_tilde) << ' ' << g17(dl.trace1) << ' ' << g17(dl.trace2) << "\n";
    }
    for (std::size_t m = 0; m < rep.contraction.size(); ++m)
        kv.put("contraction[" + std::to_string(m) + "]", rep.contraction[m]);
    for (std::size_t m = 0; m < rep.norms.size(); ++m) {
        const DiscreteNorms& nm = rep.norms[m];
        kv.out << "norms[" << m << "] = " << g17(nm.r_c2) << ' ' << g17(nm.alpha_tilde_c2)
               << ' ' << g17(nm.beta_tilde_c2) << ' ' << g17(nm.trace1_c2) << ' '
               << g17(nm.trace2_c2) << "\n";
    }
    kv.put("residual_char_u", res.char_u);
    kv.put("residual_char_v", res.char_v);
    kv.put("residual_transport_a", res.transport_a);
    kv.put("residual_transport_b", res.transport_b);
    kv.put("residual_bc1", res.bc1);
    kv.put("residual_bc2", res.bc2);
    kv.put("residual_J1", res.J1);
    kv.put("residual_J2", res.J2);
    kv.put("residual_mixed_identity", res.mixed_identity);
    kv.put("origin_alpha", res.origin_alpha);
    kv.put("origin_beta", res.origin_beta);
    kv.put("origin_V1", res.origin_V1);
    kv.put("origin_V2", res.origin_V2);
    kv.put("origin_dalpha_du", res.origin_dalpha_du);
    kv.put("origin_dbeta_dv", res.origin_dbeta_dv);
    kv.put("determinism_left_strict", res.determinism1);
    kv.put("determinism_right_strict", res.determinism2);
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& log)
{
    return guarded(cfg, log, [&]() {
        Problem prob = make_problem(cfg);
        SolveReport rep;
        Solution sol = solve_at(prob, cfg.grid_n, &rep);
        write_solution_files(cfg, prob, sol, rep);
        log << "converged in " << rep.iterations << " iterations on "
            << sol.grid->node_count() << " nodes\n";
        return 0;
    });
}

int cmd_validate(const RunConfig& cfg, std::ostream& log)
{
    return guarded(cfg, log, [&]() {
        Problem prob = make_problem(cfg);
        std::string hash = config_hash(cfg);
        KV kv{open_out(cfg, "validation.txt")};
        kv.put("config_hash", hash);
        bool all_pass = true;
        auto check = [&](const std::string& name, bool pass, double value, double tol) {
            kv.out << name << " = " << (pass ? "pass" : "FAIL") << " (value " << g17(value)
                   << ", tolerance " << g17(tol) << ")\n";
            log << (pass ? "pass " : "FAIL ") << name << "\n";
            all_pass = all_pass && pass;
        };

        if (cfg.probes.resolutions.size() >= 2) {
            RefinementStudy st = refinement_study(prob, cfg.probes.resolutions);
            check("refinement_order_char_u", st.order_char_u >= 1.7, st.order_char_u, 1.7);
            check("refinement_order_char_v", st.order_char_v >= 1.7, st.order_char_v, 1.7);
            check("refinement_order_transport_a", st.order_transport_a >= 1.7,
                  st.order_transport_a, 1.7);
            check("refinement_order_transport_b", st.order_transport_b >= 1.7,
                  st.order_transport_b, 1.7);
        } else {
            kv.put("refinement_study", std::string("not run (needs >= 2 resolutions)"));
        }

        Solution sol = solve_at(prob, cfg.grid_n);
        Solution fine = solve_at(prob, 2 * cfg.grid_n);

        AsymptoticStability as = asymptotic_stability(sol, fine);
        kv.put("asymptotic_Q_r", as.coarse.q_r);
        kv.put("asymptotic_Q_t", as.coarse.q_t);
        kv.put("asymptotic_Q_alpha", as.coarse.q_alpha);
        kv.put("asymptotic_Q_beta", as.coarse.q_beta);
        check("asymptotic_stability", as.max_ratio <= 2.0 && std::isfinite(as.max_ratio),
              as.max_ratio, 2.0);

        JacobianCheck jc = jacobian_check(sol);
        check("jacobian_origin",
              std::abs(jc.origin - jc.expected) <= 0.05 * std::abs(jc.expected), jc.origin,
              jc.expected);
        check("jacobian_nondegenerate", jc.min_abs > 0.0 && jc.sign_constant, jc.min_abs, 0.0);

        UniquenessProbe up =
            uniqueness_probe(prob, cfg.grid_n, cfg.probes.perturbation_amplitude);
        check("uniqueness_probe", up.max_delta <= 10.0 * cfg.tol_fix, up.max_delta,
              10.0 * cfg.tol_fix);

        kv.put("all_pass", all_pass);
        return all_pass ? 0 : 2;
    });
}

int cmd_phi(const RunConfig& cfg, std::ostream& log)
{
    return guarded(cfg, log, [&]() {
        const PhiSpec& p = cfg.phi;
        auto f = [&](double x) { return p.a * x + p.c2 * x * x + p.c3 * x * x * x; };
        PhiResult res = phi_normalize(f, p.a, p.x_max, p.n_max, p.tol);

        std::string hash = config_hash(cfg);
        {
            auto out = open_out(cfg, "phi.csv");
            out << "# config_hash = " << hash << "\n";
            out << "x,phi\n";
            for (std::size_t k = 0; k < res.x.size(); ++k)
                out << g17(res.x[k]) << ',' << g17(res.phi[k]) << "\n";
        }
        KV kv{open_out(cfg, "phi_summary.txt")};
        kv.put("config_hash", hash);
        kv.put("iterations", static_cast<double>(res.iterations));
        kv.put("phi0", res.phi.front());
        kv.put("dphi0", res.dphi0);
        kv.put("conjugation_residual", res.conj_residual);
        for (std::size_t m = 0; m + 1 < res.deltas.size(); ++m)
            kv.put("delta_ratio[" + std::to_string(m) + "]",
                   res.deltas[m + 1] / res.deltas[m]);
        log << "phi converged in " << res.iterations
            << " iterations, conjugation residual " << g17(res.conj_residual) << "\n";
        return 0;
    });
}

}  // namespace sphshock
