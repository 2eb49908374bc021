// Timing comparison of the serial reference kernels against the OpenMP path
// on one full scheme sweep (time field + r update + invariant update).
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sphshock/validate.hpp"

using namespace sphshock;
using clock_type = std::chrono::high_resolution_clock;

static Problem symmetric_problem(double eps)
{
    Eos eos{2.0, 1.0};
    double r0 = 1.0;
    ValidityBox box{-2.0 * eps, 2.0 * eps, r0 - 2.0 * eps, r0 + 2.0 * eps};
    auto f1 = std::make_shared<TaylorField>(Side::Left, box, r0, PrimState{1.0, 0.4},
                                            TaylorField::Coeffs{-0.8, 0, 0, 0, 0},
                                            TaylorField::Coeffs{});
    auto f2 = std::make_shared<TaylorField>(Side::Right, box, r0, PrimState{1.0, -0.4},
                                            TaylorField::Coeffs{0.8, 0, 0, 0, 0},
                                            TaylorField::Coeffs{});
    ShiftedProblem sp = make_interaction(eos, f1, f2, r0);
    Problem prob;
    prob.eos = eos;
    prob.data = sp.data;
    prob.ahead1 = sp.ahead1;
    prob.ahead2 = sp.ahead2;
    prob.epsilon = eps;
    return prob;
}

static double time_sweeps(const Problem& prob, const CharGrid& grid, Exec exec, int reps)
{
    FieldSet fields = init_fields(prob.data, grid);
    auto t1 = clock_type::now();
    for (int k = 0; k < reps; ++k) {
        TimeField tf = time_field(grid, fields, prob.eos, exec);
        TraceSet tr = shock_traces(grid, fields, tf, *prob.ahead1, *prob.ahead2, prob.eos);
        shock_speeds(tr, prob.eos);
        gammas(tr, grid, prob.eos);
        RUpdate ru = update_r(grid, fields, tr, prob.data, prob.eos, exec);
        InvariantUpdate iu =
            update_invariants(grid, fields, tf, tr, prob.eos, HSolveOptions{}, exec);
        fields.r = std::move(ru.r);
        fields.dr_du = std::move(ru.dr_du);
        fields.dr_dv = std::move(ru.dr_dv);
        fields.alpha_tilde = std::move(iu.alpha_tilde);
        fields.beta_tilde = std::move(iu.beta_tilde);
        fields.trace1_alpha = std::move(iu.trace1_alpha);
        fields.trace2_beta = std::move(iu.trace2_beta);
    }
    auto t2 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t2 - t1).count() / reps;
}

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    Problem prob = symmetric_problem(5e-3);
    std::printf("%8s %10s %12s %12s %8s\n", "N", "nodes", "serial[ms]", "openmp[ms]", "speedup");
    for (int n : {128, 256, 512, 1024}) {
        CharGrid grid(Region{prob.epsilon, prob.data.a}, n);
        int reps = n <= 256 ? 20 : 5;
        double ts = time_sweeps(prob, grid, Exec::Serial, reps);
        double tp = time_sweeps(prob, grid, Exec::Parallel, reps);
        std::printf("%8d %10zu %12.3f %12.3f %8.2f\n", n, grid.node_count(), ts, tp, ts / tp);
    }
    return 0;
}
