#include "doctest.h"
#include "oracles.hpp"

using namespace sphshock;

namespace {
const Eos eos{2.0, 1.0};
}

TEST_CASE("point solve reproduces the bisection oracle")
{
    oracles::SymmetricOracle o = oracles::symmetric_oracle(eos, 1.0, 0.4);
    PointSolution sol = solve_point(eos, {1.0, 0.4}, {1.0, -0.4}, 1.0);
    CHECK(sol.behind.rho == doctest::Approx(o.rho0).epsilon(1e-12));
    CHECK(std::abs(sol.behind.w) <= 1e-13);
    CHECK(sol.V1 == doctest::Approx(o.V1).epsilon(1e-12));
    CHECK(std::abs(sol.V1 + sol.V2) <= 1e-11);
    // frozen oracle values
    CHECK(o.rho0 == doctest::Approx(1.30076207280005).epsilon(1e-10));
    CHECK(o.V1 == doctest::Approx(-1.32995492508768).epsilon(1e-10));
}

TEST_CASE("point solve mirror symmetry")
{
    PointSolution fwd = solve_point(eos, {1.0, 0.5}, {1.2, -0.3}, 1.0);
    PointSolution mir = solve_point(eos, {1.2, 0.3}, {1.0, -0.5}, 1.0);
    CHECK(mir.behind.rho == doctest::Approx(fwd.behind.rho).epsilon(1e-12));
    CHECK(mir.behind.w == doctest::Approx(-fwd.behind.w).epsilon(1e-10));
    CHECK(mir.V1 == doctest::Approx(-fwd.V2).epsilon(1e-10));
    CHECK(mir.V2 == doctest::Approx(-fwd.V1).epsilon(1e-10));
}

TEST_CASE("identical ahead states are degenerate")
{
    CHECK_THROWS_AS(solve_point(eos, {1.0, 0.0}, {1.0, 0.0}, 1.0), Error);
    try {
        solve_point(eos, {1.0, 0.0}, {1.0, 0.0}, 1.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::DegenerateJump);
    }
}

TEST_CASE("coordinate ratio a")
{
    CHECK(compute_a(1.0, -0.5, 0.5) == doctest::Approx(1.0 / 9.0));
    oracles::SymmetricOracle o = oracles::symmetric_oracle(eos, 1.0, 0.4);
    CHECK(compute_a(o.eta0, o.V1, o.V2) == doctest::Approx(0.00924556448203).epsilon(1e-9));
    // weak-shock limit approaches 1 from below
    double a = compute_a(1.0, -1e-8, 1e-8);
    CHECK(a < 1.0);
    CHECK(a == doctest::Approx(1.0).epsilon(1e-7));
    CHECK_THROWS_AS(compute_a(1.0, 0.5, -0.5), Error);
}

TEST_CASE("boundary ratio Gamma0")
{
    CHECK(compute_Gamma0(1.0, -0.5) == doctest::Approx(-1.0 / 3.0));
    CHECK(compute_Gamma0(1.0, -1e-9) == doctest::Approx(-1.0).epsilon(1e-8));
    oracles::SymmetricOracle o = oracles::symmetric_oracle(eos, 1.0, 0.4);
    CHECK(compute_Gamma0(o.eta0, o.V1) == doctest::Approx(-0.0961538583835).epsilon(1e-9));
    CHECK_THROWS_AS(compute_Gamma0(1.0, 0.5), Error);
    CHECK_THROWS_AS(compute_Gamma0(1.0, -2.0), Error);
}

TEST_CASE("interaction pipeline identities")
{
    Problem prob = oracles::symmetric_problem(5e-3);
    const InteractionData& d = prob.data;
    CHECK(d.F1_0 * d.F2_0 == doctest::Approx(d.a * d.a).epsilon(1e-10));
    CHECK(d.detM == doctest::Approx(1.0 - d.a * d.a * d.a).epsilon(1e-10));
    CHECK(std::abs(d.shift) <= 1e-12);
    CHECK(d.Gamma0 < 0.0);
    CHECK(d.Gamma0 > -1.0);
    // symmetric data: equal and opposite slopes structure is not expected,
    // but both must be finite and reproducible
    CHECK(std::isfinite(d.alpha_prime_0));
    CHECK(std::isfinite(d.beta_prime_0));
}

TEST_CASE("jacobian of the coordinate map at the origin")
{
    oracles::SymmetricOracle o = oracles::symmetric_oracle(eos, 1.0, 0.4);
    double G0 = o.Gamma0, eta0 = o.eta0, gp = -G0;
    // (5.43) against the inverse of the (u,v)-by-(t,r) matrix with g'(0) = -Gamma0
    double A[2][2] = {{eta0 * gp / 2, -gp / 2}, {eta0 / 2, 0.5}};
    double B[2][2] = {{-1.0 / (eta0 * G0), 1.0 / eta0}, {1.0 / G0, 1.0}};
    double I00 = A[0][0] * B[0][0] + A[0][1] * B[1][0];
    double I01 = A[0][0] * B[0][1] + A[0][1] * B[1][1];
    double I10 = A[1][0] * B[0][0] + A[1][1] * B[1][0];
    double I11 = A[1][0] * B[0][1] + A[1][1] * B[1][1];
    CHECK(I00 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(I01 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(I10 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(I11 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("initial slopes vanish for constant ahead fields")
{
    double eps = 5e-3, r0 = 1.0;
    ValidityBox box{-2 * eps, 2 * eps, r0 - 2 * eps, r0 + 2 * eps};
    auto f1 = std::make_shared<TaylorField>(Side::Left, box, r0, PrimState{1.0, 0.4},
                                            TaylorField::Coeffs{}, TaylorField::Coeffs{});
    auto f2 = std::make_shared<TaylorField>(Side::Right, box, r0, PrimState{1.0, -0.4},
                                            TaylorField::Coeffs{}, TaylorField::Coeffs{});
    ShiftedProblem sp = make_interaction(eos, f1, f2, r0);
    CHECK(std::abs(sp.data.alpha_prime_0) <= 1e-12);
    CHECK(std::abs(sp.data.beta_prime_0) <= 1e-12);
}

TEST_CASE("frame shift on an asymmetric configuration")
{
    double eps = 5e-3, r0 = 1.0;
    ValidityBox box{-2 * eps, 2 * eps, r0 - 2 * eps, r0 + 2 * eps};
    auto f1 = std::make_shared<TaylorField>(Side::Left, box, r0, PrimState{1.0, 0.5},
                                            TaylorField::Coeffs{}, TaylorField::Coeffs{});
    auto f2 = std::make_shared<TaylorField>(Side::Right, box, r0, PrimState{1.2, -0.3},
                                            TaylorField::Coeffs{}, TaylorField::Coeffs{});
    PointSolution raw = solve_point(eos, {1.0, 0.5}, {1.2, -0.3}, r0);
    ShiftedProblem sp = make_interaction(eos, f1, f2, r0);
    CHECK(sp.data.shift == doctest::Approx(raw.behind.w).epsilon(1e-12));
    CHECK(sp.data.V1_0 == doctest::Approx(raw.V1 - raw.behind.w).epsilon(1e-12));
    CHECK(sp.data.V2_0 == doctest::Approx(raw.V2 - raw.behind.w).epsilon(1e-12));
    // the shifted ahead field is at rest relative to the behind state
    CHECK(sp.ahead1->evaluate(0.0, r0).state.w ==
          doctest::Approx(0.5 - raw.behind.w).epsilon(1e-12));
    // a and Gamma0 are frame invariants of the speed differences
    CHECK(sp.data.a == doctest::Approx(compute_a(sp.data.eta0, raw.V1 - raw.behind.w,
                                                 raw.V2 - raw.behind.w)));
    CHECK(sp.data.V1_0 < 0.0);
    CHECK(sp.data.V2_0 > 0.0);
}

TEST_CASE("linear ahead perturbation produces nonzero slopes")
{
    double eps = 5e-3, r0 = 1.0;
    ValidityBox box{-2 * eps, 2 * eps, r0 - 2 * eps, r0 + 2 * eps};
    auto f1 = std::make_shared<TaylorField>(Side::Left, box, r0, PrimState{1.0, 0.4},
                                            TaylorField::Coeffs{0, 0.1, 0, 0, 0},
                                            TaylorField::Coeffs{});
    auto f2 = std::make_shared<TaylorField>(Side::Right, box, r0, PrimState{1.0, -0.4},
                                            TaylorField::Coeffs{0, 0.1, 0, 0, 0},
                                            TaylorField::Coeffs{});
    ShiftedProblem sp = make_interaction(eos, f1, f2, r0);
    CHECK(std::abs(sp.data.alpha_prime_0) > 1e-3);
    CHECK(std::abs(sp.data.beta_prime_0) > 1e-3);
}
