#include <doctest.h>

#include "nslab/ode.hpp"
#include "nslab/residual.hpp"

#include <cmath>

using namespace nslab;

namespace {

const SolutionParams kCi{Complex(0, 1), Complex(0, 0)};

ScalarField constant_field(Complex c) {
    return [c](double, double) { return EvalResult{c, PointStatus::Regular}; };
}

}  // namespace

TEST_CASE("cr_residual") {
    const ScalarField u = closed_form_u_field(kCi);
    SUBCASE("exact solution: truncation-level residual") {
        CHECK(cr_residual(u, 1.0, 0.0, 1e-4) <= 1e-6);
    }
    SUBCASE("constant field: zero to rounding") {
        CHECK(cr_residual(constant_field(Complex(2, -3)), 0.5, 0.1, 1e-4) <=
              1e-11);
    }
    SUBCASE("anti-holomorphic field is caught") {
        const ScalarField v = closed_form_v_field(kCi);
        const ScalarField conj_v = [v](double t, double x) {
            EvalResult r = v(t, x);
            r.value = std::conj(r.value);
            return r;
        };
        // conjugation flips the sign in the constraint: residual ~ 2|v_z|
        const double t = 0.5, x = 0.3;
        const Complex vz = eval_v_prime(Complex(x, t), kCi).value;
        REQUIRE(std::abs(vz) >= 0.1);
        const double r = cr_residual(conj_v, t, x, 1e-4);
        CHECK(r >= 0.1);
        CHECK(r == doctest::Approx(2.0 * std::abs(vz)).epsilon(1e-4));
    }
    SUBCASE("stencil touching a pole throws") {
        const SolutionParams c0{Complex(0, 0), Complex(0, 0)};
        const ScalarField u0 = closed_form_u_field(c0);
        CHECK_THROWS_AS((void)cr_residual(u0, 1e-4, kPi / 2.0, 1e-4),
                        StencilHitsPole);
    }
}

TEST_CASE("mass_residual") {
    const ScalarField v = closed_form_v_field(kCi);
    const ScalarField u = closed_form_u_field(kCi);
    SUBCASE("exact solution") {
        CHECK(mass_residual(v, u, 1.0, 0.3, 1e-4) <= 1e-6);
    }
    SUBCASE("constants give zero") {
        CHECK(mass_residual(constant_field(1.0), constant_field(Complex(0, 2)),
                            1.0, 0.0, 1e-4) <= 1e-11);
    }
    SUBCASE("swapped pair leaves a 2|v_z| defect") {
        // u_t = -v_z and v_x = v_z, so |u_t - v_x| = 2|v_z|
        const double t = 0.6, x = 0.2;
        const Complex vz = eval_v_prime(Complex(x, t), kCi).value;
        REQUIRE(std::abs(vz) > 0.05);
        const double r = mass_residual(u, v, t, x, 1e-4);
        CHECK(r == doctest::Approx(2.0 * std::abs(vz)).epsilon(1e-4));
    }
}

TEST_CASE("momentum_residual") {
    const PressureLaw law = inverse_volume_law();
    const ScalarField v = closed_form_v_field(kCi);
    const ScalarField u = closed_form_u_field(kCi);
    SUBCASE("exact solution at h = 1e-3") {
        const MomentumResult m = momentum_residual(v, u, law, 1.0, 0.7, 1e-3);
        CHECK(m.residual <= 1e-4);
        CHECK(m.status == PointStatus::Regular);
    }
    SUBCASE("constant state v = 1 is an equilibrium") {
        const MomentumResult m =
            momentum_residual(constant_field(1.0), constant_field(Complex(0, 1)),
                              law, 0.4, 0.1, 1e-3);
        CHECK(m.residual <= 1e-9);
    }
    SUBCASE("volume zero: shifted stencil, removable singularity") {
        // C = -0.1i puts a volume zero at z = 0.1i, i.e. (t,x) = (0.1, 0)
        const SolutionParams p{Complex(0, -0.1), Complex(0, 0)};
        const ScalarField vz = closed_form_v_field(p);
        const ScalarField uz = closed_form_u_field(p);
        const MomentumResult m =
            momentum_residual(vz, uz, law, 0.1, 2e-4, 1e-3);
        CHECK(m.status == PointStatus::NearVolumeZero);
        CHECK(std::isfinite(m.residual));
        // the singularity is removable: the defect stays bounded (pure
        // truncation, ~4e-2 at this distance) instead of diverging, and
        // falls off quartically with distance from the zero
        CHECK(m.residual <= 0.1);
        const MomentumResult far =
            momentum_residual(vz, uz, law, 0.1, 0.05, 1e-3);
        CHECK(far.status == PointStatus::Regular);
        CHECK(far.residual <= 1e-3);
    }
}

TEST_CASE("verify_grid") {
    const PressureLaw law = inverse_volume_law();
    SUBCASE("Im(C) > 0: clean suite on the upper half-plane") {
        const GridSpec grid{0.5, 2.0, -3.0, 3.0, 15, 15};
        const VerifyResult r = verify_grid(kCi, law, grid, 1e-4);
        CHECK(r.summary.max_cr <= 1e-6);
        CHECK(r.summary.max_mass <= 1e-6);
        CHECK(r.summary.max_momentum <= 1e-3);
        CHECK(r.summary.pole_skipped == 0);
        CHECK(r.summary.failed_skipped == 0);
        CHECK((long)r.reports.size() == 15 * 15);
    }
    SUBCASE("Im(C) < 0: pole-adjacent nodes are skipped at t = 1") {
        const SolutionParams p{Complex(0, -1), Complex(0, 0)};
        // node row exactly at t = 1, column at x = pi/2
        const GridSpec grid{0.5, 1.5, kPi / 2.0 - 1.0, kPi / 2.0 + 1.0, 3, 9};
        const VerifyResult r = verify_grid(p, law, grid, 1e-4);
        CHECK(r.summary.pole_skipped >= 1);
    }
    SUBCASE("Im(C) = 0: initial-data poles on the t = 0 line") {
        const SolutionParams p{Complex(0, 0), Complex(0, 0)};
        const GridSpec grid{0.0, 0.0, -kPi, kPi, 1, 5};  // includes +-pi/2
        const VerifyResult r = verify_grid(p, law, grid, 1e-5);
        CHECK(r.summary.pole_skipped >= 2);
    }
}

TEST_CASE("convergence order of the mass residual is 2") {
    const ScalarField v = closed_form_v_field(kCi);
    const ScalarField u = closed_form_u_field(kCi);
    const double pts[][2] = {{0.5, -1.3}, {0.7, 0.4}, {1.1, 2.0}, {0.6, -0.2}};
    for (const auto& p : pts) {
        const double r2 = mass_residual(v, u, p[0], p[1], 1e-2);
        const double r3 = mass_residual(v, u, p[0], p[1], 1e-3);
        const double r4 = mass_residual(v, u, p[0], p[1], 1e-4);
        const double slope23 = std::log10(r2 / r3);
        const double slope34 = std::log10(r3 / r4);
        CHECK(slope23 == doctest::Approx(2.0).epsilon(0.15));
        CHECK(slope34 == doctest::Approx(2.0).epsilon(0.15));
    }
}

TEST_CASE("non-solutions are rejected: u := 2 i v") {
    const ScalarField v = closed_form_v_field(kCi);
    const ScalarField fake_u = [v](double t, double x) {
        EvalResult r = v(t, x);
        r.value *= Complex(0, 2);
        return r;
    };
    const PressureLaw law = inverse_volume_law();
    const GridSpec grid{0.5, 2.0, -3.0, 3.0, 10, 10};
    const VerifyResult r =
        verify_grid_fields(v, fake_u, law, grid, 1e-4);
    CHECK(r.summary.max_mass >= 0.01);
}

TEST_CASE("cr residuals of v and u vanish or fail together") {
    const ScalarField v = closed_form_v_field(kCi);
    const ScalarField u = closed_form_u_field(kCi);
    // u = i v + C2 makes them proportional
    for (double x : {-1.0, 0.0, 1.5}) {
        const double rv = cr_residual(v, 0.8, x, 1e-4);
        const double ru = cr_residual(u, 0.8, x, 1e-4);
        CHECK(std::abs(rv - ru) <= 1e-10);
    }
}

TEST_CASE("verifier independence: ODE-continued field matches the closed form") {
    const PressureLaw law = inverse_volume_law();
    const GridSpec grid{0.5, 1.0, -1.0, 1.0, 6, 9};
    const Complex v_anchor = eval_v(Complex(grid.x_min, grid.t_min), kCi).value;
    const GridField ode_field(law, 0.0, kCi.C2, grid, v_anchor, 1e-12);
    const ScalarField v = [&](double t, double x) {
        return EvalResult{ode_field.v_at(t, x), PointStatus::Regular};
    };
    const ScalarField u = [&](double t, double x) {
        return EvalResult{ode_field.u_at(t, x), PointStatus::Regular};
    };
    const VerifyResult a = verify_grid_fields(v, u, law, grid, 1e-4);
    const VerifyResult b = verify_grid(kCi, law, grid, 1e-4);
    REQUIRE(a.reports.size() == b.reports.size());
    for (size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(std::abs(a.reports[i].r_cr - b.reports[i].r_cr) <= 1e-7);
        CHECK(std::abs(a.reports[i].r_mass - b.reports[i].r_mass) <= 1e-7);
        CHECK(std::abs(a.reports[i].r_momentum - b.reports[i].r_momentum) <=
              1e-7);
    }
}
