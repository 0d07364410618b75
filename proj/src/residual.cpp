#include "nslab/residual.hpp"

#include <cmath>

namespace nslab {

namespace {

Complex probe(const ScalarField& f, double t, double x) {
    const EvalResult r = f(t, x);
    if (r.status == PointStatus::Pole || r.status == PointStatus::NearPole)
        throw StencilHitsPole("stencil point at or near a pole");
    return r.value;
}

}  // namespace

double cr_residual(const ScalarField& field, double t, double x, double h) {
    const Complex ft = (probe(field, t + h, x) - probe(field, t - h, x)) / (2.0 * h);
    const Complex fx = (probe(field, t, x + h) - probe(field, t, x - h)) / (2.0 * h);
    return std::abs(ft - Complex(0.0, 1.0) * fx);
}

double mass_residual(const ScalarField& v_field, const ScalarField& u_field,
                     double t, double x, double h) {
    const Complex vt =
        (probe(v_field, t + h, x) - probe(v_field, t - h, x)) / (2.0 * h);
    const Complex ux =
        (probe(u_field, t, x + h) - probe(u_field, t, x - h)) / (2.0 * h);
    return std::abs(vt - ux);
}

namespace {

struct MomentumStencil {
    double residual;
    bool volume_ok;
};

MomentumStencil momentum_once(const ScalarField& v_field,
                              const ScalarField& u_field,
                              const PressureLaw& law, double t, double x,
                              double h, double guard) {
    const Complex u_tp = probe(u_field, t + h, x);
    const Complex u_tm = probe(u_field, t - h, x);
    const Complex v_xp = probe(v_field, t, x + h);
    const Complex v_xm = probe(v_field, t, x - h);
    const Complex v_c = probe(v_field, t, x);
    const Complex u_xp2 = probe(u_field, t, x + 2.0 * h);
    const Complex u_xm2 = probe(u_field, t, x - 2.0 * h);
    const Complex u_c = probe(u_field, t, x);

    bool volume_ok = true;
    for (Complex v : {v_xp, v_xm, v_c})
        if (std::abs(v) < guard) volume_ok = false;

    const Complex u_t = (u_tp - u_tm) / (2.0 * h);
    const Complex p_x = (law.p(v_xp) - law.p(v_xm)) / (2.0 * h);
    // viscous term: outer central difference of u_x / v at x +- h
    const Complex g_p = ((u_xp2 - u_c) / (2.0 * h)) / v_xp;
    const Complex g_m = ((u_c - u_xm2) / (2.0 * h)) / v_xm;
    const Complex visc = (g_p - g_m) / (2.0 * h);

    return {std::abs(u_t + p_x - visc), volume_ok};
}

}  // namespace

MomentumResult momentum_residual(const ScalarField& v_field,
                                 const ScalarField& u_field,
                                 const PressureLaw& law, double t, double x,
                                 double h, double volume_zero_guard) {
    const MomentumStencil direct =
        momentum_once(v_field, u_field, law, t, x, h, volume_zero_guard);
    if (direct.volume_ok) return {direct.residual, PointStatus::Regular};
    // removable singularity at v = 0: certify on a stencil shifted by 3h
    const MomentumStencil shifted = momentum_once(
        v_field, u_field, law, t, x + 3.0 * h, h, volume_zero_guard);
    return {shifted.residual, PointStatus::NearVolumeZero};
}

VerifyResult verify_grid_fields(const ScalarField& v_field,
                                const ScalarField& u_field,
                                const PressureLaw& law, const GridSpec& grid,
                                double h, double volume_zero_guard) {
    VerifyResult out;
    for (int i = 0; i < grid.nt; ++i) {
        for (int j = 0; j < grid.nx; ++j) {
            const double t = grid.t_at(i);
            const double x = grid.x_at(j);
            const EvalResult at_node = v_field(t, x);
            if (at_node.status == PointStatus::Pole ||
                at_node.status == PointStatus::NearPole) {
                out.summary.pole_skipped++;
                continue;
            }
            try {
                ResidualReport rep{};
                rep.t = t;
                rep.x = x;
                rep.h = h;
                rep.r_cr = cr_residual(u_field, t, x, h);
                rep.r_mass = mass_residual(v_field, u_field, t, x, h);
                const MomentumResult m = momentum_residual(
                    v_field, u_field, law, t, x, h, volume_zero_guard);
                rep.r_momentum = m.residual;
                rep.status = m.status == PointStatus::NearVolumeZero
                                 ? PointStatus::NearVolumeZero
                                 : at_node.status;
                out.summary.max_cr = std::max(out.summary.max_cr, rep.r_cr);
                out.summary.max_mass = std::max(out.summary.max_mass, rep.r_mass);
                out.summary.max_momentum =
                    std::max(out.summary.max_momentum, rep.r_momentum);
                out.reports.push_back(rep);
            } catch (const StencilHitsPole&) {
                out.summary.failed_skipped++;
            }
        }
    }
    return out;
}

ScalarField closed_form_v_field(const SolutionParams& params,
                                const EvalOptions& opt) {
    return [params, opt](double t, double x) {
        return eval_v(Complex(x, t), params, opt);
    };
}

ScalarField closed_form_u_field(const SolutionParams& params,
                                const EvalOptions& opt) {
    return [params, opt](double t, double x) {
        return eval_u(Complex(x, t), params, opt);
    };
}

VerifyResult verify_grid(const SolutionParams& params, const PressureLaw& law,
                         const GridSpec& grid, double h,
                         const EvalOptions& opt) {
    return verify_grid_fields(closed_form_v_field(params, opt),
                              closed_form_u_field(params, opt), law, grid, h,
                              opt.volume_zero_guard);
}

}  // namespace nslab
