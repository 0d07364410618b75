#pragma once

#include "nslab/closed_form.hpp"
#include "nslab/types.hpp"

namespace nslab {

/// A complex-valued field over real (t,x), queried pointwise.  The status
/// lets the verifier steer around poles without knowing where they are.
using ScalarField = std::function<EvalResult(double t, double x)>;

struct StencilHitsPole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResidualReport {
    double t, x, h;
    double r_cr, r_mass, r_momentum;
    PointStatus status;
};

/// |df/dt - i df/dx| by central differences of step h.
double cr_residual(const ScalarField& field, double t, double x, double h);

/// |dv/dt - du/dx| (the mass equation) by central differences.
double mass_residual(const ScalarField& v_field, const ScalarField& u_field,
                     double t, double x, double h);

struct MomentumResult {
    double residual;
    PointStatus status;
};

/// |du/dt + dp/dx - d(u_x / v)/dx|, all central differences with the same
/// step; the viscous term nests an inner u_x at x +- h.  When any stencil
/// point has |v| below the volume-zero guard the stencil is displaced by
/// 3h in x and the result carries status NearVolumeZero (the singularity
/// at v = 0 is removable, so a nearby stencil certifies the equation).
MomentumResult momentum_residual(const ScalarField& v_field,
                                 const ScalarField& u_field,
                                 const PressureLaw& law, double t, double x,
                                 double h, double volume_zero_guard = 1e-3);

struct VerifySummary {
    double max_cr = 0.0;
    double max_mass = 0.0;
    double max_momentum = 0.0;
    long pole_skipped = 0;   // nodes skipped for Pole/NearPole status
    long failed_skipped = 0; // nodes whose stencil hit a pole
};

struct VerifyResult {
    std::vector<ResidualReport> reports;  // grid order (t major, x minor)
    VerifySummary summary;
};

/// Batch driver: the three residuals at every grid node.
VerifyResult verify_grid_fields(const ScalarField& v_field,
                                const ScalarField& u_field,
                                const PressureLaw& law, const GridSpec& grid,
                                double h, double volume_zero_guard = 1e-3);

/// Same, with the closed-form pair as the fields.
VerifyResult verify_grid(const SolutionParams& params, const PressureLaw& law,
                         const GridSpec& grid, double h,
                         const EvalOptions& opt = {});

/// Closed-form fields as point-evaluable (t,x) maps, z = x + i t.
ScalarField closed_form_v_field(const SolutionParams& params,
                                const EvalOptions& opt = {});
ScalarField closed_form_u_field(const SolutionParams& params,
                                const EvalOptions& opt = {});

}  // namespace nslab
