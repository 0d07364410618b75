#pragma once

#include "nslab/types.hpp"

#include <stdexcept>

namespace nslab {

/// First-order reduction of the space-time holomorphic system:
/// v_z = -i * v * (p(v) - v - C_int).
Complex ode_rhs(Complex v, const PressureLaw& law, Complex C_int);

/// u = i * v + C2 (the velocity equation integrated once).
Complex velocity_from_volume(Complex v, Complex C2);

struct OdeProblem {
    PressureLaw law;
    Complex C_int{0.0, 0.0};
    Complex v_start;
    std::vector<Complex> path;  // >= 2 waypoints, consecutive distinct
};

enum class StopReason {
    Completed,
    PoleEncounter,     // |v| exceeded the blow-up threshold
    SingularPressure,  // v entered the law's guarded singular set
    StepUnderflow,     // step below 1e-13 without meeting tolerance
};

struct StepStats {
    long accepted = 0;
    long rejected = 0;
    double min_step = std::numeric_limits<double>::infinity();
};

struct TrajectoryNode {
    Complex z;
    Complex v;
};

struct Trajectory {
    std::vector<TrajectoryNode> nodes;
    StepStats step_stats;
    StopReason stop = StopReason::Completed;

    Complex final_v() const { return nodes.back().v; }
    Complex final_z() const { return nodes.back().z; }
};

struct IntegrateOptions {
    double blowup_threshold = 1e12;   // 1 / pole_tol
    double singular_guard = 1e-3;
};

/// Adaptive Dormand-Prince 5(4) along the straight segments of the path,
/// parameterized by arclength.  PI step controller, safety 0.9, growth
/// capped at 5x.  Blow-up and singular-pressure encounters abort cleanly
/// with a partial trajectory.
Trajectory integrate_path(const OdeProblem& problem, double rel_tol,
                          double abs_tol, const IntegrateOptions& opt = {});

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DenominatorZero : QuadratureError {
    using QuadratureError::QuadratureError;
};
struct NonConvergent : QuadratureError {
    using QuadratureError::QuadratureError;
};

/// The quadrature form of the reduced ODE:
///   z(v) = -C1 + i * integral from ref_point to v of dv' / (-v'^2 + v' p(v') + C_int v')
/// along the straight segment, adaptive Gauss-Kronrod.  The segment is
/// pre-checked for denominator zeros by dense sampling (>= 64 points).
Complex quadrature_map(Complex v, const PressureLaw& law, Complex C1,
                       Complex C_int, Complex ref_point, double tol = 1e-12);

/// ODE-continued solution field on a grid: anchors the reduced ODE at the
/// grid corner and continues node to node, so the closed form is never
/// consulted past the anchor value.  Point queries snap to the nearest
/// grid node and take a short fixed-step refinement from there; all
/// stencil-scale offsets around one node therefore ride a single
/// continued solution.
class GridField {
public:
    GridField(const PressureLaw& law, Complex C_int, Complex C2,
              const GridSpec& grid, Complex v_anchor, double rel_tol = 1e-12);

    Complex v_at(double t, double x) const;
    Complex u_at(double t, double x) const;

private:
    Complex refine(double t, double x) const;

    PressureLaw law_;
    Complex C_int_;
    Complex C2_;
    GridSpec grid_;
    std::vector<Complex> node_v_;  // row-major (t index major)
};

}  // namespace nslab
