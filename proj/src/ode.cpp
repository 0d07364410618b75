#include "nslab/ode.hpp"

#include <array>
#include <cmath>

namespace nslab {

Complex ode_rhs(Complex v, const PressureLaw& law, Complex C_int) {
    return Complex(0.0, -1.0) * v * (law.p(v) - v - C_int);
}

Complex velocity_from_volume(Complex v, Complex C2) {
    return Complex(0.0, 1.0) * v + C2;
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kMinStep = 1e-13;

}  // namespace

Trajectory integrate_path(const OdeProblem& problem, double rel_tol,
                          double abs_tol, const IntegrateOptions& opt) {
    if (problem.path.size() < 2)
        throw std::invalid_argument("integrate_path: path needs >= 2 waypoints");
    if (rel_tol < 1e-14 || rel_tol > 1e-2 || abs_tol < 1e-14 || abs_tol > 1e-2)
        throw std::invalid_argument("integrate_path: tolerance outside [1e-14, 1e-2]");

    const PressureLaw& law = problem.law;
    const Complex C_int = problem.C_int;

    Trajectory traj;
    traj.nodes.push_back({problem.path.front(), problem.v_start});
    Complex v = problem.v_start;

    if (law.distance_to_singular(v) < opt.singular_guard) {
        traj.stop = StopReason::SingularPressure;
        return traj;
    }

    double err_prev = 1.0;  // PI controller memory

    for (size_t seg = 0; seg + 1 < problem.path.size(); ++seg) {
        const Complex za = problem.path[seg];
        const Complex zb = problem.path[seg + 1];
        const double L = std::abs(zb - za);
        if (L == 0.0)
            throw std::invalid_argument("integrate_path: repeated waypoint");
        const Complex dir = (zb - za) / L;

        auto f = [&](Complex vv) { return dir * ode_rhs(vv, law, C_int); };

        double s = 0.0;
        double h = std::min(L, 0.1);
        while (s < L) {
            if (h > L - s) h = L - s;

            const Complex k1 = f(v);
            const Complex k2 = f(v + h * (a21 * k1));
            const Complex k3 = f(v + h * (a31 * k1 + a32 * k2));
            const Complex k4 = f(v + h * (a41 * k1 + a42 * k2 + a43 * k3));
            const Complex k5 =
                f(v + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            const Complex k6 = f(v + h * (a61 * k1 + a62 * k2 + a63 * k3 +
                                          a64 * k4 + a65 * k5));
            const Complex v5 =
                v + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            const Complex k7 = f(v5);
            const Complex err_vec = h * (e1 * k1 + e3 * k3 + e4 * k4 +
                                         e5 * k5 + e6 * k6 + e7 * k7);

            // target local error well below the requested tolerance so the
            // accumulated error over a long path still lands at tol
            constexpr double kLocalSafety = 50.0;
            const double scale =
                abs_tol + rel_tol * std::max(std::abs(v), std::abs(v5));
            const double err = kLocalSafety * std::abs(err_vec) / scale;

            if (err <= 1.0 || h <= kMinStep) {
                if (err > 1.0) {
                    traj.stop = StopReason::StepUnderflow;
                    return traj;
                }
                s += h;
                v = v5;
                traj.step_stats.accepted++;
                traj.step_stats.min_step =
                    std::min(traj.step_stats.min_step, h);
                traj.nodes.push_back({za + s * dir, v});

                if (std::abs(v) > opt.blowup_threshold) {
                    traj.stop = StopReason::PoleEncounter;
                    return traj;
                }
                if (law.distance_to_singular(v) < opt.singular_guard) {
                    traj.stop = StopReason::SingularPressure;
                    return traj;
                }
            } else {
                traj.step_stats.rejected++;
            }

            // PI controller, safety 0.9, growth capped at 5x
            const double e_clamped = std::max(err, 1e-10);
            double fac = 0.9 * std::pow(e_clamped, -0.7 / 5.0) *
                         std::pow(std::max(err_prev, 1e-10), 0.4 / 5.0);
            fac = std::min(5.0, std::max(0.2, fac));
            if (err <= 1.0) err_prev = e_clamped;
            h = std::max(h * fac, kMinStep);
        }
    }
    return traj;
}

namespace {

// Gauss 7 / Kronrod 15 on [-1, 1]
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkResult {
    Complex integral;
    double error;
};

template <typename F>
GkResult gk15(const F& f, Complex a, Complex b) {
    const Complex center = 0.5 * (a + b);
    const Complex half = 0.5 * (b - a);
    Complex resk = kWgk[7] * f(center);
    Complex resg = kWg[3] * f(center);
    for (int j = 0; j < 7; ++j) {
        const Complex fp = f(center + half * kXgk[j]);
        const Complex fm = f(center - half * kXgk[j]);
        resk += kWgk[j] * (fp + fm);
        if (j % 2 == 1) resg += kWg[j / 2] * (fp + fm);
    }
    return {resk * half, std::abs(resk - resg) * std::abs(half)};
}

template <typename F>
Complex adaptive_gk(const F& f, Complex a, Complex b, double tol, int depth) {
    const GkResult r = gk15(f, a, b);
    if (r.error <= tol * std::max(1.0, std::abs(r.integral))) return r.integral;
    if (depth >= 30)
        throw NonConvergent("quadrature_map: adaptive Gauss-Kronrod failed");
    const Complex mid = 0.5 * (a + b);
    return adaptive_gk(f, a, mid, tol * 0.5, depth + 1) +
           adaptive_gk(f, mid, b, tol * 0.5, depth + 1);
}

}  // namespace

Complex quadrature_map(Complex v, const PressureLaw& law, Complex C1,
                       Complex C_int, Complex ref_point, double tol) {
    if (v == ref_point) return -C1;

    auto denom = [&](Complex w) {
        return -w * w + w * law.p(w) + C_int * w;
    };

    // dense sampling for denominator zeros along the segment
    constexpr int kSamples = 64;
    for (int j = 0; j <= kSamples; ++j) {
        const Complex w = ref_point + (v - ref_point) * (double(j) / kSamples);
        const Complex d = denom(w);
        if (std::abs(d) < 1e-8 * (1.0 + std::abs(w) * std::abs(w)))
            throw DenominatorZero(
                "quadrature_map: segment passes near a denominator zero");
    }

    auto integrand = [&](Complex w) { return 1.0 / denom(w); };
    const Complex integral = adaptive_gk(integrand, ref_point, v, tol, 0);
    return -C1 + Complex(0.0, 1.0) * integral;
}

GridField::GridField(const PressureLaw& law, Complex C_int, Complex C2,
                     const GridSpec& grid, Complex v_anchor, double rel_tol)
    : law_(law), C_int_(C_int), C2_(C2), grid_(grid) {
    if (!grid.valid())
        throw std::invalid_argument("GridField: invalid grid");
    node_v_.assign((size_t)grid.nt * grid.nx, Complex{});

    const double abs_tol = std::max(rel_tol * 1e-2, 1e-14);
    auto continue_to = [&](Complex za, Complex va, Complex zb) {
        if (za == zb) return va;
        OdeProblem prob{law_, C_int_, va, {za, zb}};
        Trajectory t = integrate_path(prob, rel_tol, abs_tol);
        if (t.stop != StopReason::Completed)
            throw std::runtime_error(
                "GridField: continuation hit a pole or singular pressure");
        return t.final_v();
    };

    auto z_node = [&](int i, int j) {
        return Complex(grid.x_at(j), grid.t_at(i));
    };

    // bottom row, then each column upward
    node_v_[0] = v_anchor;
    for (int j = 1; j < grid.nx; ++j)
        node_v_[j] =
            continue_to(z_node(0, j - 1), node_v_[j - 1], z_node(0, j));
    for (int j = 0; j < grid.nx; ++j)
        for (int i = 1; i < grid.nt; ++i)
            node_v_[(size_t)i * grid.nx + j] =
                continue_to(z_node(i - 1, j),
                            node_v_[(size_t)(i - 1) * grid.nx + j],
                            z_node(i, j));
}

Complex GridField::refine(double t, double x) const {
    int i = 0, j = 0;
    if (grid_.nt > 1) {
        const double dt = (grid_.t_max - grid_.t_min) / (grid_.nt - 1);
        i = std::min(grid_.nt - 1,
                     std::max(0, (int)std::lround((t - grid_.t_min) / dt)));
    }
    if (grid_.nx > 1) {
        const double dx = (grid_.x_max - grid_.x_min) / (grid_.nx - 1);
        j = std::min(grid_.nx - 1,
                     std::max(0, (int)std::lround((x - grid_.x_min) / dx)));
    }
    const Complex z0(grid_.x_at(j), grid_.t_at(i));
    const Complex z1(x, t);
    Complex v = node_v_[(size_t)i * grid_.nx + j];
    if (z0 == z1) return v;

    // fixed-step RK4 over the (stencil-scale) remainder
    constexpr int kSteps = 4;
    const Complex h = (z1 - z0) / (double)kSteps;
    for (int s = 0; s < kSteps; ++s) {
        const Complex k1 = h * ode_rhs(v, law_, C_int_);
        const Complex k2 = h * ode_rhs(v + 0.5 * k1, law_, C_int_);
        const Complex k3 = h * ode_rhs(v + 0.5 * k2, law_, C_int_);
        const Complex k4 = h * ode_rhs(v + k3, law_, C_int_);
        v += (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    }
    return v;
}

Complex GridField::v_at(double t, double x) const { return refine(t, x); }

Complex GridField::u_at(double t, double x) const {
    return velocity_from_volume(refine(t, x), C2_);
}

}  // namespace nslab
