#include "nslab/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nslab {

namespace {

// v and v_z from w = e^{-2i(z+C)}, picking whichever exponential has a
// non-positive real part in its argument.  Both forms give
// v_z = -4i w / (1 + w)^2 with their own w.
struct CoreEval {
    Complex v;
    Complex v_z;
};

CoreEval core_eval(Complex z, const SolutionParams& params) {
    const Complex a = z + params.C;
    const Complex I(0.0, 1.0);
    if (a.imag() > 0.0) {
        // e^{2i(z+C)} decays in the upper half-plane
        const Complex w = std::exp(2.0 * I * a);
        const Complex d = 1.0 + w;
        return {(1.0 - w) / d, -4.0 * I * w / (d * d)};
    }
    const Complex w = std::exp(-2.0 * I * a);
    const Complex d = w + 1.0;
    return {(w - 1.0) / d, -4.0 * I * w / (d * d)};
}

PointStatus status_at(Complex z, Complex v, const SolutionParams& params,
                      const EvalOptions& opt) {
    const double d = pole_distance(z, params);
    if (d < opt.pole_tol) return PointStatus::Pole;
    if (d < opt.guard_radius) return PointStatus::NearPole;
    if (std::abs(v) < opt.volume_zero_guard) return PointStatus::NearVolumeZero;
    return PointStatus::Regular;
}

}  // namespace

double pole_distance(Complex z, const SolutionParams& params) {
    const Complex w = z + params.C - kPi / 2.0;
    const double k = std::round(w.real() / kPi);
    return std::abs(w - k * kPi);
}

EvalResult eval_v(Complex z, const SolutionParams& params,
                  const EvalOptions& opt) {
    const CoreEval c = core_eval(z, params);
    return {c.v, status_at(z, c.v, params, opt)};
}

EvalResult eval_u(Complex z, const SolutionParams& params,
                  const EvalOptions& opt) {
    const EvalResult v = eval_v(z, params, opt);
    return {Complex(0.0, 1.0) * v.value + params.C2, v.status};
}

EvalResult eval_v_prime(Complex z, const SolutionParams& params,
                        const EvalOptions& opt) {
    const CoreEval c = core_eval(z, params);
    return {c.v_z, status_at(z, c.v, params, opt)};
}

std::vector<LatticePoint> enumerate_lattice(const SolutionParams& params,
                                            const Window& window) {
    std::vector<LatticePoint> out;
    // the window is treated as an open set: lattice points exactly on the
    // boundary are excluded
    const double im = -params.C.imag();
    if (!(im > window.im_min && im < window.im_max)) return out;

    auto collect = [&](double offset, LatticeKind kind) {
        // location = offset + pi*k - C
        const double base = offset - params.C.real();
        const long long k_lo =
            (long long)std::floor((window.re_min - base) / kPi) + 1;
        const long long k_hi =
            (long long)std::ceil((window.re_max - base) / kPi) - 1;
        for (long long k = k_lo; k <= k_hi; ++k) {
            const double re = base + kPi * k;
            if (re > window.re_min && re < window.re_max)
                out.push_back({Complex(re, im), k, kind});
        }
    };
    collect(0.0, LatticeKind::Zero);
    collect(kPi / 2.0, LatticeKind::Pole);

    std::sort(out.begin(), out.end(), [](const LatticePoint& a,
                                         const LatticePoint& b) {
        return a.location.real() < b.location.real();
    });
    return out;
}

Complex residue_at_pole(const LatticePoint& pole, const SolutionParams& params,
                        double radius, int nodes, double guard_radius) {
    if (pole.kind != LatticeKind::Pole)
        throw std::invalid_argument("residue_at_pole: point is not a pole");
    // lattice spacing is pi/2; the contour must stay clear of neighbours
    if (radius + guard_radius >= kPi / 2.0)
        throw std::invalid_argument(
            "residue_at_pole: contour reaches a neighbouring lattice point");
    const Complex I(0.0, 1.0);
    Complex sum = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double theta = 2.0 * kPi * j / nodes;
        const Complex e = std::exp(I * theta);
        sum += eval_v(pole.location + radius * e, params).value * e;
    }
    return radius * sum / (double)nodes;
}

std::vector<InitialDatum> initial_data(const std::vector<double>& x_values,
                                       const SolutionParams& params,
                                       const EvalOptions& opt) {
    std::vector<InitialDatum> out;
    out.reserve(x_values.size());
    for (double x : x_values) {
        const Complex z(x, 0.0);
        const EvalResult v = eval_v(z, params, opt);
        const EvalResult u = eval_u(z, params, opt);
        out.push_back({x, v.value, u.value, v.status});
    }
    return out;
}

}  // namespace nslab
