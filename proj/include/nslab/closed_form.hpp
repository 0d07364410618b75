#pragma once

#include "nslab/types.hpp"

namespace nslab {

/// Zero/pole lattice of the closed-form solution:
/// zeros at pi*k - C, poles at pi/2 + pi*k - C.
enum class LatticeKind { Zero, Pole };

struct LatticePoint {
    Complex location;
    long long index;  // k
    LatticeKind kind;
};

struct EvalResult {
    Complex value;
    PointStatus status;
};

/// Specific volume v(z) = (e^{-2i(z+C)} - 1) / (e^{-2i(z+C)} + 1).
/// The exponential is always taken with non-positive real part in the
/// exponent so evaluation never overflows; the value tends to +-1 far
/// from the lattice. Poles are reported through the status, never thrown.
EvalResult eval_v(Complex z, const SolutionParams& params,
                  const EvalOptions& opt = {});

/// Velocity u(z) = i * v(z) + C2, same status as eval_v.
EvalResult eval_u(Complex z, const SolutionParams& params,
                  const EvalOptions& opt = {});

/// dv/dz = -4i w / (w + 1)^2 with w = e^{-2i(z+C)}; equals -i(1 - v^2).
EvalResult eval_v_prime(Complex z, const SolutionParams& params,
                        const EvalOptions& opt = {});

/// Distance from z to the nearest pole lattice point.
double pole_distance(Complex z, const SolutionParams& params);

struct Window {
    double re_min, re_max;
    double im_min, im_max;
};

/// Every zero and pole inside the window, sorted by real part.
/// The k-range comes from the window bounds directly; no root search.
std::vector<LatticePoint> enumerate_lattice(const SolutionParams& params,
                                            const Window& window);

/// (1/2 pi i) * contour integral of v around the pole, trapezoidal rule.
/// Throws std::invalid_argument if the contour comes within guard_radius
/// of another lattice point.
Complex residue_at_pole(const LatticePoint& pole, const SolutionParams& params,
                        double radius = 0.1, int nodes = 256,
                        double guard_radius = 1e-3);

struct InitialDatum {
    double x;
    Complex v0;
    Complex u0;
    PointStatus status;
};

/// Cauchy data v(0,x), u(0,x): closed form evaluated at z = x + 0i.
std::vector<InitialDatum> initial_data(const std::vector<double>& x_values,
                                       const SolutionParams& params,
                                       const EvalOptions& opt = {});

}  // namespace nslab
