#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace nslab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Integration constants selecting a member of the solution family:
/// C shifts the zero/pole lattice, C2 is the additive velocity offset.
struct SolutionParams {
    Complex C{0.0, 0.0};
    Complex C2{0.0, 0.0};
};

enum class RegimeTag {
    InteriorHolomorphic,   // Im(C) > 0
    BoundaryMeromorphic,   // Im(C) = 0
    FiniteTimeBlowup,      // Im(C) < 0
};

struct Regime {
    RegimeTag tag;
    std::optional<double> first_blowup_time;  // present only for FiniteTimeBlowup
};

enum class PointStatus {
    Regular,
    NearPole,
    Pole,
    NearVolumeZero,
};

const char* to_string(RegimeTag tag);
const char* to_string(PointStatus s);

/// A holomorphic pressure law p(v) with its complex derivative.
/// singular_distance, when set, returns the distance from v to the law's
/// singular set; evaluation inside the guard radius is rejected.
struct PressureLaw {
    std::function<Complex(Complex)> p;
    std::function<Complex(Complex)> dp;
    std::string name;
    std::function<double(Complex)> singular_distance;  // may be empty

    double distance_to_singular(Complex v) const {
        return singular_distance ? singular_distance(v)
                                 : std::numeric_limits<double>::infinity();
    }
};

/// The built-in law p = 1/v, singular only at v = 0.
PressureLaw inverse_volume_law();

/// Tolerances shared by pole detection and evaluation status reporting.
struct EvalOptions {
    double pole_tol = 1e-12;         // absolute distance in z
    double guard_radius = 1e-3;      // NearPole band
    double volume_zero_guard = 1e-3; // |v| below this flags NearVolumeZero
};

/// Sign trichotomy of Im(C). Exact: no epsilon band at Im(C) = 0.
/// Callers wanting robustness against rounding should perturb C themselves.
Regime classify_regime(const SolutionParams& params);

struct PressureLawValidation {
    bool ok = true;
    std::optional<Complex> failed_probe;
    std::string reason;
};

/// Checks dp against a central-difference estimate of p at each probe,
/// tolerance 1e-6 * (1 + |dp|). Probes inside the guard radius of the
/// law's singular set are rejected.
PressureLawValidation validate_pressure_law(const PressureLaw& law,
                                            const std::vector<Complex>& probes,
                                            double guard_radius = 1e-3);

/// Rectangular (t,x) sampling grid. Inclusive bounds, nt/nx >= 1.
struct GridSpec {
    double t_min, t_max;
    double x_min, x_max;
    int nt, nx;

    bool valid() const {
        return t_min <= t_max && x_min <= x_max && nt >= 1 && nx >= 1 &&
               std::isfinite(t_min) && std::isfinite(t_max) &&
               std::isfinite(x_min) && std::isfinite(x_max);
    }
    double t_at(int i) const {
        return nt == 1 ? t_min : t_min + i * (t_max - t_min) / (nt - 1);
    }
    double x_at(int j) const {
        return nx == 1 ? x_min : x_min + j * (x_max - x_min) / (nx - 1);
    }
};

}  // namespace nslab
