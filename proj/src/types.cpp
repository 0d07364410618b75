#include "nslab/types.hpp"

#include <sstream>

namespace nslab {

const char* to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::InteriorHolomorphic: return "interior_holomorphic";
        case RegimeTag::BoundaryMeromorphic: return "boundary_meromorphic";
        case RegimeTag::FiniteTimeBlowup: return "finite_time_blowup";
    }
    return "?";
}

const char* to_string(PointStatus s) {
    switch (s) {
        case PointStatus::Regular: return "regular";
        case PointStatus::NearPole: return "near_pole";
        case PointStatus::Pole: return "pole";
        case PointStatus::NearVolumeZero: return "near_volume_zero";
    }
    return "?";
}

PressureLaw inverse_volume_law() {
    PressureLaw law;
    law.p = [](Complex v) { return 1.0 / v; };
    law.dp = [](Complex v) { return -1.0 / (v * v); };
    law.name = "inv_v";
    law.singular_distance = [](Complex v) { return std::abs(v); };
    return law;
}

Regime classify_regime(const SolutionParams& params) {
    const double im = params.C.imag();
    if (im > 0.0) return {RegimeTag::InteriorHolomorphic, std::nullopt};
    if (im == 0.0) return {RegimeTag::BoundaryMeromorphic, std::nullopt};
    return {RegimeTag::FiniteTimeBlowup, -im};
}

PressureLawValidation validate_pressure_law(const PressureLaw& law,
                                            const std::vector<Complex>& probes,
                                            double guard_radius) {
    const double h = 1e-6;
    for (Complex v : probes) {
        if (law.distance_to_singular(v) < guard_radius) {
            std::ostringstream os;
            os << "probe (" << v.real() << "," << v.imag()
               << ") inside guard radius of singular set";
            return {false, v, os.str()};
        }
        const Complex exact = law.dp(v);
        const Complex fd = (law.p(v + h) - law.p(v - h)) / (2.0 * h);
        if (std::abs(exact - fd) > 1e-6 * (1.0 + std::abs(exact))) {
            std::ostringstream os;
            os << "dp mismatch at probe (" << v.real() << "," << v.imag()
               << "): |dp - fd| = " << std::abs(exact - fd);
            return {false, v, os.str()};
        }
    }
    return {};
}

}  // namespace nslab
