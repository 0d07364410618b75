#include <doctest.h>

#include "nslab/types.hpp"

#include <random>

using namespace nslab;

TEST_CASE("classify_regime trichotomy") {
    const Regime r1 = classify_regime({Complex(0, 1), {}});
    CHECK(r1.tag == RegimeTag::InteriorHolomorphic);
    CHECK(!r1.first_blowup_time.has_value());

    const Regime r2 = classify_regime({Complex(0, 0), {}});
    CHECK(r2.tag == RegimeTag::BoundaryMeromorphic);

    const Regime r3 = classify_regime({Complex(0, -1), {}});
    CHECK(r3.tag == RegimeTag::FiniteTimeBlowup);
    REQUIRE(r3.first_blowup_time.has_value());
    CHECK(*r3.first_blowup_time == 1.0);
}

TEST_CASE("classify_regime is the sign of Im(C), independent of Re(C)") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-50.0, 50.0);
    std::uniform_real_distribution<double> im(-10.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double ci = im(rng);
        const Regime r = classify_regime({Complex(re(rng), ci), {}});
        if (ci > 0) CHECK(r.tag == RegimeTag::InteriorHolomorphic);
        if (ci == 0) CHECK(r.tag == RegimeTag::BoundaryMeromorphic);
        if (ci < 0) {
            CHECK(r.tag == RegimeTag::FiniteTimeBlowup);
            CHECK(*r.first_blowup_time == -ci);
            CHECK(*r.first_blowup_time > 0.0);
        }
        // scaling the real part never changes the tag
        const Regime r2 = classify_regime({Complex(3.0 * re(rng), ci), {}});
        CHECK(r2.tag == r.tag);
    }
}

TEST_CASE("validate_pressure_law accepts the exact inv_v derivative") {
    const PressureLaw law = inverse_volume_law();
    const std::vector<Complex> probes = {Complex(1, 0), Complex(2, 0),
                                         Complex(1, 1)};
    CHECK(validate_pressure_law(law, probes).ok);
}

TEST_CASE("validate_pressure_law catches a sign error") {
    PressureLaw bad = inverse_volume_law();
    bad.dp = [](Complex v) { return 1.0 / (v * v); };
    const PressureLawValidation r = validate_pressure_law(bad, {Complex(1, 0)});
    CHECK(!r.ok);
    REQUIRE(r.failed_probe.has_value());
    CHECK(*r.failed_probe == Complex(1, 0));
}

TEST_CASE("validate_pressure_law rejects probes inside the singular guard") {
    const PressureLaw law = inverse_volume_law();
    const PressureLawValidation r =
        validate_pressure_law(law, {Complex(1e-8, 0)});
    CHECK(!r.ok);
    CHECK(r.reason.find("guard") != std::string::npos);
}
