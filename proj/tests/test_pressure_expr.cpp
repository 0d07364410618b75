#include <doctest.h>

#include "nslab/pressure_expr.hpp"

#include <cmath>

using namespace nslab;

TEST_CASE("parse_pressure_law evaluates rational functions") {
    SUBCASE("1/v") {
        const PressureLaw law = parse_pressure_law("1/v");
        CHECK(std::abs(law.p(Complex(2, 0)) - 0.5) < 1e-15);
        CHECK(std::abs(law.dp(Complex(2, 0)) + 0.25) < 1e-15);
        CHECK(std::abs(law.p(Complex(1, 1)) - Complex(0.5, -0.5)) < 1e-15);
    }
    SUBCASE("gamma-law-like v^-2") {
        const PressureLaw law = parse_pressure_law("v^-2");
        CHECK(std::abs(law.p(Complex(2, 0)) - 0.25) < 1e-15);
        CHECK(std::abs(law.dp(Complex(2, 0)) + 0.25) < 1e-15);  // -2 v^-3
    }
    SUBCASE("polynomials, precedence, unary minus") {
        const PressureLaw law = parse_pressure_law("-v^2 + 3*v - 2");
        CHECK(std::abs(law.p(Complex(2, 0)) - 0.0) < 1e-14);
        CHECK(std::abs(law.dp(Complex(1, 0)) - 1.0) < 1e-14);  // -2v + 3
    }
    SUBCASE("parentheses and division") {
        const PressureLaw law = parse_pressure_law("(v + 1)/(v - 1)");
        CHECK(std::abs(law.p(Complex(3, 0)) - 2.0) < 1e-14);
        // derivative -2/(v-1)^2
        CHECK(std::abs(law.dp(Complex(3, 0)) + 0.5) < 1e-14);
    }
    SUBCASE("scientific-notation coefficients") {
        const PressureLaw law = parse_pressure_law("2.5e-1*v");
        CHECK(std::abs(law.p(Complex(4, 0)) - 1.0) < 1e-15);
    }
}

TEST_CASE("symbolic derivatives pass the pressure-law validator") {
    for (const char* spec :
         {"1/v", "v^-2", "v + 1/v", "(v^2 + 1)/(v^3)", "3.5/v^2 - v"}) {
        const PressureLaw law = parse_pressure_law(spec);
        const std::vector<Complex> probes = {Complex(1, 0), Complex(2, 0.5),
                                             Complex(0.5, -1), Complex(3, 2)};
        CHECK_MESSAGE(validate_pressure_law(law, probes).ok, spec);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS((void)parse_pressure_law(""), ParseError);
    CHECK_THROWS_AS((void)parse_pressure_law("1/"), ParseError);
    CHECK_THROWS_AS((void)parse_pressure_law("v^x"), ParseError);
    CHECK_THROWS_AS((void)parse_pressure_law("(v"), ParseError);
    CHECK_THROWS_AS((void)parse_pressure_law("v + w"), ParseError);
    CHECK_THROWS_AS((void)parse_pressure_law("v 2"), ParseError);
}

TEST_CASE("resolve_pressure_law prefers the exact built-in") {
    const PressureLaw law = resolve_pressure_law("inv_v");
    CHECK(law.name == "inv_v");
    CHECK(law.distance_to_singular(Complex(0.5, 0)) ==
          doctest::Approx(0.5));
    const PressureLaw parsed = resolve_pressure_law("1/v");
    CHECK(parsed.name == "1/v");
}
