// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "mmwlink/errors.hpp"
#include "mmwlink/quantities.hpp"

#include <cmath>
#include <limits>

using namespace mmwlink;

// ================================================================================================
// SECTION 1: Construction and validation
// ================================================================================================

TEST_CASE("Quantities - positive-only types reject zero, negative and non-finite values")
{
    REQUIRE_THROWS_AS(frequency(0.0), invalid_quantity);
    REQUIRE_THROWS_AS(frequency(-28.0), invalid_quantity);
    REQUIRE_THROWS_AS(frequency(std::numeric_limits<double>::quiet_NaN()), invalid_quantity);
    REQUIRE_THROWS_AS(frequency(std::numeric_limits<double>::infinity()), invalid_quantity);
    REQUIRE_THROWS_AS(distance(0.0), invalid_quantity);
    REQUIRE_THROWS_AS(distance(-1.0), invalid_quantity);
    REQUIRE_THROWS_AS(pressure(0.0), invalid_quantity);
    REQUIRE_THROWS_AS(pressure(-1013.25), invalid_quantity);
    REQUIRE_THROWS_AS(temperature(0.0), invalid_quantity);
    REQUIRE_THROWS_AS(temperature(-5.0), invalid_quantity);
    REQUIRE_NOTHROW(frequency(1.0e-3));
    REQUIRE_NOTHROW(distance(1.0e-6));
}

TEST_CASE("Quantities - nonnegative types accept zero but reject negatives")
{
    REQUIRE_NOTHROW(rain_rate(0.0));
    REQUIRE_NOTHROW(liquid_water_density(0.0));
    REQUIRE_NOTHROW(vapour_density(0.0));
    REQUIRE_THROWS_AS(rain_rate(-0.1), invalid_quantity);
    REQUIRE_THROWS_AS(liquid_water_density(-0.05), invalid_quantity);
    REQUIRE_THROWS_AS(vapour_density(-7.5), invalid_quantity);
    REQUIRE_THROWS_AS(rain_rate(std::numeric_limits<double>::quiet_NaN()), invalid_quantity);
}

TEST_CASE("Quantities - validation errors carry a descriptive message")
{
    try
    {
        frequency(-2.0);
        FAIL("expected invalid_quantity");
    }
    catch (const invalid_quantity &e)
    {
        const std::string what = e.what();
        CHECK(what.find("frequency") != std::string::npos);
        CHECK(what.find("-2") != std::string::npos);
    }
}

// ================================================================================================
// SECTION 2: Unit conversions
// ================================================================================================

TEST_CASE("Quantities - frequency and distance unit accessors")
{
    CHECK(frequency(28.0).ghz() == 28.0);
    CHECK(frequency(28.0).hz() == 28.0e9);
    CHECK(distance(1.5).km() == 1.5);
    CHECK(distance(1.5).meters() == 1500.0);
}

TEST_CASE("Quantities - Celsius/Kelvin conversions are exact affine maps")
{
    CHECK(temperature::from_celsius(15.0).kelvin() == 288.15);
    CHECK(temperature::from_celsius(0.0).kelvin() == 273.15);
    CHECK(celsius_to_kelvin(-40.0).kelvin() == Catch::Approx(233.15).margin(1e-12));
    CHECK(temperature(300.0).celsius() == Catch::Approx(26.85).margin(1e-12));
    REQUIRE_THROWS_AS(celsius_to_kelvin(-273.15), invalid_quantity);
    REQUIRE_THROWS_AS(temperature::from_celsius(-280.0), invalid_quantity);
}

TEST_CASE("Quantities - Kelvin -> Celsius -> Kelvin round-trip over the physical range")
{
    for (double kelvin = 200.0; kelvin <= 320.0; kelvin += 0.37)
    {
        const temperature t(kelvin);
        const temperature back = temperature::from_celsius(t.celsius());
        CHECK(back.kelvin() == Catch::Approx(kelvin).epsilon(1e-15));
    }
}

// ================================================================================================
// SECTION 3: Rain categories
// ================================================================================================

TEST_CASE("Quantities - rain classification boundaries at 0.25/1/4/16/50 mm/h")
{
    CHECK(classify_rain(rain_rate(0.0)) == rain_category::very_light);
    CHECK(classify_rain(rain_rate(0.24)) == rain_category::very_light);
    CHECK(classify_rain(rain_rate(0.25)) == rain_category::light);
    CHECK(classify_rain(rain_rate(0.999)) == rain_category::light);
    CHECK(classify_rain(rain_rate(1.0)) == rain_category::moderate);
    CHECK(classify_rain(rain_rate(3.999)) == rain_category::moderate);
    CHECK(classify_rain(rain_rate(4.0)) == rain_category::heavy);
    CHECK(classify_rain(rain_rate(15.999)) == rain_category::heavy);
    CHECK(classify_rain(rain_rate(16.0)) == rain_category::extreme);
    CHECK(classify_rain(rain_rate(49.999)) == rain_category::extreme);
    CHECK(classify_rain(rain_rate(50.0)) == rain_category::torrential);
    CHECK(classify_rain(rain_rate(200.0)) == rain_category::torrential);
}

TEST_CASE("Quantities - rain classification is monotone in the rate")
{
    rain_category previous = rain_category::very_light;
    for (double rate = 0.0; rate <= 80.0; rate += 0.05)
    {
        const rain_category current = classify_rain(rain_rate(rate));
        CHECK(static_cast<int>(current) >= static_cast<int>(previous));
        previous = current;
    }
}

TEST_CASE("Quantities - rain category names")
{
    CHECK(to_string(rain_category::very_light) == "very_light");
    CHECK(to_string(rain_category::torrential) == "torrential");
}

// ================================================================================================
// SECTION 4: Link geometry
// ================================================================================================

TEST_CASE("Quantities - link geometry validates elevation and tilt ranges")
{
    REQUIRE_NOTHROW(link_geometry(distance(1.0)));
    REQUIRE_NOTHROW(link_geometry(distance(1.0), 45.0, 90.0));
    REQUIRE_NOTHROW(link_geometry(distance(1.0), -90.0, 0.0));
    REQUIRE_THROWS_AS(link_geometry(distance(1.0), 90.5, 0.0), invalid_quantity);
    REQUIRE_THROWS_AS(link_geometry(distance(1.0), -91.0, 0.0), invalid_quantity);
    REQUIRE_THROWS_AS(link_geometry(distance(1.0), 0.0, -1.0), invalid_quantity);
    REQUIRE_THROWS_AS(link_geometry(distance(1.0), 0.0, 91.0), invalid_quantity);
}

TEST_CASE("Quantities - link geometry defaults to the level horizontal-polarization path")
{
    const link_geometry geometry(distance(2.5));
    CHECK(geometry.range().km() == 2.5);
    CHECK(geometry.elevation_deg() == 0.0);
    CHECK(geometry.tilt_deg() == 0.0);
}
