// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "mmwlink/errors.hpp"
#include "mmwlink/gas.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mmwlink;

namespace
{

const gas::attenuation_model &model()
{
    static const gas::attenuation_model m =
        gas::attenuation_model::load(MMWLINK_TEST_DATA_DIR);
    return m;
}

} // namespace

// ================================================================================================
// SECTION 1: Line tables and asset integrity
// ================================================================================================

TEST_CASE("Gas - spectroscopic tables hold the full line sets")
{
    CHECK(model().oxygen_lines().lines().size() == gas::oxygen_line_count);
    CHECK(model().water_lines().lines().size() == gas::water_line_count);
    CHECK(model().oxygen_lines().species() == gas::gas_species::oxygen);
    CHECK(model().water_lines().species() == gas::gas_species::water_vapour);
}

TEST_CASE("Gas - line centers are strictly ascending")
{
    const auto &lines = model().oxygen_lines().lines();
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(lines[i].f0_ghz > lines[i - 1].f0_ghz);
}

TEST_CASE("Gas - a tampered line table fails its checksum at load")
{
    const std::filesystem::path tmp_dir =
        std::filesystem::temp_directory_path() / "mmwlink_tamper_test";
    std::filesystem::create_directories(tmp_dir);
    std::filesystem::copy_file(std::filesystem::path(MMWLINK_TEST_DATA_DIR) /
                                   "p676_water_lines.csv",
                               tmp_dir / "p676_water_lines.csv",
                               std::filesystem::copy_options::overwrite_existing);

    // Flip one digit in a data row of the oxygen table.
    std::ifstream in(std::filesystem::path(MMWLINK_TEST_DATA_DIR) / "p676_oxygen_lines.csv");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    const std::size_t pos = text.find("118.75");
    REQUIRE(pos != std::string::npos);
    text[pos] = '9';
    std::ofstream out(tmp_dir / "p676_oxygen_lines.csv", std::ios::binary);
    out << text;
    out.close();

    REQUIRE_THROWS_AS(gas::attenuation_model::load(tmp_dir), io_error);
    std::filesystem::remove_all(tmp_dir);
}

// ================================================================================================
// SECTION 2: Atmospheric state
// ================================================================================================

TEST_CASE("Gas - vapour partial pressure follows e = rho T / 216.7")
{
    const gas::gas_atmosphere atmosphere(pressure(1013.25), temperature(288.15),
                                         vapour_density(7.5));
    CHECK(atmosphere.vapour_partial_pressure_hpa() ==
          Catch::Approx(7.5 * 288.15 / 216.7).epsilon(1e-12));
    const gas::gas_atmosphere dry(pressure(1013.25), temperature(288.15), vapour_density(0.0));
    CHECK(dry.vapour_partial_pressure_hpa() == 0.0);
}

TEST_CASE("Gas - standard atmosphere is 1013.25 hPa, 15 C, 7.5 g/m^3")
{
    const gas::gas_atmosphere atmosphere = gas::gas_atmosphere::standard();
    CHECK(atmosphere.dry_pressure_hpa() == 1013.25);
    CHECK(atmosphere.temperature_k() == 288.15);
    CHECK(atmosphere.vapour_density_g_m3() == 7.5);
    CHECK(atmosphere.theta() == Catch::Approx(300.0 / 288.15).epsilon(1e-14));
}

// ================================================================================================
// SECTION 3: Line physics
// ================================================================================================

TEST_CASE("Gas - oxygen line strength is proportional to dry pressure")
{
    const auto &line = model().oxygen_lines().lines()[20];
    const gas::gas_atmosphere full(pressure(1013.25), temperature(288.15), vapour_density(0.0));
    const gas::gas_atmosphere half(pressure(506.625), temperature(288.15), vapour_density(0.0));
    CHECK(gas::line_strength(line, full) / gas::line_strength(line, half) ==
          Catch::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("Gas - water line strength is proportional to vapour density")
{
    const auto &line = model().water_lines().lines()[0];
    const gas::gas_atmosphere low(pressure(1013.25), temperature(288.15), vapour_density(5.0));
    const gas::gas_atmosphere high(pressure(1013.25), temperature(288.15), vapour_density(15.0));
    CHECK(gas::line_strength(line, high) / gas::line_strength(line, low) ==
          Catch::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("Gas - line width grows with pressure")
{
    const auto &line = model().oxygen_lines().lines()[25];
    const gas::gas_atmosphere low(pressure(700.0), temperature(288.15), vapour_density(7.5));
    const gas::gas_atmosphere high(pressure(1013.25), temperature(288.15), vapour_density(7.5));
    CHECK(gas::line_width_ghz(line, high) > gas::line_width_ghz(line, low));
}

TEST_CASE("Gas - line shape is finite and continuous at a line center")
{
    const gas::gas_atmosphere atmosphere = gas::gas_atmosphere::standard();
    const auto &lines = model().oxygen_lines().lines();
    // 118.750334 GHz line: isolated, so the shape dominates locally.
    const auto &line = lines[37];
    REQUIRE(line.f0_ghz == Catch::Approx(118.750334).margin(1e-3));
    const double at_center = gas::line_shape(line, frequency(line.f0_ghz), atmosphere);
    const double near_center =
        gas::line_shape(line, frequency(line.f0_ghz + 1e-3), atmosphere);
    CHECK(std::isfinite(at_center));
    CHECK(at_center > 0.0);
    CHECK(std::fabs(near_center - at_center) / at_center < 1e-3);
}

// ================================================================================================
// SECTION 4: Specific attenuation
// ================================================================================================

TEST_CASE("Gas - frequency validity window is [1, 1000] GHz")
{
    const gas::gas_atmosphere atmosphere = gas::gas_atmosphere::standard();
    REQUIRE_THROWS_AS(model().specific_attenuation(frequency(0.5), atmosphere),
                      out_of_model_range);
    REQUIRE_THROWS_AS(model().specific_attenuation(frequency(1000.1), atmosphere),
                      out_of_model_range);
    REQUIRE_NOTHROW(model().specific_attenuation(frequency(1.0), atmosphere));
    REQUIRE_NOTHROW(model().specific_attenuation(frequency(1000.0), atmosphere));
}

TEST_CASE("Gas - total is exactly oxygen plus water vapour")
{
    const gas::gas_atmosphere atmosphere = gas::gas_atmosphere::standard();
    for (const double f : {5.0, 22.235, 60.0, 94.0, 183.31, 340.0})
    {
        const gas::gas_attenuation gamma =
            model().specific_attenuation(frequency(f), atmosphere);
        CHECK(gamma.total_db_per_km == gamma.oxygen_db_per_km + gamma.water_db_per_km);
        CHECK(gamma.oxygen_db_per_km >= 0.0);
        CHECK(gamma.water_db_per_km >= 0.0);
    }
}

TEST_CASE("Gas - oxygen complex peaks near 60 GHz at 10-20 dB/km")
{
    const gas::gas_attenuation gamma =
        model().specific_attenuation(frequency(60.0), gas::gas_atmosphere::standard());
    CHECK(gamma.total_db_per_km > 10.0);
    CHECK(gamma.total_db_per_km < 20.0);
    CHECK(gamma.oxygen_db_per_km > 0.95 * gamma.total_db_per_km);
}

TEST_CASE("Gas - negligible absorption through the 28-38 GHz window")
{
    const gas::gas_atmosphere atmosphere = gas::gas_atmosphere::standard();
    for (double f = 28.0; f <= 38.0; f += 0.5)
        CHECK(model().specific_attenuation(frequency(f), atmosphere).total_db_per_km < 0.3);
}

TEST_CASE("Gas - the 22.235 GHz water line vanishes with the vapour density")
{
    const gas::gas_atmosphere humid = gas::gas_atmosphere::standard();
    const gas::gas_atmosphere dry(pressure(1013.25), temperature(288.15), vapour_density(0.0));
    CHECK(model().specific_attenuation(frequency(22.235), humid).water_db_per_km > 0.05);
    CHECK(model().specific_attenuation(frequency(22.235), dry).water_db_per_km == 0.0);
}

TEST_CASE("Gas - attenuation decays away from the 118.75 GHz line in dry air")
{
    const gas::gas_atmosphere dry(pressure(1013.25), temperature(288.15), vapour_density(0.0));
    const double at_line = model().specific_attenuation(frequency(118.75), dry).total_db_per_km;
    const double in_window = model().specific_attenuation(frequency(140.0), dry).total_db_per_km;
    CHECK(at_line > 10.0 * in_window);
}

TEST_CASE("Gas - attenuation stays finite and nonnegative at pressure extremes")
{
    for (const double p : {500.0, 1100.0})
    {
        const gas::gas_atmosphere atmosphere(pressure(p), temperature(288.15),
                                             vapour_density(7.5));
        for (double f = 1.0; f <= 1000.0; f += 7.3)
        {
            const gas::gas_attenuation gamma =
                model().specific_attenuation(frequency(f), atmosphere);
            REQUIRE(std::isfinite(gamma.total_db_per_km));
            REQUIRE(gamma.total_db_per_km >= 0.0);
        }
    }
}

// ================================================================================================
// SECTION 5: Spectrum sweeps
// ================================================================================================

TEST_CASE("Gas - sweep produces the inclusive grid")
{
    const gas::absorption_spectrum spectrum =
        model().sweep(gas::gas_atmosphere::standard(), 1.0, 300.0, 0.5);
    REQUIRE(spectrum.samples.size() == 599);
    CHECK(spectrum.samples.front().f_ghz == 1.0);
    CHECK(spectrum.samples.back().f_ghz == Catch::Approx(300.0).margin(1e-9));
    for (std::size_t i = 1; i < spectrum.samples.size(); ++i)
        CHECK(spectrum.samples[i].f_ghz > spectrum.samples[i - 1].f_ghz);
}

TEST_CASE("Gas - sweep output is bitwise identical for any thread count")
{
    const gas::gas_atmosphere atmosphere = gas::gas_atmosphere::standard();
    const gas::absorption_spectrum serial = model().sweep(atmosphere, 10.0, 100.0, 0.05, 1);
    const gas::absorption_spectrum parallel = model().sweep(atmosphere, 10.0, 100.0, 0.05, 7);
    REQUIRE(serial.samples.size() == parallel.samples.size());
    for (std::size_t i = 0; i < serial.samples.size(); ++i)
    {
        CHECK(serial.samples[i].f_ghz == parallel.samples[i].f_ghz);
        CHECK(serial.samples[i].gamma_total_db_per_km ==
              parallel.samples[i].gamma_total_db_per_km);
    }
}

TEST_CASE("Gas - sweep validates its grid")
{
    const gas::gas_atmosphere atmosphere = gas::gas_atmosphere::standard();
    REQUIRE_THROWS_AS(model().sweep(atmosphere, 10.0, 5.0, 0.1), invalid_quantity);
    REQUIRE_THROWS_AS(model().sweep(atmosphere, 10.0, 20.0, 0.0), invalid_quantity);
    REQUIRE_THROWS_AS(model().sweep(atmosphere, 10.0, 20.0, -0.1), invalid_quantity);
    REQUIRE_THROWS_AS(model().sweep(atmosphere, 0.5, 20.0, 0.1), out_of_model_range);
    REQUIRE_THROWS_AS(model().sweep(atmosphere, 10.0, 1001.0, 0.1), out_of_model_range);
}
