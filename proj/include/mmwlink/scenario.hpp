// SPDX-License-Identifier: Apache-2.0
//
// JSON scenario files: one link configuration plus an optional sweep block.
//
// Schema (all numbers are JSON numbers, all toggles JSON booleans):
//
//   {
//     "frequency_ghz": 28.0,            required
//     "distance_km": 1.0,               required
//     "elevation_deg": 0.0,
//     "tilt_deg": 0.0,                  0 = horizontal polarization
//     "rain_rate_mm_h": 0.0,
//     "fog_water_density_g_m3": 0.0,
//     "fog_temperature_c": 15.0,
//     "dry_pressure_hpa": 1013.25,
//     "temperature_c": 15.0,
//     "vapour_density_g_m3": 7.5,
//     "include_rain": true,
//     "include_fog": true,
//     "include_gas": true,
//     "sweep": {                        optional
//       "quantity": "fspl" | "rain" | "fog" | "gas" | "budget",
//       "axis": "frequency" | "distance",
//       "start": 1.0, "stop": 300.0, "step": 0.5,
//       "family": [0.25, 1, 4, 16, 50]
//     }
//   }
//
// Parsing is strict: unknown keys are rejected, as are type mismatches.
// The family list holds the curve-family parameter (the other axis for
// fspl, rain rates for rain, liquid water densities for fog) and must be
// absent or empty for gas and budget sweeps, whose columns are fixed.

#ifndef MMWLINK_SCENARIO_HPP
#define MMWLINK_SCENARIO_HPP

#include "mmwlink/budget.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mmwlink::scenario_io
{

enum class sweep_axis
{
    frequency,
    distance
};

enum class sweep_quantity
{
    fspl,
    rain,
    fog,
    gas,
    budget
};

/// One parameter sweep: swept axis, inclusive grid, and curve family.
struct sweep_spec
{
    sweep_quantity quantity = sweep_quantity::fspl;
    sweep_axis axis = sweep_axis::frequency;
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    std::vector<double> family;
};

/// Parsed scenario file: the base link plus the optional sweep block.
struct scenario_file
{
    budget::scenario base;
    std::optional<sweep_spec> sweep;
};

/// Parses scenario JSON text.  Throws invalid_quantity on schema
/// violations (unknown keys, missing required keys, bad types or values).
scenario_file parse_scenario_json(const std::string &text);

/// Serializes with a fixed key order and all keys explicit, so that
/// load -> serialize -> load is an identity.
std::string serialize_scenario(const scenario_file &file);

/// File variants of the two operations; throw io_error when the file
/// cannot be read or written.
scenario_file load_scenario_file(const std::filesystem::path &path);
void save_scenario_file(const scenario_file &file, const std::filesystem::path &path);

} // namespace mmwlink::scenario_io

#endif // MMWLINK_SCENARIO_HPP
