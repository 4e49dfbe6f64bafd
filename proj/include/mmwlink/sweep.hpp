// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps over the propagation models, rendered as deterministic
// CSV: `#`-prefixed provenance comments (model versions and fixed
// parameters, never timestamps), one header row, then one row per grid
// point with all values formatted to 6 significant digits.  Identical
// inputs produce byte-identical files for every thread count: workers own
// precomputed row indices and write into preallocated slots.
//
// Named presets reproduce the standard figure configurations:
//
//   fig2  FSPL vs distance, 0.1..10 km step 0.01, at 2.4 / 28 / 100 GHz
//   fig3  FSPL vs frequency, 1..300 GHz step 0.5, at 0.1 / 1 / 10 km
//   fig4  rain attenuation vs frequency, 1..300 GHz step 0.5, horizontal
//         polarization, rates 0.25 / 1 / 4 / 16 / 50 / 100 mm/h
//   fig5  fog attenuation vs frequency, 1..200 GHz step 0.5 at 15 C,
//         densities 0.05 / 0.1 / 0.25 / 0.5 g/m^3
//   fig6  gaseous attenuation vs frequency, 3..300 GHz step 0.1, at
//         1013.25 hPa, 15 C, 7.5 g/m^3 (oxygen / water / total columns)

#ifndef MMWLINK_SWEEP_HPP
#define MMWLINK_SWEEP_HPP

#include "mmwlink/models.hpp"
#include "mmwlink/scenario.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mmwlink::sweeps
{

/// A computed sweep ready for rendering: comment text (without the leading
/// "# "), column names, and preformatted cells.  Cells may be empty where
/// a model declines to extrapolate (fog above 200 GHz).
struct sweep_result
{
    std::vector<std::string> comment_lines;
    std::vector<std::string> column_names;
    std::vector<std::vector<std::string>> rows;
};

/// Evaluates the sweep described by the scenario file.  Throws
/// invalid_quantity when the file has no sweep block; model errors
/// propagate unchanged.
sweep_result run_sweep(const scenario_io::scenario_file &file, const model_set &models,
                       unsigned n_threads = 1);

/// Renders the result as CSV text (LF line endings).
std::string render_csv(const sweep_result &result);

/// Writes render_csv() output; throws io_error on failure.
void write_csv(const sweep_result &result, const std::filesystem::path &out_path);

/// Returns the scenario file behind a named preset (fig2..fig6); throws
/// invalid_quantity for unknown names.
scenario_io::scenario_file preset(const std::string &name);

/// The five preset names in order.
const std::vector<std::string> &preset_names();

/// Formats one value with 6 significant digits (printf %.6g, C locale).
std::string format_value(double value);

} // namespace mmwlink::sweeps

#endif // MMWLINK_SWEEP_HPP
