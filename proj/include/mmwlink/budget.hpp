// SPDX-License-Identifier: Apache-2.0
//
// Link-budget composition and feasibility-band classification.
//
// A scenario fixes one link (frequency, geometry, weather, atmosphere) with
// independent on/off toggles per impairment mechanism; evaluate() returns
// the per-mechanism dB contributions over the path plus their exact sum.
//
// classify_bands() partitions a gaseous absorption spectrum into contiguous
// window / moderate / blocked intervals against a two-threshold rule on the
// specific attenuation:
//
//   window   gamma <= gamma_low
//   blocked  gamma >= gamma_high
//   moderate otherwise
//
// Single-sample class flickers shorter than a configurable run length
// (default 3 grid steps) are merged into the dominant neighbour so grid
// noise cannot fabricate intervals.  The default thresholds (0.5 and
// 3 dB/km) are a calibration choice, not a physical constant, and are
// overridable everywhere they are used.

#ifndef MMWLINK_BUDGET_HPP
#define MMWLINK_BUDGET_HPP

#include "mmwlink/fog.hpp"
#include "mmwlink/gas.hpp"
#include "mmwlink/models.hpp"
#include "mmwlink/quantities.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mmwlink::budget
{

/// One link configuration with per-mechanism toggles.  Excluded mechanisms
/// contribute exactly 0 dB; a mechanism whose input is at its null value
/// (rain rate 0, water density 0) contributes 0 dB even when included.
struct scenario
{
    frequency freq{28.0};
    link_geometry geometry{distance(1.0)};
    rain_rate rain{0.0};
    gas::gas_atmosphere atmosphere = gas::gas_atmosphere::standard();
    fog::fog_conditions fog{};
    bool include_rain = true;
    bool include_fog = true;
    bool include_gas = true;
};

/// Per-mechanism attenuation over the path, dB.  total_db is always the
/// exact sum of the four components.
struct attenuation_breakdown
{
    double fspl_db;
    double rain_db;
    double fog_db;
    double gas_db;
    double total_db;
};

/// Evaluates one scenario.  Model-range errors from an included mechanism
/// propagate as out_of_model_range with the mechanism named in the text.
attenuation_breakdown evaluate(const scenario &sc, const model_set &models);

/// Feasibility classes for the band report.
enum class band_class
{
    window,   // gamma <= gamma_low: candidate communication band
    moderate, // between the thresholds
    blocked   // gamma >= gamma_high: absorption peak
};

/// Human-readable class name ("window", "moderate", "blocked").
std::string to_string(band_class cls);

/// Classification thresholds in dB/km; requires 0 < low < high.
struct band_thresholds
{
    double gamma_low_db_per_km = 0.5;
    double gamma_high_db_per_km = 3.0;
};

/// One contiguous classified interval with its attenuation statistics.
struct band_interval
{
    band_class cls;
    double f_start_ghz;
    double f_stop_ghz;
    double gamma_min_db_per_km;
    double gamma_mean_db_per_km;
    double gamma_max_db_per_km;
    std::size_t sample_count;
};

/// Classified partition of a swept range: intervals are contiguous
/// (each starts where the previous one stops), cover the full range, and
/// adjacent intervals always differ in class.
struct band_report
{
    band_thresholds thresholds;
    std::vector<band_interval> intervals;
};

/// Classifies a spectrum.  min_run_samples is the flicker-merge length:
/// runs shorter than this are absorbed into their dominant neighbour.
/// Throws invalid_quantity on an empty spectrum or invalid thresholds.
band_report classify_bands(const gas::absorption_spectrum &spectrum,
                           const band_thresholds &thresholds = {},
                           std::size_t min_run_samples = 3);

} // namespace mmwlink::budget

#endif // MMWLINK_BUDGET_HPP
