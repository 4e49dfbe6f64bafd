// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/sweep.hpp"
#include "mmwlink/detail/parallel_for.hpp"
#include "mmwlink/errors.hpp"
#include "mmwlink/fspl.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mmwlink::sweeps
{

using scenario_io::scenario_file;
using scenario_io::sweep_axis;
using scenario_io::sweep_quantity;
using scenario_io::sweep_spec;

std::string format_value(double value)
{
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return std::string(buffer);
}

namespace
{

std::size_t grid_size(const sweep_spec &spec)
{
    return static_cast<std::size_t>(std::floor((spec.stop - spec.start) / spec.step + 1e-9)) + 1;
}

double grid_value(const sweep_spec &spec, std::size_t index)
{
    const double value = spec.start + static_cast<double>(index) * spec.step;
    return value > spec.stop ? spec.stop : value; // guard the last point against roundoff
}

std::string family_labels(const std::string &prefix, const std::vector<double> &family,
                          std::vector<std::string> &columns)
{
    std::string joined;
    for (const double value : family)
    {
        columns.push_back(prefix + format_value(value));
        if (!joined.empty())
            joined += ", ";
        joined += format_value(value);
    }
    return joined;
}

sweep_result sweep_fspl(const sweep_spec &spec, unsigned n_threads)
{
    sweep_result result;
    const bool distance_axis = spec.axis == sweep_axis::distance;
    result.comment_lines = {
        std::string("mmwlink sweep: free-space path loss vs ") +
            (distance_axis ? "distance" : "frequency"),
        "model: FSPL(dB) = 20 log10(d_km) + 20 log10(f_GHz) + 92.45"};
    result.column_names = {distance_axis ? "distance_km" : "frequency_ghz"};

    const std::string joined = family_labels(distance_axis ? "fspl_db_f" : "fspl_db_d",
                                             spec.family, result.column_names);
    result.comment_lines.push_back(
        (distance_axis ? "family: carrier frequency, GHz: " : "family: link range, km: ") +
        joined);

    // Validate the family once up front so errors do not depend on the
    // thread partition.
    for (const double value : spec.family)
    {
        if (distance_axis)
            frequency check(value);
        else
            distance check(value);
    }

    const std::size_t count = grid_size(spec);
    result.rows.resize(count);
    detail::parallel_for(count, n_threads, [&](std::size_t i) {
        const double axis_value = grid_value(spec, i);
        auto &row = result.rows[i];
        row.reserve(1 + spec.family.size());
        row.push_back(format_value(axis_value));
        for (const double member : spec.family)
        {
            const double db = distance_axis
                                  ? fspl::fspl_db(frequency(member), distance(axis_value))
                                  : fspl::fspl_db(frequency(axis_value), distance(member));
            row.push_back(format_value(db));
        }
    });
    return result;
}

sweep_result sweep_rain(const sweep_spec &spec, const scenario_file &file,
                        const model_set &models, unsigned n_threads)
{
    sweep_result result;
    const link_geometry &geometry = file.base.geometry;
    result.comment_lines = {
        "mmwlink sweep: rain specific attenuation vs frequency",
        "model: ITU-R P.838-3 (2005) power law, gamma_R = k R^alpha",
        "polarization tilt " + format_value(geometry.tilt_deg()) + " deg, path elevation " +
            format_value(geometry.elevation_deg()) + " deg"};
    result.column_names = {"frequency_ghz"};
    const std::string joined = family_labels("gamma_db_km_r", spec.family, result.column_names);
    result.comment_lines.push_back("family: rain rate, mm/h: " + joined);

    std::vector<rain_rate> rates;
    rates.reserve(spec.family.size());
    for (const double value : spec.family)
        rates.emplace_back(value);

    const std::size_t count = grid_size(spec);
    result.rows.resize(count);
    detail::parallel_for(count, n_threads, [&](std::size_t i) {
        const double f_ghz = grid_value(spec, i);
        const rain::coefficient_set hv =
            rain::coefficients_hv(frequency(f_ghz), models.rain_table);
        const rain::rain_coefficients combined = rain::combine_polarization(hv, geometry);
        auto &row = result.rows[i];
        row.reserve(1 + rates.size());
        row.push_back(format_value(f_ghz));
        for (const rain_rate &rate : rates)
            row.push_back(format_value(rain::specific_attenuation(combined, rate)));
    });
    return result;
}

sweep_result sweep_fog(const sweep_spec &spec, const scenario_file &file, unsigned n_threads)
{
    sweep_result result;
    const temperature droplet_temp = file.base.fog.temp;
    result.comment_lines = {
        "mmwlink sweep: fog/cloud specific attenuation vs frequency",
        "model: ITU-R P.840 (2013 edition) double-Debye, gamma_c = K_l(f, T) M",
        "droplet temperature " + format_value(droplet_temp.celsius()) + " C"};
    result.column_names = {"frequency_ghz"};
    const std::string joined = family_labels("gamma_db_km_m", spec.family, result.column_names);
    result.comment_lines.push_back("family: liquid water density, g/m^3: " + joined);
    if (spec.stop > fog::max_attenuation_frequency_ghz)
        result.comment_lines.push_back("frequencies above the 200 GHz model limit have empty "
                                       "cells (no extrapolation)");

    std::vector<liquid_water_density> densities;
    densities.reserve(spec.family.size());
    for (const double value : spec.family)
        densities.emplace_back(value);

    const std::size_t count = grid_size(spec);
    result.rows.resize(count);
    detail::parallel_for(count, n_threads, [&](std::size_t i) {
        const double f_ghz = grid_value(spec, i);
        auto &row = result.rows[i];
        row.reserve(1 + densities.size());
        row.push_back(format_value(f_ghz));
        if (f_ghz > fog::max_attenuation_frequency_ghz)
        {
            row.insert(row.end(), densities.size(), std::string());
            return;
        }
        const double kl = fog::specific_attenuation_coefficient(frequency(f_ghz), droplet_temp);
        for (const liquid_water_density &density : densities)
            row.push_back(format_value(kl * density.g_per_m3()));
    });
    return result;
}

sweep_result sweep_gas(const sweep_spec &spec, const scenario_file &file, const model_set &models,
                       unsigned n_threads)
{
    sweep_result result;
    const gas::gas_atmosphere &atmosphere = file.base.atmosphere;
    result.comment_lines = {
        "mmwlink sweep: gaseous specific attenuation vs frequency",
        "model: ITU-R P.676-10 (2013) line-by-line",
        "dry pressure " + format_value(atmosphere.dry_pressure_hpa()) + " hPa, temperature " +
            format_value(atmosphere.temperature_k() - 273.15) + " C, vapour density " +
            format_value(atmosphere.vapour_density_g_m3()) + " g/m^3"};
    result.column_names = {"frequency_ghz", "gamma_oxygen_db_km", "gamma_water_db_km",
                           "gamma_total_db_km"};

    const gas::absorption_spectrum spectrum =
        models.gas_model.sweep(atmosphere, spec.start, spec.stop, spec.step, n_threads);
    result.rows.resize(spectrum.samples.size());
    for (std::size_t i = 0; i < spectrum.samples.size(); ++i)
    {
        const gas::spectrum_sample &sample = spectrum.samples[i];
        result.rows[i] = {format_value(sample.f_ghz),
                          format_value(sample.gamma_oxygen_db_per_km),
                          format_value(sample.gamma_water_db_per_km),
                          format_value(sample.gamma_total_db_per_km)};
    }
    return result;
}

sweep_result sweep_budget(const sweep_spec &spec, const scenario_file &file,
                          const model_set &models, unsigned n_threads)
{
    sweep_result result;
    const budget::scenario &base = file.base;
    const bool distance_axis = spec.axis == sweep_axis::distance;
    result.comment_lines = {
        std::string("mmwlink sweep: link attenuation budget vs ") +
            (distance_axis ? "distance" : "frequency"),
        "models: FSPL + ITU-R P.838-3 rain + ITU-R P.840 fog + ITU-R P.676-10 gases",
        (distance_axis ? "frequency " + format_value(base.freq.ghz()) + " GHz"
                       : "range " + format_value(base.geometry.range().km()) + " km") +
            ", elevation " + format_value(base.geometry.elevation_deg()) + " deg, tilt " +
            format_value(base.geometry.tilt_deg()) + " deg",
        "rain rate " + format_value(base.rain.mm_per_hour()) + " mm/h (" +
            (base.include_rain ? "included" : "excluded") + "), fog " +
            format_value(base.fog.water_density.g_per_m3()) + " g/m^3 at " +
            format_value(base.fog.temp.celsius()) + " C (" +
            (base.include_fog ? "included" : "excluded") + ")",
        "atmosphere " + format_value(base.atmosphere.dry_pressure_hpa()) + " hPa, " +
            format_value(base.atmosphere.temperature_k() - 273.15) + " C, " +
            format_value(base.atmosphere.vapour_density_g_m3()) + " g/m^3 (" +
            (base.include_gas ? "included" : "excluded") + ")"};
    result.column_names = {distance_axis ? "distance_km" : "frequency_ghz", "fspl_db",
                           "rain_db", "fog_db", "gas_db", "total_db"};

    const std::size_t count = grid_size(spec);
    result.rows.resize(count);
    detail::parallel_for(count, n_threads, [&](std::size_t i) {
        const double axis_value = grid_value(spec, i);
        budget::scenario sc = base;
        if (distance_axis)
            sc.geometry = link_geometry(distance(axis_value), base.geometry.elevation_deg(),
                                        base.geometry.tilt_deg());
        else
            sc.freq = frequency(axis_value);
        const budget::attenuation_breakdown breakdown = budget::evaluate(sc, models);
        result.rows[i] = {format_value(axis_value),        format_value(breakdown.fspl_db),
                          format_value(breakdown.rain_db), format_value(breakdown.fog_db),
                          format_value(breakdown.gas_db),  format_value(breakdown.total_db)};
    });
    return result;
}

} // namespace

sweep_result run_sweep(const scenario_file &file, const model_set &models, unsigned n_threads)
{
    if (!file.sweep)
        throw invalid_quantity("sweep: the scenario file has no sweep block");
    const sweep_spec &spec = *file.sweep;
    switch (spec.quantity)
    {
    case sweep_quantity::fspl:
        return sweep_fspl(spec, n_threads);
    case sweep_quantity::rain:
        return sweep_rain(spec, file, models, n_threads);
    case sweep_quantity::fog:
        return sweep_fog(spec, file, n_threads);
    case sweep_quantity::gas:
        return sweep_gas(spec, file, models, n_threads);
    case sweep_quantity::budget:
        return sweep_budget(spec, file, models, n_threads);
    }
    throw invalid_quantity("sweep: unknown quantity value");
}

std::string render_csv(const sweep_result &result)
{
    std::ostringstream out;
    for (const auto &comment : result.comment_lines)
        out << "# " << comment << '\n';
    for (std::size_t i = 0; i < result.column_names.size(); ++i)
        out << (i == 0 ? "" : ",") << result.column_names[i];
    out << '\n';
    for (const auto &row : result.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i == 0 ? "" : ",") << row[i];
        out << '\n';
    }
    return out.str();
}

void write_csv(const sweep_result &result, const std::filesystem::path &out_path)
{
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw io_error("cannot open output file '" + out_path.string() + "' for writing");
    out << render_csv(result);
    out.flush();
    if (!out)
        throw io_error("write failure on output file '" + out_path.string() + "'");
}

scenario_io::scenario_file preset(const std::string &name)
{
    scenario_io::scenario_file file;
    sweep_spec spec;
    if (name == "fig2")
    {
        spec = {sweep_quantity::fspl, sweep_axis::distance, 0.1, 10.0, 0.01, {2.4, 28.0, 100.0}};
    }
    else if (name == "fig3")
    {
        spec = {sweep_quantity::fspl, sweep_axis::frequency, 1.0, 300.0, 0.5, {0.1, 1.0, 10.0}};
    }
    else if (name == "fig4")
    {
        // Horizontal polarization (tilt 0) on a level path: the worst case.
        spec = {sweep_quantity::rain, sweep_axis::frequency, 1.0,
                300.0,                0.5,                   {0.25, 1.0, 4.0, 16.0, 50.0, 100.0}};
        file.base.geometry = link_geometry(distance(1.0), 0.0, 0.0);
    }
    else if (name == "fig5")
    {
        spec = {sweep_quantity::fog, sweep_axis::frequency, 1.0,
                200.0,               0.5,                   {0.05, 0.1, 0.25, 0.5}};
        file.base.fog.temp = temperature::from_celsius(15.0);
    }
    else if (name == "fig6")
    {
        spec = {sweep_quantity::gas, sweep_axis::frequency, 3.0, 300.0, 0.1, {}};
        file.base.atmosphere = gas::gas_atmosphere::standard();
    }
    else
    {
        throw invalid_quantity("unknown preset '" + name +
                               "' (expected fig2, fig3, fig4, fig5, or fig6)");
    }
    file.sweep = spec;
    return file;
}

const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names = {"fig2", "fig3", "fig4", "fig5", "fig6"};
    return names;
}

} // namespace mmwlink::sweeps
