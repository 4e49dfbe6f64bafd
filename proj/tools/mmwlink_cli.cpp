// SPDX-License-Identifier: Apache-2.0
//
// mmwlink command-line front end.
//
// Subcommands: fspl, rain, fog, gas, budget, sweep, bands, preset.
// Exit codes: 0 ok, 2 invalid input, 3 out of model range, 4 I/O failure.

#include "CLI11.hpp"

#include "mmwlink/assets.hpp"
#include "mmwlink/budget.hpp"
#include "mmwlink/errors.hpp"
#include "mmwlink/fog.hpp"
#include "mmwlink/fspl.hpp"
#include "mmwlink/gas.hpp"
#include "mmwlink/models.hpp"
#include "mmwlink/quantities.hpp"
#include "mmwlink/rain.hpp"
#include "mmwlink/scenario.hpp"
#include "mmwlink/sweep.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace
{

using namespace mmwlink;

constexpr const char *version_string = "mmwlink 0.1.0";

struct global_options
{
    std::string data_dir;

    std::filesystem::path resolved_data_dir() const
    {
        return data_dir.empty() ? assets::default_data_dir() : std::filesystem::path(data_dir);
    }

    model_set load_models() const { return model_set::load(resolved_data_dir()); }
};

void emit_result(const sweeps::sweep_result &result, const std::string &out_path)
{
    if (out_path.empty() || out_path == "-")
        std::cout << sweeps::render_csv(result);
    else
        sweeps::write_csv(result, out_path);
}

/// Parses a "start:stop:step" range argument.
void parse_range(const std::string &text, double &start, double &stop, double &step)
{
    double parts[3];
    std::size_t begin = 0;
    for (int i = 0; i < 3; ++i)
    {
        const std::size_t colon = text.find(':', begin);
        const bool last = i == 2;
        if (last != (colon == std::string::npos))
            throw invalid_quantity("range '" + text + "' must have the form start:stop:step");
        const std::string piece =
            text.substr(begin, last ? std::string::npos : colon - begin);
        char *end = nullptr;
        parts[i] = std::strtod(piece.c_str(), &end);
        if (piece.empty() || end == nullptr || *end != '\0')
            throw invalid_quantity("range component '" + piece + "' is not a number");
        begin = colon + 1;
    }
    start = parts[0];
    stop = parts[1];
    step = parts[2];
}

void add_fspl_command(CLI::App &app)
{
    auto *cmd = app.add_subcommand("fspl", "Free-space path loss for one point");
    auto freq_ghz = std::make_shared<double>(0.0);
    auto dist_km = std::make_shared<double>(0.0);
    cmd->add_option("--freq-ghz", *freq_ghz, "Carrier frequency, GHz")->required();
    cmd->add_option("--dist-km", *dist_km, "Tx-Rx distance, km")->required();
    cmd->callback([freq_ghz, dist_km] {
        const double db = fspl::fspl_db(frequency(*freq_ghz), distance(*dist_km));
        std::printf("%.4f dB\n", db);
    });
}

void add_rain_command(CLI::App &app, const global_options &globals)
{
    auto *cmd = app.add_subcommand("rain", "Rain specific attenuation (ITU-R P.838-3)");
    auto freq_ghz = std::make_shared<double>(0.0);
    auto rate_mm_h = std::make_shared<double>(0.0);
    auto tilt_deg = std::make_shared<double>(0.0);
    auto elev_deg = std::make_shared<double>(0.0);
    auto dist_km = std::make_shared<double>(0.0);
    cmd->add_option("--freq-ghz", *freq_ghz, "Carrier frequency, GHz")->required();
    cmd->add_option("--rate", *rate_mm_h, "Rain rate, mm/h")->required();
    cmd->add_option("--tilt-deg", *tilt_deg,
                    "Polarization tilt from horizontal, deg (default 0 = worst case)");
    cmd->add_option("--elev-deg", *elev_deg, "Path elevation angle, deg (default 0)");
    auto *dist_opt = cmd->add_option("--dist-km", *dist_km,
                                     "Also report path attenuation over this range, km");
    cmd->callback([&globals, freq_ghz, rate_mm_h, tilt_deg, elev_deg, dist_km, dist_opt] {
        const model_set models = globals.load_models();
        const link_geometry geometry(distance(dist_opt->count() > 0 ? *dist_km : 1.0),
                                     *elev_deg, *tilt_deg);
        const rain::coefficient_set hv =
            rain::coefficients_hv(frequency(*freq_ghz), models.rain_table);
        const rain::rain_coefficients combined = rain::combine_polarization(hv, geometry);
        const rain_rate rate(*rate_mm_h);
        const double gamma = rain::specific_attenuation(combined, rate);
        std::printf("%.4f dB/km\n", gamma);
        std::printf("category: %s\n", to_string(classify_rain(rate)).c_str());
        std::printf("k = %.6g, alpha = %.6g\n", combined.k, combined.alpha);
        if (dist_opt->count() > 0)
            std::printf("path attenuation: %.4f dB over %g km\n",
                        rain::path_attenuation(gamma, distance(*dist_km)), *dist_km);
    });
}

void add_fog_command(CLI::App &app)
{
    auto *cmd = app.add_subcommand("fog", "Fog/cloud specific attenuation (ITU-R P.840)");
    auto freq_ghz = std::make_shared<double>(0.0);
    auto density = std::make_shared<double>(0.05);
    auto temp_c = std::make_shared<double>(15.0);
    auto dist_km = std::make_shared<double>(0.0);
    cmd->add_option("--freq-ghz", *freq_ghz, "Carrier frequency, GHz")->required();
    cmd->add_option("--density", *density,
                    "Liquid water density, g/m^3 (default 0.05 = medium fog)");
    cmd->add_option("--temp-c", *temp_c, "Droplet temperature, C (default 15)");
    auto *dist_opt = cmd->add_option("--dist-km", *dist_km,
                                     "Also report path attenuation over this range, km");
    cmd->callback([freq_ghz, density, temp_c, dist_km, dist_opt] {
        const frequency f(*freq_ghz);
        const fog::fog_conditions conditions{liquid_water_density(*density),
                                             temperature::from_celsius(*temp_c)};
        const double gamma = fog::fog_attenuation(conditions, f);
        const double kl = fog::specific_attenuation_coefficient(f, conditions.temp);
        std::printf("%.4f dB/km\n", gamma);
        std::printf("K_l = %.6g (dB/km)/(g/m^3)\n", kl);
        if (dist_opt->count() > 0)
            std::printf("path attenuation: %.4f dB over %g km\n",
                        rain::path_attenuation(gamma, distance(*dist_km)), *dist_km);
    });
}

void add_gas_command(CLI::App &app, const global_options &globals)
{
    auto *cmd = app.add_subcommand("gas", "Gaseous specific attenuation (ITU-R P.676-10)");
    auto freq_ghz = std::make_shared<double>(0.0);
    auto pressure_hpa = std::make_shared<double>(1013.25);
    auto temp_c = std::make_shared<double>(15.0);
    auto vapour = std::make_shared<double>(7.5);
    auto dist_km = std::make_shared<double>(0.0);
    cmd->add_option("--freq-ghz", *freq_ghz, "Carrier frequency, GHz")->required();
    cmd->add_option("--pressure-hpa", *pressure_hpa, "Dry air pressure, hPa (default 1013.25)");
    cmd->add_option("--temp-c", *temp_c, "Air temperature, C (default 15)");
    cmd->add_option("--vapour-density", *vapour, "Water vapour density, g/m^3 (default 7.5)");
    auto *dist_opt = cmd->add_option("--dist-km", *dist_km,
                                     "Also report path attenuation over this range, km");
    cmd->callback([&globals, freq_ghz, pressure_hpa, temp_c, vapour, dist_km, dist_opt] {
        const model_set models = globals.load_models();
        const gas::gas_atmosphere atmosphere(pressure(*pressure_hpa),
                                             temperature::from_celsius(*temp_c),
                                             vapour_density(*vapour));
        const gas::gas_attenuation gamma =
            models.gas_model.specific_attenuation(frequency(*freq_ghz), atmosphere);
        std::printf("%.4f dB/km\n", gamma.total_db_per_km);
        std::printf("oxygen: %.6g dB/km\n", gamma.oxygen_db_per_km);
        std::printf("water vapour: %.6g dB/km\n", gamma.water_db_per_km);
        if (dist_opt->count() > 0)
            std::printf("path attenuation: %.4f dB over %g km\n",
                        rain::path_attenuation(gamma.total_db_per_km, distance(*dist_km)),
                        *dist_km);
    });
}

void add_budget_command(CLI::App &app, const global_options &globals)
{
    auto *cmd = app.add_subcommand(
        "budget", "Per-mechanism attenuation breakdown for one link scenario");
    auto scenario_path = std::make_shared<std::string>();
    auto freq_ghz = std::make_shared<double>(28.0);
    auto dist_km = std::make_shared<double>(1.0);
    auto tilt_deg = std::make_shared<double>(0.0);
    auto elev_deg = std::make_shared<double>(0.0);
    auto rate_mm_h = std::make_shared<double>(0.0);
    auto fog_density = std::make_shared<double>(0.0);
    auto fog_temp_c = std::make_shared<double>(15.0);
    auto pressure_hpa = std::make_shared<double>(1013.25);
    auto temp_c = std::make_shared<double>(15.0);
    auto vapour = std::make_shared<double>(7.5);
    auto no_rain = std::make_shared<bool>(false);
    auto no_fog = std::make_shared<bool>(false);
    auto no_gas = std::make_shared<bool>(false);

    auto *scenario_opt =
        cmd->add_option("--scenario", *scenario_path, "Scenario JSON file (see README)");
    auto *freq_opt = cmd->add_option("--freq-ghz", *freq_ghz, "Carrier frequency, GHz");
    auto *dist_opt = cmd->add_option("--dist-km", *dist_km, "Tx-Rx distance, km");
    cmd->add_option("--tilt-deg", *tilt_deg, "Polarization tilt, deg")->excludes(scenario_opt);
    cmd->add_option("--elev-deg", *elev_deg, "Path elevation, deg")->excludes(scenario_opt);
    cmd->add_option("--rate", *rate_mm_h, "Rain rate, mm/h (default 0)")->excludes(scenario_opt);
    cmd->add_option("--fog-density", *fog_density, "Fog liquid water density, g/m^3 (default 0)")
        ->excludes(scenario_opt);
    cmd->add_option("--fog-temp-c", *fog_temp_c, "Fog droplet temperature, C (default 15)")
        ->excludes(scenario_opt);
    cmd->add_option("--pressure-hpa", *pressure_hpa, "Dry air pressure, hPa (default 1013.25)")
        ->excludes(scenario_opt);
    cmd->add_option("--temp-c", *temp_c, "Air temperature, C (default 15)")
        ->excludes(scenario_opt);
    cmd->add_option("--vapour-density", *vapour, "Water vapour density, g/m^3 (default 7.5)")
        ->excludes(scenario_opt);
    cmd->add_flag("--no-rain", *no_rain, "Exclude the rain mechanism")->excludes(scenario_opt);
    cmd->add_flag("--no-fog", *no_fog, "Exclude the fog mechanism")->excludes(scenario_opt);
    cmd->add_flag("--no-gas", *no_gas, "Exclude the gas mechanism")->excludes(scenario_opt);
    freq_opt->excludes(scenario_opt);
    dist_opt->excludes(scenario_opt);

    cmd->callback([&globals, scenario_path, freq_ghz, dist_km, tilt_deg, elev_deg, rate_mm_h,
                   fog_density, fog_temp_c, pressure_hpa, temp_c, vapour, no_rain, no_fog,
                   no_gas, scenario_opt] {
        budget::scenario sc;
        if (scenario_opt->count() > 0)
        {
            sc = scenario_io::load_scenario_file(*scenario_path).base;
        }
        else
        {
            sc.freq = frequency(*freq_ghz);
            sc.geometry = link_geometry(distance(*dist_km), *elev_deg, *tilt_deg);
            sc.rain = rain_rate(*rate_mm_h);
            sc.atmosphere = gas::gas_atmosphere(pressure(*pressure_hpa),
                                                temperature::from_celsius(*temp_c),
                                                vapour_density(*vapour));
            sc.fog = fog::fog_conditions{liquid_water_density(*fog_density),
                                         temperature::from_celsius(*fog_temp_c)};
            sc.include_rain = !*no_rain;
            sc.include_fog = !*no_fog;
            sc.include_gas = !*no_gas;
        }
        const model_set models = globals.load_models();
        const budget::attenuation_breakdown breakdown = budget::evaluate(sc, models);
        std::printf("fspl  %12.4f dB\n", breakdown.fspl_db);
        std::printf("rain  %12.4f dB\n", breakdown.rain_db);
        std::printf("fog   %12.4f dB\n", breakdown.fog_db);
        std::printf("gas   %12.4f dB\n", breakdown.gas_db);
        std::printf("total %12.4f dB\n", breakdown.total_db);
    });
}

void add_sweep_command(CLI::App &app, const global_options &globals)
{
    auto *cmd = app.add_subcommand("sweep", "Run the sweep defined in a scenario JSON file");
    auto scenario_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>("-");
    auto threads = std::make_shared<unsigned>(1);
    cmd->add_option("--scenario", *scenario_path, "Scenario JSON file with a sweep block")
        ->required();
    cmd->add_option("--out", *out_path, "Output CSV path ('-' = stdout, the default)");
    cmd->add_option("--threads", *threads, "Worker threads (default 1)")
        ->check(CLI::Range(1u, 256u));
    cmd->callback([&globals, scenario_path, out_path, threads] {
        const scenario_io::scenario_file file = scenario_io::load_scenario_file(*scenario_path);
        const model_set models = globals.load_models();
        emit_result(sweeps::run_sweep(file, models, *threads), *out_path);
    });
}

void add_preset_command(CLI::App &app, const global_options &globals)
{
    auto *cmd = app.add_subcommand("preset", "Emit a named CSV preset (fig2..fig6)");
    auto name = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>("-");
    auto threads = std::make_shared<unsigned>(1);
    cmd->add_option("name", *name, "Preset name: fig2, fig3, fig4, fig5, or fig6")->required();
    cmd->add_option("--out", *out_path, "Output CSV path ('-' = stdout, the default)");
    cmd->add_option("--threads", *threads, "Worker threads (default 1)")
        ->check(CLI::Range(1u, 256u));
    cmd->callback([&globals, name, out_path, threads] {
        const scenario_io::scenario_file file = sweeps::preset(*name);
        const model_set models = globals.load_models();
        sweeps::sweep_result result = sweeps::run_sweep(file, models, *threads);
        result.comment_lines.insert(result.comment_lines.begin(), "preset: " + *name);
        emit_result(result, *out_path);
    });
}

void add_bands_command(CLI::App &app, const global_options &globals)
{
    auto *cmd = app.add_subcommand(
        "bands", "Classify the gaseous absorption spectrum into window/moderate/blocked bands");
    auto range_text = std::make_shared<std::string>("10:300:0.1");
    auto gamma_low = std::make_shared<double>(0.5);
    auto gamma_high = std::make_shared<double>(3.0);
    auto min_run = std::make_shared<std::size_t>(3);
    auto pressure_hpa = std::make_shared<double>(1013.25);
    auto temp_c = std::make_shared<double>(15.0);
    auto vapour = std::make_shared<double>(7.5);
    auto csv_path = std::make_shared<std::string>();
    auto threads = std::make_shared<unsigned>(1);
    cmd->add_option("--freq", *range_text, "Frequency grid start:stop:step, GHz "
                                           "(default 10:300:0.1)");
    auto *low_opt = cmd->add_option("--gamma-low", *gamma_low,
                                    "Window threshold, dB/km (default 0.5)");
    auto *high_opt =
        cmd->add_option("--gamma-high", *gamma_high,
                        "Blocked threshold, dB/km (default 3, or 6x gamma-low if larger)");
    cmd->add_option("--min-run", *min_run,
                    "Shortest interval, grid samples; shorter class flickers merge (default 3)");
    cmd->add_option("--pressure-hpa", *pressure_hpa, "Dry air pressure, hPa (default 1013.25)");
    cmd->add_option("--temp-c", *temp_c, "Air temperature, C (default 15)");
    cmd->add_option("--vapour-density", *vapour, "Water vapour density, g/m^3 (default 7.5)");
    cmd->add_option("--csv", *csv_path, "Also write the report as CSV to this path");
    cmd->add_option("--threads", *threads, "Worker threads (default 1)")
        ->check(CLI::Range(1u, 256u));
    cmd->callback([&globals, range_text, gamma_low, gamma_high, min_run, pressure_hpa, temp_c,
                   vapour, csv_path, threads, low_opt, high_opt] {
        double start = 0.0, stop = 0.0, step = 0.0;
        parse_range(*range_text, start, stop, step);

        budget::band_thresholds thresholds;
        thresholds.gamma_low_db_per_km = *gamma_low;
        // Keep the default 1:6 threshold ratio when only the window
        // threshold is raised, so "--gamma-low <huge>" stays classifiable.
        thresholds.gamma_high_db_per_km =
            (high_opt->count() == 0 && low_opt->count() > 0)
                ? std::max(*gamma_high, 6.0 * *gamma_low)
                : *gamma_high;

        const model_set models = globals.load_models();
        const gas::gas_atmosphere atmosphere(pressure(*pressure_hpa),
                                             temperature::from_celsius(*temp_c),
                                             vapour_density(*vapour));
        const gas::absorption_spectrum spectrum =
            models.gas_model.sweep(atmosphere, start, stop, step, *threads);
        const budget::band_report report =
            budget::classify_bands(spectrum, thresholds, *min_run);

        std::printf("# gaseous band report (ITU-R P.676-10): %s hPa, %s C, %s g/m^3\n",
                    sweeps::format_value(*pressure_hpa).c_str(),
                    sweeps::format_value(*temp_c).c_str(),
                    sweeps::format_value(*vapour).c_str());
        std::printf("# thresholds: window <= %s dB/km, blocked >= %s dB/km\n",
                    sweeps::format_value(thresholds.gamma_low_db_per_km).c_str(),
                    sweeps::format_value(thresholds.gamma_high_db_per_km).c_str());
        std::printf("%-9s %12s %12s %13s %13s %13s %8s\n", "class", "f_start_ghz", "f_stop_ghz",
                    "gamma_min", "gamma_mean", "gamma_max", "samples");
        for (const auto &interval : report.intervals)
            std::printf("%-9s %12.4f %12.4f %13s %13s %13s %8zu\n",
                        budget::to_string(interval.cls).c_str(), interval.f_start_ghz,
                        interval.f_stop_ghz,
                        sweeps::format_value(interval.gamma_min_db_per_km).c_str(),
                        sweeps::format_value(interval.gamma_mean_db_per_km).c_str(),
                        sweeps::format_value(interval.gamma_max_db_per_km).c_str(),
                        interval.sample_count);

        if (!csv_path->empty())
        {
            sweeps::sweep_result table;
            table.comment_lines = {
                "mmwlink band report: ITU-R P.676-10 gaseous attenuation",
                "atmosphere " + sweeps::format_value(*pressure_hpa) + " hPa, " +
                    sweeps::format_value(*temp_c) + " C, " + sweeps::format_value(*vapour) +
                    " g/m^3",
                "thresholds: window <= " +
                    sweeps::format_value(thresholds.gamma_low_db_per_km) +
                    " dB/km, blocked >= " +
                    sweeps::format_value(thresholds.gamma_high_db_per_km) + " dB/km"};
            table.column_names = {"class",          "f_start_ghz",     "f_stop_ghz",
                                  "gamma_min_db_km", "gamma_mean_db_km", "gamma_max_db_km",
                                  "samples"};
            for (const auto &interval : report.intervals)
                table.rows.push_back({budget::to_string(interval.cls),
                                      sweeps::format_value(interval.f_start_ghz),
                                      sweeps::format_value(interval.f_stop_ghz),
                                      sweeps::format_value(interval.gamma_min_db_per_km),
                                      sweeps::format_value(interval.gamma_mean_db_per_km),
                                      sweeps::format_value(interval.gamma_max_db_per_km),
                                      std::to_string(interval.sample_count)});
            sweeps::write_csv(table, *csv_path);
        }
    });
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"millimeter-wave link attenuation models "
                 "(FSPL, ITU-R P.838-3 rain, ITU-R P.840 fog, ITU-R P.676-10 gases)"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    global_options globals;
    app.add_option("--data-dir", globals.data_dir,
                   "Directory with the coefficient tables (default: MMWLINK_DATA_DIR "
                   "environment variable, then the built-in path)");

    add_fspl_command(app);
    add_rain_command(app, globals);
    add_fog_command(app);
    add_gas_command(app, globals);
    add_budget_command(app, globals);
    add_sweep_command(app, globals);
    add_preset_command(app, globals);
    add_bands_command(app, globals);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    catch (const mmwlink::invalid_quantity &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const mmwlink::out_of_model_range &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    catch (const mmwlink::io_error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
