// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/scenario.hpp"
#include "mmwlink/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

namespace mmwlink::scenario_io
{

namespace
{

using ordered_json = nlohmann::ordered_json;

const std::set<std::string> scenario_keys = {
    "frequency_ghz",  "distance_km",        "elevation_deg",
    "tilt_deg",       "rain_rate_mm_h",     "fog_water_density_g_m3",
    "fog_temperature_c", "dry_pressure_hpa", "temperature_c",
    "vapour_density_g_m3", "include_rain",  "include_fog",
    "include_gas",    "sweep"};

const std::set<std::string> sweep_keys = {"quantity", "axis", "start", "stop", "step", "family"};

void reject_unknown_keys(const ordered_json &object, const std::set<std::string> &allowed,
                         const std::string &where)
{
    for (const auto &item : object.items())
        if (allowed.find(item.key()) == allowed.end())
            throw invalid_quantity("scenario " + where + ": unknown key '" + item.key() + "'");
}

double require_number(const ordered_json &object, const std::string &key)
{
    if (!object.contains(key))
        throw invalid_quantity("scenario: required key '" + key + "' is missing");
    if (!object.at(key).is_number())
        throw invalid_quantity("scenario: key '" + key + "' must be a number");
    return object.at(key).get<double>();
}

double optional_number(const ordered_json &object, const std::string &key, double fallback)
{
    if (!object.contains(key))
        return fallback;
    if (!object.at(key).is_number())
        throw invalid_quantity("scenario: key '" + key + "' must be a number");
    return object.at(key).get<double>();
}

bool optional_bool(const ordered_json &object, const std::string &key, bool fallback)
{
    if (!object.contains(key))
        return fallback;
    if (!object.at(key).is_boolean())
        throw invalid_quantity("scenario: key '" + key + "' must be a boolean");
    return object.at(key).get<bool>();
}

sweep_quantity parse_quantity(const std::string &text)
{
    if (text == "fspl")
        return sweep_quantity::fspl;
    if (text == "rain")
        return sweep_quantity::rain;
    if (text == "fog")
        return sweep_quantity::fog;
    if (text == "gas")
        return sweep_quantity::gas;
    if (text == "budget")
        return sweep_quantity::budget;
    throw invalid_quantity("scenario sweep: unknown quantity '" + text +
                           "' (expected fspl, rain, fog, gas, or budget)");
}

sweep_axis parse_axis(const std::string &text)
{
    if (text == "frequency")
        return sweep_axis::frequency;
    if (text == "distance")
        return sweep_axis::distance;
    throw invalid_quantity("scenario sweep: unknown axis '" + text +
                           "' (expected frequency or distance)");
}

const char *quantity_name(sweep_quantity quantity)
{
    switch (quantity)
    {
    case sweep_quantity::fspl:
        return "fspl";
    case sweep_quantity::rain:
        return "rain";
    case sweep_quantity::fog:
        return "fog";
    case sweep_quantity::gas:
        return "gas";
    case sweep_quantity::budget:
        return "budget";
    }
    throw invalid_quantity("unknown sweep quantity value");
}

const char *axis_name(sweep_axis axis)
{
    return axis == sweep_axis::frequency ? "frequency" : "distance";
}

sweep_spec parse_sweep(const ordered_json &object)
{
    if (!object.is_object())
        throw invalid_quantity("scenario sweep: the sweep block must be an object");
    reject_unknown_keys(object, sweep_keys, "sweep");

    sweep_spec spec;
    if (!object.contains("quantity") || !object.at("quantity").is_string())
        throw invalid_quantity("scenario sweep: required string key 'quantity' is missing");
    spec.quantity = parse_quantity(object.at("quantity").get<std::string>());
    if (!object.contains("axis") || !object.at("axis").is_string())
        throw invalid_quantity("scenario sweep: required string key 'axis' is missing");
    spec.axis = parse_axis(object.at("axis").get<std::string>());

    spec.start = require_number(object, "start");
    spec.stop = require_number(object, "stop");
    spec.step = require_number(object, "step");
    if (!(spec.start < spec.stop))
        throw invalid_quantity("scenario sweep: start must be below stop");
    if (!(spec.step > 0.0))
        throw invalid_quantity("scenario sweep: step must be positive");
    if (!(spec.start > 0.0))
        throw invalid_quantity("scenario sweep: start must be positive");

    if (object.contains("family"))
    {
        if (!object.at("family").is_array())
            throw invalid_quantity("scenario sweep: 'family' must be an array of numbers");
        for (const auto &value : object.at("family"))
        {
            if (!value.is_number())
                throw invalid_quantity("scenario sweep: 'family' must be an array of numbers");
            spec.family.push_back(value.get<double>());
        }
    }

    const bool fixed_columns =
        spec.quantity == sweep_quantity::gas || spec.quantity == sweep_quantity::budget;
    if (fixed_columns && !spec.family.empty())
        throw invalid_quantity("scenario sweep: gas and budget sweeps have fixed columns and "
                               "take no family list");
    if (!fixed_columns && spec.family.empty())
        throw invalid_quantity(std::string("scenario sweep: a ") + quantity_name(spec.quantity) +
                               " sweep needs a nonempty family list");
    if (spec.axis == sweep_axis::distance &&
        (spec.quantity == sweep_quantity::rain || spec.quantity == sweep_quantity::fog ||
         spec.quantity == sweep_quantity::gas))
        throw invalid_quantity(std::string("scenario sweep: a ") + quantity_name(spec.quantity) +
                               " sweep emits specific attenuation and must sweep the "
                               "frequency axis");
    return spec;
}

} // namespace

scenario_file parse_scenario_json(const std::string &text)
{
    ordered_json root;
    try
    {
        root = ordered_json::parse(text);
    }
    catch (const nlohmann::json::exception &error)
    {
        throw invalid_quantity(std::string("scenario: malformed JSON: ") + error.what());
    }
    if (!root.is_object())
        throw invalid_quantity("scenario: the top-level JSON value must be an object");
    reject_unknown_keys(root, scenario_keys, "file");

    scenario_file file;
    const double freq_ghz = require_number(root, "frequency_ghz");
    const double dist_km = require_number(root, "distance_km");
    const double elevation = optional_number(root, "elevation_deg", 0.0);
    const double tilt = optional_number(root, "tilt_deg", 0.0);

    file.base.freq = frequency(freq_ghz);
    file.base.geometry = link_geometry(distance(dist_km), elevation, tilt);
    file.base.rain = rain_rate(optional_number(root, "rain_rate_mm_h", 0.0));
    file.base.fog = fog::fog_conditions{
        liquid_water_density(optional_number(root, "fog_water_density_g_m3", 0.0)),
        temperature::from_celsius(optional_number(root, "fog_temperature_c", 15.0))};
    file.base.atmosphere = gas::gas_atmosphere(
        pressure(optional_number(root, "dry_pressure_hpa", 1013.25)),
        temperature::from_celsius(optional_number(root, "temperature_c", 15.0)),
        vapour_density(optional_number(root, "vapour_density_g_m3", 7.5)));
    file.base.include_rain = optional_bool(root, "include_rain", true);
    file.base.include_fog = optional_bool(root, "include_fog", true);
    file.base.include_gas = optional_bool(root, "include_gas", true);

    if (root.contains("sweep"))
        file.sweep = parse_sweep(root.at("sweep"));
    return file;
}

std::string serialize_scenario(const scenario_file &file)
{
    ordered_json root;
    root["frequency_ghz"] = file.base.freq.ghz();
    root["distance_km"] = file.base.geometry.range().km();
    root["elevation_deg"] = file.base.geometry.elevation_deg();
    root["tilt_deg"] = file.base.geometry.tilt_deg();
    root["rain_rate_mm_h"] = file.base.rain.mm_per_hour();
    root["fog_water_density_g_m3"] = file.base.fog.water_density.g_per_m3();
    root["fog_temperature_c"] = file.base.fog.temp.celsius();
    root["dry_pressure_hpa"] = file.base.atmosphere.dry_pressure_hpa();
    root["temperature_c"] = file.base.atmosphere.temperature_k() - 273.15;
    root["vapour_density_g_m3"] = file.base.atmosphere.vapour_density_g_m3();
    root["include_rain"] = file.base.include_rain;
    root["include_fog"] = file.base.include_fog;
    root["include_gas"] = file.base.include_gas;
    if (file.sweep)
    {
        ordered_json sweep;
        sweep["quantity"] = quantity_name(file.sweep->quantity);
        sweep["axis"] = axis_name(file.sweep->axis);
        sweep["start"] = file.sweep->start;
        sweep["stop"] = file.sweep->stop;
        sweep["step"] = file.sweep->step;
        sweep["family"] = file.sweep->family;
        root["sweep"] = sweep;
    }
    return root.dump(2) + "\n";
}

scenario_file load_scenario_file(const std::filesystem::path &path)
{
    std::ifstream file(path);
    if (!file)
        throw io_error("cannot open scenario file '" + path.string() + "'");
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    if (file.bad())
        throw io_error("read failure on scenario file '" + path.string() + "'");
    return parse_scenario_json(text);
}

void save_scenario_file(const scenario_file &file, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open scenario file '" + path.string() + "' for writing");
    out << serialize_scenario(file);
    out.flush();
    if (!out)
        throw io_error("write failure on scenario file '" + path.string() + "'");
}

} // namespace mmwlink::scenario_io
