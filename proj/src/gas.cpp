// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/gas.hpp"
#include "mmwlink/assets.hpp"
#include "mmwlink/detail/parallel_for.hpp"
#include "mmwlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mmwlink::gas
{

namespace
{

void require_frequency_in_range(double f_ghz)
{
    if (f_ghz < min_frequency_ghz || f_ghz > max_frequency_ghz)
    {
        std::ostringstream msg;
        msg << "gas model: frequency " << f_ghz << " GHz is outside the P.676-10 validity range ["
            << min_frequency_ghz << ", " << max_frequency_ghz << "] GHz";
        throw out_of_model_range(msg.str());
    }
}

/// Interference (line-mixing) correction delta; zero for water vapour.
double line_delta(const spectral_line &line, const gas_atmosphere &atm)
{
    if (line.species != gas_species::oxygen)
        return 0.0;
    const double a5 = line.coeff[4];
    const double a6 = line.coeff[5];
    const double pe = atm.dry_pressure_hpa() + atm.vapour_partial_pressure_hpa();
    return (a5 + a6 * atm.theta()) * 1.0e-4 * pe * std::pow(atm.theta(), 0.8);
}

/// Dry continuum: Debye spectrum of oxygen below 10 GHz plus
/// pressure-induced nitrogen absorption above 100 GHz.
double dry_continuum(double f_ghz, const gas_atmosphere &atm)
{
    const double p = atm.dry_pressure_hpa();
    const double e = atm.vapour_partial_pressure_hpa();
    const double theta = atm.theta();
    const double d = 5.6e-4 * (p + e) * std::pow(theta, 0.8);
    return f_ghz * p * theta * theta *
           (6.14e-5 / (d * (1.0 + (f_ghz / d) * (f_ghz / d))) +
            1.4e-12 * p * std::pow(theta, 1.5) / (1.0 + 1.9e-5 * std::pow(f_ghz, 1.5)));
}

/// Shape evaluation without the public range check (point evaluations
/// validate the frequency once up front).
double line_shape_unchecked(const spectral_line &line, double f_ghz, const gas_atmosphere &atm)
{
    const double f0 = line.f0_ghz;
    const double width = line_width_ghz(line, atm);
    const double delta = line_delta(line, atm);
    const double below = (f0 - f_ghz) * (f0 - f_ghz) + width * width;
    const double above = (f0 + f_ghz) * (f0 + f_ghz) + width * width;
    return (f_ghz / f0) *
           ((width - delta * (f0 - f_ghz)) / below + (width - delta * (f0 + f_ghz)) / above);
}

double summed_line_terms(const spectral_line_table &table, double f_ghz, const gas_atmosphere &atm)
{
    double total = 0.0;
    for (const auto &line : table.lines())
        total += line_strength(line, atm) * line_shape_unchecked(line, f_ghz, atm);
    return total;
}

} // namespace

spectral_line_table spectral_line_table::load(const std::filesystem::path &csv_path,
                                              gas_species species)
{
    const assets::csv_table csv = assets::load_checksummed_csv(csv_path);
    const std::string context = "spectral line asset '" + csv_path.string() + "'";

    const char prefix = species == gas_species::oxygen ? 'a' : 'b';
    if (csv.header.size() != 7 || csv.header[0] != "f0")
        throw io_error(context + " has an unexpected header layout");
    for (int i = 1; i <= 6; ++i)
        if (csv.header[i] != std::string(1, prefix) + std::to_string(i))
            throw io_error(context + " header does not match the expected coefficient names");

    std::vector<spectral_line> lines;
    lines.reserve(csv.rows.size());
    for (const auto &row : csv.rows)
    {
        spectral_line line{};
        line.species = species;
        line.f0_ghz = assets::parse_double(row[0], context);
        for (int i = 0; i < 6; ++i)
            line.coeff[static_cast<std::size_t>(i)] =
                assets::parse_double(row[static_cast<std::size_t>(i) + 1], context);
        if (line.f0_ghz <= 0.0)
            throw io_error(context + " lists a nonpositive line center");
        if (!lines.empty() && line.f0_ghz <= lines.back().f0_ghz)
            throw io_error(context + " line centers are not strictly ascending");
        lines.push_back(line);
    }

    const std::size_t expected =
        species == gas_species::oxygen ? oxygen_line_count : water_line_count;
    if (lines.size() != expected)
        throw io_error(context + " has " + std::to_string(lines.size()) + " lines, expected " +
                       std::to_string(expected));
    return spectral_line_table(species, std::move(lines));
}

gas_atmosphere::gas_atmosphere(pressure dry_pressure, temperature temp, vapour_density vapour)
    : dry_pressure_(dry_pressure), temp_(temp), vapour_(vapour)
{
}

gas_atmosphere gas_atmosphere::standard()
{
    return gas_atmosphere(pressure(1013.25), temperature(288.15), vapour_density(7.5));
}

double gas_atmosphere::vapour_partial_pressure_hpa() const noexcept
{
    return vapour_.g_per_m3() * temp_.kelvin() / 216.7;
}

double line_strength(const spectral_line &line, const gas_atmosphere &atm)
{
    const double theta = atm.theta();
    if (line.species == gas_species::oxygen)
    {
        const double a1 = line.coeff[0];
        const double a2 = line.coeff[1];
        return a1 * 1.0e-7 * atm.dry_pressure_hpa() * theta * theta * theta *
               std::exp(a2 * (1.0 - theta));
    }
    const double b1 = line.coeff[0];
    const double b2 = line.coeff[1];
    return b1 * 1.0e-1 * atm.vapour_partial_pressure_hpa() * std::pow(theta, 3.5) *
           std::exp(b2 * (1.0 - theta));
}

double line_width_ghz(const spectral_line &line, const gas_atmosphere &atm)
{
    const double theta = atm.theta();
    const double p = atm.dry_pressure_hpa();
    const double e = atm.vapour_partial_pressure_hpa();
    if (line.species == gas_species::oxygen)
    {
        const double a3 = line.coeff[2];
        const double a4 = line.coeff[3];
        const double width = a3 * 1.0e-4 * (p * std::pow(theta, 0.8 - a4) + 1.1 * e * theta);
        return std::sqrt(width * width + 2.25e-6);
    }
    const double b3 = line.coeff[2];
    const double b4 = line.coeff[3];
    const double b5 = line.coeff[4];
    const double b6 = line.coeff[5];
    const double width = b3 * 1.0e-4 * (p * std::pow(theta, b4) + b5 * e * std::pow(theta, b6));
    return 0.535 * width +
           std::sqrt(0.217 * width * width + 2.1316e-12 * line.f0_ghz * line.f0_ghz / theta);
}

double line_shape(const spectral_line &line, const frequency &f, const gas_atmosphere &atm)
{
    require_frequency_in_range(f.ghz());
    return line_shape_unchecked(line, f.ghz(), atm);
}

attenuation_model::attenuation_model(spectral_line_table oxygen_lines,
                                     spectral_line_table water_lines)
    : oxygen_lines_(std::move(oxygen_lines)), water_lines_(std::move(water_lines))
{
    if (oxygen_lines_.species() != gas_species::oxygen ||
        water_lines_.species() != gas_species::water_vapour)
        throw invalid_quantity("gas model: line tables passed in the wrong order");
}

attenuation_model attenuation_model::load(const std::filesystem::path &data_dir)
{
    return attenuation_model(
        spectral_line_table::load(data_dir / "p676_oxygen_lines.csv", gas_species::oxygen),
        spectral_line_table::load(data_dir / "p676_water_lines.csv", gas_species::water_vapour));
}

gas_attenuation attenuation_model::specific_attenuation(const frequency &f,
                                                        const gas_atmosphere &atmosphere) const
{
    require_frequency_in_range(f.ghz());
    const double f_ghz = f.ghz();

    const double n_oxygen =
        summed_line_terms(oxygen_lines_, f_ghz, atmosphere) + dry_continuum(f_ghz, atmosphere);
    const double n_water = summed_line_terms(water_lines_, f_ghz, atmosphere);

    // The line-mixing wings of the 60 GHz manifold can drive the summed
    // imaginary refractivity marginally negative far from the band;
    // attenuation is clamped at zero exactly as in the reference model.
    gas_attenuation result{};
    result.oxygen_db_per_km = std::max(0.0, 0.1820 * f_ghz * n_oxygen);
    result.water_db_per_km = std::max(0.0, 0.1820 * f_ghz * n_water);
    result.total_db_per_km = result.oxygen_db_per_km + result.water_db_per_km;
    return result;
}

absorption_spectrum attenuation_model::sweep(const gas_atmosphere &atmosphere, double f_start_ghz,
                                             double f_stop_ghz, double step_ghz,
                                             unsigned n_threads) const
{
    if (!(step_ghz > 0.0) || !std::isfinite(step_ghz))
        throw invalid_quantity("gas sweep: step must be positive");
    if (!(f_start_ghz < f_stop_ghz))
        throw invalid_quantity("gas sweep: start frequency must be below stop frequency");
    require_frequency_in_range(f_start_ghz);
    require_frequency_in_range(f_stop_ghz);

    const auto count =
        static_cast<std::size_t>(std::floor((f_stop_ghz - f_start_ghz) / step_ghz + 1e-9)) + 1;

    absorption_spectrum spectrum;
    spectrum.samples.resize(count);
    detail::parallel_for(count, n_threads, [&](std::size_t i) {
        double f_ghz = f_start_ghz + static_cast<double>(i) * step_ghz;
        if (f_ghz > f_stop_ghz) // guard the last grid point against roundoff
            f_ghz = f_stop_ghz;
        const gas_attenuation gamma = specific_attenuation(frequency(f_ghz), atmosphere);
        spectrum.samples[i] = {f_ghz, gamma.oxygen_db_per_km, gamma.water_db_per_km,
                               gamma.total_db_per_km};
    });
    return spectrum;
}

} // namespace mmwlink::gas
