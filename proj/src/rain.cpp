// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/rain.hpp"
#include "mmwlink/assets.hpp"
#include "mmwlink/errors.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace mmwlink::rain
{

namespace
{

double evaluate_series(const regression_series &series, double log10_f)
{
    double total = 0.0;
    for (const auto &term : series.terms)
    {
        const double u = (log10_f - term.b) / term.c;
        total += term.a * std::exp(-(u * u));
    }
    total += series.m * log10_f + series.c;
    return series.log_output ? std::pow(10.0, total) : total;
}

} // namespace

regression_table regression_table::load(const std::filesystem::path &csv_path)
{
    const assets::csv_table csv = assets::load_checksummed_csv(csv_path);
    const std::string context = "rain coefficient asset '" + csv_path.string() + "'";

    if (csv.header.size() != 7 || csv.header[0] != "target" || csv.header[1] != "term")
        throw io_error(context + " has an unexpected header layout");

    std::map<std::string, regression_series> series;
    std::map<std::string, int> last_term;
    for (const auto &row : csv.rows)
    {
        const std::string &target = row[0];
        if (target != "kH" && target != "kV" && target != "aH" && target != "aV")
            throw io_error(context + " lists unknown target '" + target + "'");

        const int term_index = static_cast<int>(assets::parse_double(row[1], context));
        if (term_index != last_term[target] + 1)
            throw io_error(context + " has non-consecutive term indices for '" + target + "'");
        last_term[target] = term_index;

        auto &entry = series[target];
        entry.terms.push_back({assets::parse_double(row[2], context),
                               assets::parse_double(row[3], context),
                               assets::parse_double(row[4], context)});
        const double m = assets::parse_double(row[5], context);
        const double c = assets::parse_double(row[6], context);
        if (entry.terms.size() == 1)
        {
            entry.m = m;
            entry.c = c;
        }
        else if (entry.m != m || entry.c != c)
            throw io_error(context + " repeats inconsistent m/c values for '" + target + "'");
        entry.log_output = target.front() == 'k';
    }

    for (const auto &[target, expected] : {std::pair<const char *, std::size_t>{"kH", 4},
                                           {"kV", 4},
                                           {"aH", 5},
                                           {"aV", 5}})
    {
        const auto it = series.find(target);
        if (it == series.end() || it->second.terms.size() != expected)
            throw io_error(context + " must provide " + std::to_string(expected) +
                           " Gaussian terms for '" + target + "'");
    }

    regression_table table;
    table.k_h_ = series["kH"];
    table.k_v_ = series["kV"];
    table.alpha_h_ = series["aH"];
    table.alpha_v_ = series["aV"];
    return table;
}

coefficient_set coefficients_hv(const frequency &f, const regression_table &table)
{
    if (f.ghz() < min_frequency_ghz || f.ghz() > max_frequency_ghz)
    {
        std::ostringstream msg;
        msg << "rain model: frequency " << f.ghz() << " GHz is outside the P.838-3 validity range ["
            << min_frequency_ghz << ", " << max_frequency_ghz << "] GHz";
        throw out_of_model_range(msg.str());
    }
    const double log10_f = std::log10(f.ghz());
    return {evaluate_series(table.k_h(), log10_f), evaluate_series(table.alpha_h(), log10_f),
            evaluate_series(table.k_v(), log10_f), evaluate_series(table.alpha_v(), log10_f)};
}

rain_coefficients combine_polarization(const coefficient_set &hv, const link_geometry &geometry)
{
    constexpr double deg = std::numbers::pi / 180.0;
    const double cos_theta = std::cos(geometry.elevation_deg() * deg);
    const double mix = cos_theta * cos_theta * std::cos(2.0 * geometry.tilt_deg() * deg);

    const double k = (hv.k_h + hv.k_v + (hv.k_h - hv.k_v) * mix) / 2.0;
    const double ka_h = hv.k_h * hv.alpha_h;
    const double ka_v = hv.k_v * hv.alpha_v;
    const double alpha = (ka_h + ka_v + (ka_h - ka_v) * mix) / (2.0 * k);
    return {k, alpha};
}

double specific_attenuation(const rain_coefficients &coefficients, const rain_rate &rate)
{
    return coefficients.k * std::pow(rate.mm_per_hour(), coefficients.alpha);
}

double path_attenuation(double gamma_db_per_km, const distance &d)
{
    return gamma_db_per_km * d.km();
}

} // namespace mmwlink::rain
