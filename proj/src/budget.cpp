// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/budget.hpp"
#include "mmwlink/errors.hpp"
#include "mmwlink/fspl.hpp"
#include "mmwlink/rain.hpp"

#include <algorithm>
#include <sstream>

namespace mmwlink::budget
{

attenuation_breakdown evaluate(const scenario &sc, const model_set &models)
{
    attenuation_breakdown breakdown{};
    breakdown.fspl_db = fspl::fspl_db(sc.freq, sc.geometry.range());

    if (sc.include_rain)
    {
        try
        {
            const rain::coefficient_set hv = rain::coefficients_hv(sc.freq, models.rain_table);
            const rain::rain_coefficients combined = rain::combine_polarization(hv, sc.geometry);
            breakdown.rain_db = rain::path_attenuation(
                rain::specific_attenuation(combined, sc.rain), sc.geometry.range());
        }
        catch (const out_of_model_range &error)
        {
            throw out_of_model_range(std::string("rain mechanism: ") + error.what());
        }
    }

    if (sc.include_fog)
    {
        try
        {
            breakdown.fog_db = rain::path_attenuation(fog::fog_attenuation(sc.fog, sc.freq),
                                                      sc.geometry.range());
        }
        catch (const out_of_model_range &error)
        {
            throw out_of_model_range(std::string("fog mechanism: ") + error.what());
        }
    }

    if (sc.include_gas)
    {
        try
        {
            const gas::gas_attenuation gamma =
                models.gas_model.specific_attenuation(sc.freq, sc.atmosphere);
            breakdown.gas_db = rain::path_attenuation(gamma.total_db_per_km, sc.geometry.range());
        }
        catch (const out_of_model_range &error)
        {
            throw out_of_model_range(std::string("gas mechanism: ") + error.what());
        }
    }

    breakdown.total_db =
        breakdown.fspl_db + breakdown.rain_db + breakdown.fog_db + breakdown.gas_db;
    return breakdown;
}

std::string to_string(band_class cls)
{
    switch (cls)
    {
    case band_class::window:
        return "window";
    case band_class::moderate:
        return "moderate";
    case band_class::blocked:
        return "blocked";
    }
    throw invalid_quantity("unknown band class value");
}

namespace
{

struct run
{
    band_class cls;
    std::size_t first; // index of the first sample
    std::size_t last;  // index of the last sample (inclusive)
    std::size_t length() const noexcept { return last - first + 1; }
};

std::vector<run> build_runs(const std::vector<band_class> &classes)
{
    std::vector<run> runs;
    for (std::size_t i = 0; i < classes.size(); ++i)
    {
        if (runs.empty() || runs.back().cls != classes[i])
            runs.push_back({classes[i], i, i});
        else
            runs.back().last = i;
    }
    return runs;
}

void coalesce(std::vector<run> &runs)
{
    std::vector<run> merged;
    for (const auto &r : runs)
    {
        if (!merged.empty() && merged.back().cls == r.cls)
            merged.back().last = r.last;
        else
            merged.push_back(r);
    }
    runs = std::move(merged);
}

} // namespace

band_report classify_bands(const gas::absorption_spectrum &spectrum,
                           const band_thresholds &thresholds, std::size_t min_run_samples)
{
    if (spectrum.samples.empty())
        throw invalid_quantity("band classification: spectrum is empty");
    if (!(thresholds.gamma_low_db_per_km > 0.0) ||
        !(thresholds.gamma_low_db_per_km < thresholds.gamma_high_db_per_km))
        throw invalid_quantity("band classification: thresholds must satisfy 0 < low < high");

    const auto &samples = spectrum.samples;
    std::vector<band_class> classes(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const double gamma = samples[i].gamma_total_db_per_km;
        if (gamma <= thresholds.gamma_low_db_per_km)
            classes[i] = band_class::window;
        else if (gamma >= thresholds.gamma_high_db_per_km)
            classes[i] = band_class::blocked;
        else
            classes[i] = band_class::moderate;
    }

    std::vector<run> runs = build_runs(classes);

    // Flicker merge: absorb runs shorter than min_run_samples into the
    // longer neighbour (ties go to the preceding run) until none remain.
    while (runs.size() > 1)
    {
        std::size_t victim = runs.size();
        for (std::size_t i = 0; i < runs.size(); ++i)
            if (runs[i].length() < min_run_samples)
            {
                victim = i;
                break;
            }
        if (victim == runs.size())
            break;

        const bool has_prev = victim > 0;
        const bool has_next = victim + 1 < runs.size();
        std::size_t neighbour;
        if (has_prev && has_next)
            neighbour = runs[victim - 1].length() >= runs[victim + 1].length() ? victim - 1
                                                                               : victim + 1;
        else
            neighbour = has_prev ? victim - 1 : victim + 1;

        runs[victim].cls = runs[neighbour].cls;
        coalesce(runs);
    }

    band_report report;
    report.thresholds = thresholds;
    report.intervals.reserve(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i)
    {
        const run &r = runs[i];
        band_interval interval{};
        interval.cls = r.cls;
        interval.f_start_ghz = samples[r.first].f_ghz;
        // Contiguous partition: each interval extends to the start of the
        // next one; the last interval ends at the final sample.
        interval.f_stop_ghz =
            i + 1 < runs.size() ? samples[runs[i + 1].first].f_ghz : samples.back().f_ghz;

        double min = samples[r.first].gamma_total_db_per_km;
        double max = min;
        double sum = 0.0;
        for (std::size_t k = r.first; k <= r.last; ++k)
        {
            const double gamma = samples[k].gamma_total_db_per_km;
            min = std::min(min, gamma);
            max = std::max(max, gamma);
            sum += gamma;
        }
        interval.gamma_min_db_per_km = min;
        interval.gamma_max_db_per_km = max;
        interval.gamma_mean_db_per_km = sum / static_cast<double>(r.length());
        interval.sample_count = r.length();
        report.intervals.push_back(interval);
    }
    return report;
}

} // namespace mmwlink::budget
