// SPDX-License-Identifier: Apache-2.0
//
// Gaseous specific attenuation per ITU-R P.676-10 (2013), Annex 1: the
// line-by-line summation over the oxygen and water-vapour spectra.
//
//   gamma = 0.1820 f N''(f)                        [dB/km, f in GHz]
//   N''   = sum_i S_i F_i  (+ dry continuum N''_D for oxygen)
//
// Line strengths (theta = 300/T, p dry-air pressure in hPa, e water-vapour
// partial pressure in hPa):
//
//   oxygen: S_i = a1 1e-7 p theta^3   exp(a2 (1 - theta))
//   water:  S_i = b1 1e-1 e theta^3.5 exp(b2 (1 - theta))
//
// Line-shape factor with pressure-broadened width df and interference
// correction delta (delta = 0 for water vapour):
//
//   F_i = (f/f_i) [ (df - delta (f_i - f)) / ((f_i - f)^2 + df^2)
//                 + (df - delta (f_i + f)) / ((f_i + f)^2 + df^2) ]
//
//   oxygen: df = a3 1e-4 (p theta^(0.8 - a4) + 1.1 e theta), then
//           df <- sqrt(df^2 + 2.25e-6)                  (Zeeman floor)
//           delta = (a5 + a6 theta) 1e-4 (p + e) theta^0.8
//   water:  df = b3 1e-4 (p theta^b4 + b5 e theta^b6), then
//           df <- 0.535 df + sqrt(0.217 df^2 + 2.1316e-12 f_i^2 / theta)
//                                                       (Doppler floor)
//
// The dry continuum (Debye spectrum of oxygen plus pressure-induced
// nitrogen absorption) is added to the oxygen sum; the water-vapour
// continuum is carried by the 1780 GHz pseudo-line of the water table.
// Spectroscopic line tables are loaded from the checksummed assets
// data/p676_oxygen_lines.csv and data/p676_water_lines.csv.

#ifndef MMWLINK_GAS_HPP
#define MMWLINK_GAS_HPP

#include "mmwlink/quantities.hpp"

#include <array>
#include <filesystem>
#include <vector>

namespace mmwlink::gas
{

enum class gas_species
{
    oxygen,
    water_vapour
};

/// One absorption line: species tag, center frequency, and the six shape
/// coefficients of the recommendation's table layout (a1..a6 for oxygen,
/// b1..b6 for water vapour; table scale factors are applied in the model).
struct spectral_line
{
    gas_species species;
    double f0_ghz;
    std::array<double, 6> coeff;
};

/// Expected line counts of the P.676-10 tables.
inline constexpr std::size_t oxygen_line_count = 44;
inline constexpr std::size_t water_line_count = 35;

/// Immutable spectroscopic table for one gas.
class spectral_line_table
{
  public:
    /// Loads one line table and verifies species-specific header names
    /// (f0, a1..a6 or b1..b6), the full line count, and ascending centers.
    static spectral_line_table load(const std::filesystem::path &csv_path, gas_species species);

    gas_species species() const noexcept { return species_; }
    const std::vector<spectral_line> &lines() const noexcept { return lines_; }

  private:
    spectral_line_table(gas_species species, std::vector<spectral_line> lines)
        : species_(species), lines_(std::move(lines))
    {
    }
    gas_species species_;
    std::vector<spectral_line> lines_;
};

/// Atmospheric state for the gas model.  The water-vapour partial pressure
/// e = rho T / 216.7 (hPa) is derived, not stored.
class gas_atmosphere
{
  public:
    gas_atmosphere(pressure dry_pressure, temperature temp, vapour_density vapour);

    /// Mean annual global reference atmosphere at the surface:
    /// 1013.25 hPa, 15 C, 7.5 g/m^3.
    static gas_atmosphere standard();

    double dry_pressure_hpa() const noexcept { return dry_pressure_.hpa(); }
    double temperature_k() const noexcept { return temp_.kelvin(); }
    double vapour_density_g_m3() const noexcept { return vapour_.g_per_m3(); }
    double vapour_partial_pressure_hpa() const noexcept;
    double theta() const noexcept { return 300.0 / temp_.kelvin(); }

  private:
    pressure dry_pressure_;
    temperature temp_;
    vapour_density vapour_;
};

/// Frequency validity window of the line-by-line method, GHz.
inline constexpr double min_frequency_ghz = 1.0;
inline constexpr double max_frequency_ghz = 1000.0;

/// Line strength S_i (nonnegative; proportional to dry pressure for oxygen
/// lines and to the vapour partial pressure for water lines).
double line_strength(const spectral_line &line, const gas_atmosphere &atmosphere);

/// Pressure-broadened line width df in GHz, including the Zeeman (oxygen)
/// or Doppler (water vapour) floor; increases with pressure.
double line_width_ghz(const spectral_line &line, const gas_atmosphere &atmosphere);

/// Line-shape factor F_i; finite everywhere including the line center.
double line_shape(const spectral_line &line, const frequency &f, const gas_atmosphere &atmosphere);

/// Per-mechanism specific attenuation, dB/km.
struct gas_attenuation
{
    double oxygen_db_per_km;
    double water_db_per_km;
    double total_db_per_km; // always oxygen + water
};

/// One spectrum sample.
struct spectrum_sample
{
    double f_ghz;
    double gamma_oxygen_db_per_km;
    double gamma_water_db_per_km;
    double gamma_total_db_per_km;
};

/// Ordered attenuation samples over a frequency grid; frequencies strictly
/// increasing, all attenuation values nonnegative.
struct absorption_spectrum
{
    std::vector<spectrum_sample> samples;
};

/// Line-by-line attenuation model bundling the two spectroscopic tables.
class attenuation_model
{
  public:
    attenuation_model(spectral_line_table oxygen_lines, spectral_line_table water_lines);

    /// Loads p676_oxygen_lines.csv and p676_water_lines.csv from data_dir.
    static attenuation_model load(const std::filesystem::path &data_dir);

    /// Oxygen / water-vapour / total specific attenuation at f.  Throws
    /// out_of_model_range outside [1, 1000] GHz.
    gas_attenuation specific_attenuation(const frequency &f, const gas_atmosphere &atmosphere) const;

    /// Inclusive grid sweep: samples at f_start + i * step for
    /// i = 0 .. floor((f_stop - f_start)/step); the sweep may run on
    /// several threads but the output is grid-ordered and identical for
    /// every thread count.
    absorption_spectrum sweep(const gas_atmosphere &atmosphere, double f_start_ghz,
                              double f_stop_ghz, double step_ghz, unsigned n_threads = 1) const;

    const spectral_line_table &oxygen_lines() const noexcept { return oxygen_lines_; }
    const spectral_line_table &water_lines() const noexcept { return water_lines_; }

  private:
    spectral_line_table oxygen_lines_;
    spectral_line_table water_lines_;
};

} // namespace mmwlink::gas

#endif // MMWLINK_GAS_HPP
