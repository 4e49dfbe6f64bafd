// SPDX-License-Identifier: Apache-2.0
//
// Rain specific attenuation per ITU-R P.838-3 (2005).
//
// The recommendation models gamma_R = k * R^alpha (dB/km) with k and alpha
// obtained from frequency regressions of the form
//
//   log10 k = sum_j a_j exp(-((log10 f - b_j)/c_j)^2) + m_k log10 f + c_k
//   alpha   = sum_j a_j exp(-((log10 f - b_j)/c_j)^2) + m_a log10 f + c_a
//
// (four Gaussian terms for k, five for alpha; f in GHz, valid 1..1000 GHz),
// evaluated separately for horizontal and vertical polarization and then
// combined for the actual path elevation angle theta and polarization tilt
// angle tau:
//
//   k     = [k_H + k_V + (k_H - k_V) cos^2(theta) cos(2 tau)] / 2
//   alpha = [k_H a_H + k_V a_V + (k_H a_H - k_V a_V) cos^2(theta) cos(2 tau)]
//           / (2 k)
//
// Coefficients are computed from the analytic regression at every frequency
// (no table interpolation); the regression constants are loaded from the
// versioned asset data/p838_coefficients.csv.  No effective-path-length
// correction is applied: path attenuation is gamma_R times the range.

#ifndef MMWLINK_RAIN_HPP
#define MMWLINK_RAIN_HPP

#include "mmwlink/quantities.hpp"

#include <filesystem>
#include <vector>

namespace mmwlink::rain
{

/// Power-law pair for a single frequency / polarization configuration.
struct rain_coefficients
{
    double k;     // power-law factor, > 0
    double alpha; // power-law exponent, > 0 over the validity range
};

/// Regression coefficients for horizontal and vertical polarization at one
/// frequency.
struct coefficient_set
{
    double k_h;
    double alpha_h;
    double k_v;
    double alpha_v;
};

/// One Gaussian term of a P.838-3 frequency regression.
struct regression_term
{
    double a;
    double b;
    double c;
};

/// One full regression series: Gaussian terms plus the affine tail
/// m * log10(f) + c.  For the k targets the series yields log10(k).
struct regression_series
{
    std::vector<regression_term> terms;
    double m;
    double c;
    bool log_output;
};

/// The four regression series of P.838-3 (k_H, k_V, alpha_H, alpha_V),
/// loaded from the checksummed coefficient asset.  Immutable after load.
class regression_table
{
  public:
    /// Loads data/p838_coefficients.csv (columns target, term, a, b, c, m,
    /// c).  Throws io_error on missing file, checksum mismatch, or wrong
    /// term counts (4 Gaussian terms for k targets, 5 for alpha targets).
    static regression_table load(const std::filesystem::path &csv_path);

    const regression_series &k_h() const noexcept { return k_h_; }
    const regression_series &k_v() const noexcept { return k_v_; }
    const regression_series &alpha_h() const noexcept { return alpha_h_; }
    const regression_series &alpha_v() const noexcept { return alpha_v_; }

  private:
    regression_table() = default;
    regression_series k_h_, k_v_, alpha_h_, alpha_v_;
};

/// Frequency validity window of the P.838-3 regressions, GHz.
inline constexpr double min_frequency_ghz = 1.0;
inline constexpr double max_frequency_ghz = 1000.0;

/// Evaluates the four regressions at f.  Throws out_of_model_range when f
/// is outside [1, 1000] GHz.
coefficient_set coefficients_hv(const frequency &f, const regression_table &table);

/// Combines horizontal/vertical coefficients for the given path elevation
/// and polarization tilt.  tau = 0 with theta = 0 reproduces (k_H, alpha_H)
/// exactly; tau = 90 deg reproduces (k_V, alpha_V).
rain_coefficients combine_polarization(const coefficient_set &hv, const link_geometry &geometry);

/// Power law gamma_R = k * R^alpha in dB/km; zero iff the rate is zero.
double specific_attenuation(const rain_coefficients &coefficients, const rain_rate &rate);

/// Path attenuation in dB: specific attenuation times range (terrestrial
/// path, no effective-path-length reduction).
double path_attenuation(double gamma_db_per_km, const distance &d);

} // namespace mmwlink::rain

#endif // MMWLINK_RAIN_HPP
