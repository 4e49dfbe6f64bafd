// SPDX-License-Identifier: Apache-2.0
//
// Cloud and fog specific attenuation per ITU-R P.840 (2013 edition).
//
// For droplets much smaller than the wavelength (fog droplets are below
// ~0.01 cm, so the Rayleigh approximation holds through 200 GHz) the
// specific attenuation is linear in the liquid water content M:
//
//   gamma_c = K_l(f, T) * M        [dB/km, M in g/m^3]
//
// with the attenuation coefficient
//
//   K_l = 0.819 f / (eps''(f,T) (1 + eta^2)),   eta = (2 + eps') / eps''
//
// and eps' - j eps'' the double-Debye permittivity of liquid water:
//
//   eps0 = 77.66 + 103.3 (theta - 1),  eps1 = 0.0671 eps0,  eps2 = 3.52
//   fp   = 20.20 - 146 (theta - 1) + 316 (theta - 1)^2      [GHz]
//   fs   = 39.8 fp                                          [GHz]
//   theta = 300 / T(K)
//
// Model constants are embedded here rather than shipped as a data asset;
// the attenuation model is applied up to the recommendation's stated
// 200 GHz limit, the permittivity expressions up to 1000 GHz.

#ifndef MMWLINK_FOG_HPP
#define MMWLINK_FOG_HPP

#include "mmwlink/quantities.hpp"

namespace mmwlink::fog
{

/// Fog / cloud state: liquid water content and droplet temperature.
struct fog_conditions
{
    liquid_water_density water_density{0.0};
    temperature temp{288.15};
};

/// Complex relative permittivity components of liquid water at (f, T).
struct liquid_water_permittivity
{
    double eps_prime;        // real part
    double eps_double_prime; // imaginary part, > 0 for f > 0 (lossy medium)
};

/// Temperature validity window of the double-Debye fit, kelvin.
inline constexpr double min_temperature_k = 233.0;
inline constexpr double max_temperature_k = 313.0;

/// Upper frequency limit of the permittivity expressions, GHz.
inline constexpr double max_permittivity_frequency_ghz = 1000.0;

/// Upper frequency limit of the attenuation model gamma_c = K_l * M, GHz.
inline constexpr double max_attenuation_frequency_ghz = 200.0;

/// Double-Debye permittivity of liquid water.  Throws out_of_model_range
/// for T outside [233, 313] K or f above 1000 GHz.
liquid_water_permittivity water_permittivity(const frequency &f, const temperature &t);

/// Cloud liquid attenuation coefficient K_l in (dB/km)/(g/m^3); increasing
/// in f across the mmWave range at fixed temperature.
double specific_attenuation_coefficient(const frequency &f, const temperature &t);

/// Fog specific attenuation gamma_c = K_l(f, T) * M in dB/km, exactly
/// linear in M.  Throws out_of_model_range above 200 GHz.
double fog_attenuation(const fog_conditions &conditions, const frequency &f);

} // namespace mmwlink::fog

#endif // MMWLINK_FOG_HPP
