// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/fog.hpp"
#include "mmwlink/errors.hpp"

#include <sstream>

namespace mmwlink::fog
{

namespace
{

void require_temperature_in_range(const temperature &t)
{
    if (t.kelvin() < min_temperature_k || t.kelvin() > max_temperature_k)
    {
        std::ostringstream msg;
        msg << "fog model: temperature " << t.kelvin() << " K is outside the double-Debye validity range ["
            << min_temperature_k << ", " << max_temperature_k << "] K";
        throw out_of_model_range(msg.str());
    }
}

} // namespace

liquid_water_permittivity water_permittivity(const frequency &f, const temperature &t)
{
    require_temperature_in_range(t);
    if (f.ghz() > max_permittivity_frequency_ghz)
    {
        std::ostringstream msg;
        msg << "fog model: frequency " << f.ghz() << " GHz exceeds the permittivity model limit of "
            << max_permittivity_frequency_ghz << " GHz";
        throw out_of_model_range(msg.str());
    }

    const double theta = 300.0 / t.kelvin();
    const double eps0 = 77.66 + 103.3 * (theta - 1.0);
    const double eps1 = 0.0671 * eps0;
    const double eps2 = 3.52;
    const double fp = 20.20 - 146.0 * (theta - 1.0) + 316.0 * (theta - 1.0) * (theta - 1.0);
    const double fs = 39.8 * fp;

    const double rp = f.ghz() / fp;
    const double rs = f.ghz() / fs;
    const double eps_prime = (eps0 - eps1) / (1.0 + rp * rp) + (eps1 - eps2) / (1.0 + rs * rs) + eps2;
    const double eps_double_prime = f.ghz() * (eps0 - eps1) / (fp * (1.0 + rp * rp)) +
                                    f.ghz() * (eps1 - eps2) / (fs * (1.0 + rs * rs));
    return {eps_prime, eps_double_prime};
}

double specific_attenuation_coefficient(const frequency &f, const temperature &t)
{
    const liquid_water_permittivity eps = water_permittivity(f, t);
    const double eta = (2.0 + eps.eps_prime) / eps.eps_double_prime;
    return 0.819 * f.ghz() / (eps.eps_double_prime * (1.0 + eta * eta));
}

double fog_attenuation(const fog_conditions &conditions, const frequency &f)
{
    if (f.ghz() > max_attenuation_frequency_ghz)
    {
        std::ostringstream msg;
        msg << "fog model: frequency " << f.ghz() << " GHz exceeds the attenuation model limit of "
            << max_attenuation_frequency_ghz << " GHz";
        throw out_of_model_range(msg.str());
    }
    return specific_attenuation_coefficient(f, conditions.temp) * conditions.water_density.g_per_m3();
}

} // namespace mmwlink::fog
