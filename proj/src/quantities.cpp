// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/quantities.hpp"
#include "mmwlink/errors.hpp"

#include <cmath>
#include <sstream>

namespace mmwlink
{

namespace
{

[[noreturn]] void fail(const char *name, double value, const char *requirement)
{
    std::ostringstream msg;
    msg << name << " = " << value << " is invalid: " << requirement;
    throw invalid_quantity(msg.str());
}

void require_finite(const char *name, double value)
{
    if (!std::isfinite(value))
        fail(name, value, "value must be finite");
}

} // namespace

frequency::frequency(double value_ghz) : value_ghz_(value_ghz)
{
    require_finite("frequency (GHz)", value_ghz);
    if (value_ghz <= 0.0)
        fail("frequency (GHz)", value_ghz, "value must be positive");
}

distance::distance(double value_km) : value_km_(value_km)
{
    require_finite("distance (km)", value_km);
    if (value_km <= 0.0)
        fail("distance (km)", value_km, "value must be positive");
}

rain_rate::rain_rate(double value_mm_h) : value_mm_h_(value_mm_h)
{
    require_finite("rain rate (mm/h)", value_mm_h);
    if (value_mm_h < 0.0)
        fail("rain rate (mm/h)", value_mm_h, "value must be nonnegative");
}

liquid_water_density::liquid_water_density(double value_g_m3) : value_g_m3_(value_g_m3)
{
    require_finite("liquid water density (g/m^3)", value_g_m3);
    if (value_g_m3 < 0.0)
        fail("liquid water density (g/m^3)", value_g_m3, "value must be nonnegative");
}

temperature::temperature(double value_kelvin) : value_kelvin_(value_kelvin)
{
    require_finite("temperature (K)", value_kelvin);
    if (value_kelvin <= 0.0)
        fail("temperature (K)", value_kelvin, "value must be above absolute zero");
}

temperature temperature::from_celsius(double value_celsius)
{
    require_finite("temperature (C)", value_celsius);
    if (value_celsius <= -273.15)
        fail("temperature (C)", value_celsius, "value must be above absolute zero (-273.15 C)");
    return temperature(value_celsius + 273.15);
}

pressure::pressure(double value_hpa) : value_hpa_(value_hpa)
{
    require_finite("pressure (hPa)", value_hpa);
    if (value_hpa <= 0.0)
        fail("pressure (hPa)", value_hpa, "value must be positive");
}

vapour_density::vapour_density(double value_g_m3) : value_g_m3_(value_g_m3)
{
    require_finite("vapour density (g/m^3)", value_g_m3);
    if (value_g_m3 < 0.0)
        fail("vapour density (g/m^3)", value_g_m3, "value must be nonnegative");
}

link_geometry::link_geometry(distance range, double elevation_deg, double tilt_deg)
    : range_(range), elevation_deg_(elevation_deg), tilt_deg_(tilt_deg)
{
    require_finite("elevation angle (deg)", elevation_deg);
    require_finite("polarization tilt angle (deg)", tilt_deg);
    if (elevation_deg < -90.0 || elevation_deg > 90.0)
        fail("elevation angle (deg)", elevation_deg, "value must be within [-90, 90]");
    if (tilt_deg < 0.0 || tilt_deg > 90.0)
        fail("polarization tilt angle (deg)", tilt_deg, "value must be within [0, 90]");
}

rain_category classify_rain(const rain_rate &rate)
{
    const double r = rate.mm_per_hour();
    if (r < 0.25)
        return rain_category::very_light;
    if (r < 1.0)
        return rain_category::light;
    if (r < 4.0)
        return rain_category::moderate;
    if (r < 16.0)
        return rain_category::heavy;
    if (r < 50.0)
        return rain_category::extreme;
    return rain_category::torrential;
}

std::string to_string(rain_category category)
{
    switch (category)
    {
    case rain_category::very_light:
        return "very_light";
    case rain_category::light:
        return "light";
    case rain_category::moderate:
        return "moderate";
    case rain_category::heavy:
        return "heavy";
    case rain_category::extreme:
        return "extreme";
    case rain_category::torrential:
        return "torrential";
    }
    throw invalid_quantity("unknown rain category value");
}

temperature celsius_to_kelvin(double value_celsius)
{
    return temperature::from_celsius(value_celsius);
}

} // namespace mmwlink
