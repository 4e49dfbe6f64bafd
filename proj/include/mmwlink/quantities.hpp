// SPDX-License-Identifier: Apache-2.0
//
// Unit-safe scalar quantities shared by every propagation model module.
//
// Each type stores one double in a fixed internal unit (GHz, km, mm/h, K,
// hPa, g/m^3) and validates its domain on construction; instances are
// immutable afterwards and safe to share between threads.  Unit conversions
// happen only at the API edges (constructors / accessors), never inside the
// model code.

#ifndef MMWLINK_QUANTITIES_HPP
#define MMWLINK_QUANTITIES_HPP

#include <string>

namespace mmwlink
{

/// Carrier frequency, stored in gigahertz.  Must be positive and finite;
/// each model module additionally enforces its own validity window.
class frequency
{
  public:
    explicit frequency(double value_ghz);
    double ghz() const noexcept { return value_ghz_; }
    double hz() const noexcept { return value_ghz_ * 1.0e9; }

  private:
    double value_ghz_;
};

/// Link range, stored in kilometers.  Must be positive and finite.
class distance
{
  public:
    explicit distance(double value_km);
    double km() const noexcept { return value_km_; }
    double meters() const noexcept { return value_km_ * 1.0e3; }

  private:
    double value_km_;
};

/// Rain rate in millimeters per hour.  Nonnegative and finite.
class rain_rate
{
  public:
    explicit rain_rate(double value_mm_h);
    double mm_per_hour() const noexcept { return value_mm_h_; }

  private:
    double value_mm_h_;
};

/// Qualitative rain classes with boundaries at 0.25, 1, 4, 16 and 50 mm/h.
enum class rain_category
{
    very_light, // [0, 0.25) mm/h (drizzle)
    light,      // [0.25, 1)
    moderate,   // [1, 4)
    heavy,      // [4, 16)
    extreme,    // [16, 50)
    torrential  // [50, inf)
};

/// Fog / cloud liquid water content in grams per cubic meter.  Nonnegative.
class liquid_water_density
{
  public:
    explicit liquid_water_density(double value_g_m3);
    double g_per_m3() const noexcept { return value_g_m3_; }

  private:
    double value_g_m3_;
};

/// Thermodynamic temperature, stored in kelvin.  Must be above absolute zero.
class temperature
{
  public:
    explicit temperature(double value_kelvin);
    static temperature from_celsius(double value_celsius);
    double kelvin() const noexcept { return value_kelvin_; }
    double celsius() const noexcept { return value_kelvin_ - 273.15; }

  private:
    double value_kelvin_;
};

/// Dry-air partial pressure in hectopascal.  Must be positive.
class pressure
{
  public:
    explicit pressure(double value_hpa);
    double hpa() const noexcept { return value_hpa_; }

  private:
    double value_hpa_;
};

/// Water vapour density in grams per cubic meter.  Nonnegative.
class vapour_density
{
  public:
    explicit vapour_density(double value_g_m3);
    double g_per_m3() const noexcept { return value_g_m3_; }

  private:
    double value_g_m3_;
};

/// Tx-Rx geometry: range plus path elevation angle and linear-polarization
/// tilt angle (0 deg = horizontal, 90 deg = vertical).
class link_geometry
{
  public:
    explicit link_geometry(distance range, double elevation_deg = 0.0, double tilt_deg = 0.0);
    const distance &range() const noexcept { return range_; }
    double elevation_deg() const noexcept { return elevation_deg_; }
    double tilt_deg() const noexcept { return tilt_deg_; }

  private:
    distance range_;
    double elevation_deg_;
    double tilt_deg_;
};

/// Returns the rain class whose half-open interval [lo, hi) contains the
/// rate; boundary values belong to the upper class (4.0 mm/h -> heavy).
rain_category classify_rain(const rain_rate &rate);

/// Human-readable class name ("very_light", ..., "torrential").
std::string to_string(rain_category category);

/// Exact affine Celsius -> Kelvin conversion; throws invalid_quantity at or
/// below absolute zero.
temperature celsius_to_kelvin(double value_celsius);

} // namespace mmwlink

#endif // MMWLINK_QUANTITIES_HPP
