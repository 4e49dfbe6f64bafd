// SPDX-License-Identifier: Apache-2.0
//
// Free-space path loss between isotropic antennas, in the two equivalent
// forms commonly used for link budgets:
//
//   dB form:     FSPL = 20 log10(d_km) + 20 log10(f_GHz) + 92.45
//   linear form: FSPL = (4 pi d f / c)^2        (power ratio, d and f in SI)
//
// The 92.45 constant is itself a rounding of 20 log10(4 pi 1e12 / c); the
// two forms agree to better than 0.01 dB.  The formula assumes far-field
// (Fraunhofer) conditions; no minimum-distance guard is applied beyond
// d > 0.

#ifndef MMWLINK_FSPL_HPP
#define MMWLINK_FSPL_HPP

#include "mmwlink/quantities.hpp"

namespace mmwlink::fspl
{

/// Speed of light in vacuum, m/s.
inline constexpr double speed_of_light_m_s = 299792458.0;

/// Free-space path loss in dB: 20 log10(d_km) + 20 log10(f_GHz) + 92.45.
/// Strictly increasing in both arguments; +20 dB per decade of either.
double fspl_db(const frequency &f, const distance &d);

/// Free-space path loss as a linear power ratio, (4 pi d f / c)^2.
/// 10 log10 of the result equals fspl_db to within 0.01 dB.
double fspl_linear_ratio(const frequency &f, const distance &d);

} // namespace mmwlink::fspl

#endif // MMWLINK_FSPL_HPP
