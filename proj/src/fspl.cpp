// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/fspl.hpp"

#include <cmath>
#include <numbers>

namespace mmwlink::fspl
{

double fspl_db(const frequency &f, const distance &d)
{
    return 20.0 * std::log10(d.km()) + 20.0 * std::log10(f.ghz()) + 92.45;
}

double fspl_linear_ratio(const frequency &f, const distance &d)
{
    const double x = 4.0 * std::numbers::pi * d.meters() * f.hz() / speed_of_light_m_s;
    return x * x;
}

} // namespace mmwlink::fspl
