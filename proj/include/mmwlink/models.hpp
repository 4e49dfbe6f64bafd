// SPDX-License-Identifier: Apache-2.0
//
// Bundle of the data-backed propagation models (rain regression table and
// gaseous line tables), loaded once from a data directory and shared
// immutably by the budget, sweep, and band-report code.

#ifndef MMWLINK_MODELS_HPP
#define MMWLINK_MODELS_HPP

#include "mmwlink/gas.hpp"
#include "mmwlink/rain.hpp"

#include <filesystem>

namespace mmwlink
{

struct model_set
{
    rain::regression_table rain_table;
    gas::attenuation_model gas_model;

    /// Loads p838_coefficients.csv, p676_oxygen_lines.csv, and
    /// p676_water_lines.csv from data_dir; throws io_error on any missing
    /// or corrupted asset.
    static model_set load(const std::filesystem::path &data_dir);
};

} // namespace mmwlink

#endif // MMWLINK_MODELS_HPP
