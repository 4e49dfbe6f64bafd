// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/models.hpp"

namespace mmwlink
{

model_set model_set::load(const std::filesystem::path &data_dir)
{
    return model_set{rain::regression_table::load(data_dir / "p838_coefficients.csv"),
                     gas::attenuation_model::load(data_dir)};
}

} // namespace mmwlink
