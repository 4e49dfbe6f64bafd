// SPDX-License-Identifier: Apache-2.0
//
// Exception taxonomy shared by all mmwlink modules.
//
//   invalid_quantity   - an input value violates a type invariant (negative
//                        rain rate, zero distance, malformed scenario key, ...)
//   out_of_model_range - the value is well-formed but outside the validity
//                        window of the requested propagation model
//   io_error           - a data asset or output file could not be read,
//                        written, or failed its integrity check
//
// The command-line front end maps these to exit codes 2, 3 and 4.

#ifndef MMWLINK_ERRORS_HPP
#define MMWLINK_ERRORS_HPP

#include <stdexcept>

namespace mmwlink
{

class invalid_quantity : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

class out_of_model_range : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

class io_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace mmwlink

#endif // MMWLINK_ERRORS_HPP
