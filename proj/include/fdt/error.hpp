#pragma once

#include <stdexcept>
#include <string>

namespace fdt {

/// Base class for every failure raised by the solver library. The message
/// is the short diagnostic the CLI prints verbatim.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fdt
