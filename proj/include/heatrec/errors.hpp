#pragma once

#include <stdexcept>
#include <string>

namespace heatrec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration, arguments or input files. CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

/// Solver breakdown, divergence or rank deficiency. CLI exit code 1.
struct NumericalError : Error {
    using Error::Error;
};

/// Filesystem / parse failures. CLI exit code 2.
struct IoError : Error {
    using Error::Error;
};

} // namespace heatrec
