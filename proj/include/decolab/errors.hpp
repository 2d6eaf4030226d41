// errors.hpp — Error types shared across the library.
//
// Validation failures (bad parameters, ill-formed grids) throw
// std::invalid_argument. Numerical failures detected at run time
// (convergence, degenerate expansions, contractivity violations) throw
// NumericError so callers can map them to a distinct exit status.

#pragma once

#include <stdexcept>
#include <string>

namespace decolab {

class NumericError : public std::runtime_error {
 public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace decolab
