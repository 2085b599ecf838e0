#ifndef MSTX_ERRORS_HPP
#define MSTX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mstx {

// Bad user input: out-of-domain arguments, malformed specs. CLI exit code 2.
class validation_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Internal numerical failure: quadrature or series did not converge to the
// requested precision. CLI exit code 3.
class precision_fault : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace mstx

#endif
