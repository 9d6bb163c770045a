#ifndef SEMPLE_ERRORS_HPP
#define SEMPLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semple {

// Malformed or out-of-contract input. CLI exit status 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation produced something an invariant forbids (singular pairing
// system, nonintegral enumerative output, ...). CLI exit status 2.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A truncated series ran out of known coefficients before a needed
// valuation was determined. CLI exit status 3.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string &what, int required_truncation)
        : std::runtime_error(what), required_truncation_(required_truncation)
    {
    }

    // Smallest truncation order that would have let the step proceed
    // (a lower bound when the shortfall compounds over later steps).
    int required_truncation() const noexcept { return required_truncation_; }

private:
    int required_truncation_;
};

} // namespace semple

#endif
