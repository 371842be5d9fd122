#ifndef ORDTURAN_ERRORS_HPP
#define ORDTURAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordturan {

// Violated operation precondition (bad sizes, divisibility, range, ...).
// The CLI maps this to exit code 2.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A quasirandom block could not be certified within the retry budget.
// The CLI maps this to exit code 3.
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ordturan

#endif
