#ifndef ORDTURAN_RATIONAL_HPP
#define ORDTURAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ordturan {

// Exact arbitrary-precision rational. All densities, tolerances and bound
// values in this library are Rat; doubles appear only in convenience columns
// of reports and in the spectral estimator.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical "p/q" form with q >= 1, always including the denominator.
std::string rat_to_string(const Rat& r);

/// Accepts "p/q" or a plain integer string. Throws ParseError on anything else.
Rat rat_from_string(const std::string& s);

/// Correctly rounded double value of r.
double rat_to_double(const Rat& r);

/// Exact rational value of a finite double.
Rat rat_from_double(double x);

} // namespace ordturan

#endif
