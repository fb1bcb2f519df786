#ifndef NETSTAB_RATIONAL_HPP
#define NETSTAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace netstab {

// Exact rational arithmetic everywhere. Stability predicates hinge on
// strict-vs-weak inequalities, so floating point is banned from the core.
using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q". Throws parse_error on malformed input or q=0.
Rational parse_rational(const std::string& text);

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& value);

int sign(const Rational& value);

std::string vector_str(const std::vector<Rational>& values);

}  // namespace netstab

#endif
