#ifndef SEMPLE_NUMERIC_HPP
#define SEMPLE_NUMERIC_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace semple {

using Integer = mpz_class;
using Rational = mpq_class;

// "num" or "num/den" in lowest terms.
std::string to_string(const Integer &z);
std::string to_string(const Rational &q);

// Accepts "a", "-a", "a/b"; throws InputError on anything else or b == 0.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace semple

#endif
