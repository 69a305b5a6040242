#pragma once

#include <gmpxx.h>

#include <string>

namespace lctforge {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator), which is exactly the contract the rest of the library needs.
// No floating point appears anywhere in the artifact.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Renders "p/q" in lowest terms, "p" when the denominator is 1.
std::string rat_str(const Rational& q);

// Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lctforge
