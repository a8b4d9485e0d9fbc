#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hilbert {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational. GMP keeps every result of arithmetic in lowest terms with a
/// positive denominator; values built by hand go through `make_rat`.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q" (no whitespace, q != 0).
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);
std::string to_string(const Int& value);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

Int binomial(unsigned long n, unsigned long k);

/// c_n = (1/n) C(2n-2, n-1): planar binary trees with n leaves (c_0 = 0).
Int catalan_number(unsigned long n);

}  // namespace hilbert
