#pragma once

// Arbitrary-precision integer support. Everything in this library computes
// exactly; Int is the only integer type that crosses module boundaries.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sfs {

using Int = mpz_class;

// Floor division, b != 0. (GMP's operator/ truncates toward zero.)
Int floor_div(const Int& a, const Int& b);

// Quotient a/b when b divides a exactly; throws std::logic_error otherwise.
Int exact_div(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);

// Parses a base-10 integer with optional leading '-'. Throws
// std::invalid_argument on anything else.
Int parse_int(const std::string& text);

}  // namespace sfs
