#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gridbasis {

// Exact arithmetic only: arbitrary-precision integers and rationals.
// No floating point is used anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

/// gcd of absolute values; 0 for an empty or all-zero vector.
Int gcd_of(const std::vector<Int>& v);

/// Divide by the gcd and flip signs so the first nonzero entry is positive.
/// The zero vector is left unchanged.
void make_primitive(std::vector<Int>& v);

bool is_integer(const Rat& q);

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_to_string(const Rat& q);

/// Accepts "p" or "p/q". Throws ValueError on anything else (including q = 0).
Rat rat_from_string(const std::string& s);

}  // namespace gridbasis
