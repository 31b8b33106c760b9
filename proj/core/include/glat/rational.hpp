#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace glat {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator as long as they are built through the helpers below.
using Rat = mpq_class;

/// num/den reduced to lowest terms; den must be nonzero.
Rat rat_of(long num, long den = 1);

/// Parses "p/q" (q > 0 after reduction) or a bare integer "p".
Rat rat_parse(const std::string& s);

/// Canonical serialization "p/q": lowest terms, q > 0, zero is "0/1".
std::string rat_str(const Rat& r);

std::vector<Rat> rat_parse_vector(const std::vector<std::string>& items);
std::vector<std::string> rat_str_vector(const std::vector<Rat>& v);

}  // namespace glat
