#pragma once

#include <gmpxx.h>

#include <string>

namespace gtq {

using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws InputError otherwise.
Rat parse_rat(const std::string& s);

// Lowest terms, "p/q" or plain "p" for integers. Never emits floats.
std::string rat_str(const Rat& r);

bool rat_is_integer(const Rat& r);

// Requires rat_is_integer and fitting in long.
long rat_to_long(const Rat& r);

// r - floor(r), in [0, 1). Two rationals differ by an integer iff their frac parts match.
Rat rat_frac(const Rat& r);

}  // namespace gtq
