#pragma once

// Exact rational scalars backed by GMP. Values are always in canonical form:
// reduced to lowest terms, denominator > 0, zero stored as 0/1.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace evo {

using Rat = mpq_class;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p", "-p", or "p/q" (q != 0). Result is canonicalized.
Rat rat_parse(const std::string& text);

// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& q);

inline Rat rat_of(long n) { return Rat(n); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

std::vector<Rat> rats_of(const std::vector<long>& values);

}  // namespace evo
