#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace resovar {

// Exact rational scalar used throughout. All linear algebra in this
// project is done over Q; there is no floating point on any code path
// that decides a rank, a membership or a residue condition.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

// Parses "p" or "p/q" (optional leading sign on p). Throws MalformedNumber.
Rat rat_from_string(const std::string& token);

// "p" when the denominator is 1, otherwise "p/q", always reduced.
std::string rat_to_string(const Rat& value);

// Largest integer <= value.
mpz_class rat_floor(const Rat& value);

// value - floor(value), in [0, 1). Residue class representative in Q/Z.
Rat mod1(const Rat& value);

bool is_integer(const Rat& value);
bool is_positive_integer(const Rat& value);

// Whitespace-separated rationals ('#' starts a comment, rest of line ignored).
RatVec parse_rat_vector(const std::string& text);

std::vector<std::string> rat_vector_to_strings(const RatVec& values);

}  // namespace resovar
