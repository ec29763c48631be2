#pragma once

#include <map>
#include <string>
#include <utility>

#include "resovar/arrangement.hpp"

namespace resovar {

// Tutte polynomial of the rank <= 3 linear matroid on the lines'
// coefficient triples, as a coefficient map (i, j) -> c for monomials
// x^i y^j.
struct TuttePolynomial {
  std::map<std::pair<int, int>, long long> coeffs;

  long long evaluate(long long x, long long y) const;
  std::string to_string() const;
  bool operator==(const TuttePolynomial&) const = default;
};

// Deletion-contraction with loop/coloop base cases, memoized on
// (ground set, contracted set) masks.
TuttePolynomial tutte_polynomial(const Arrangement& arr);

// Rank of the coefficient-triple span of all lines.
int matroid_rank(const Arrangement& arr);

namespace detail {

// Same computation but branching on the highest-index element first;
// exists so tests can confirm order independence.
TuttePolynomial tutte_polynomial_reversed(const Arrangement& arr);

}  // namespace detail

}  // namespace resovar
