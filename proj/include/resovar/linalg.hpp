#pragma once

#include <cstddef>

#include "resovar/rational.hpp"

namespace resovar {

// Gauss-Jordan elimination over Q. After the call the matrix is in reduced
// row echelon form with zero rows collected at the bottom.
void rref_in_place(RatMat& m);

// RREF with zero rows dropped.
RatMat rref(RatMat m);

std::size_t rank(RatMat m);

// Basis of { x : m x = 0 } as RREF rows. `cols` is the ambient dimension,
// needed because `m` may have no rows.
RatMat kernel_basis(const RatMat& m, std::size_t cols);

// A linear subspace of Q^n held as a canonical RREF basis. Two subspaces
// are equal iff their RREF matrices are equal, which makes equality,
// containment and intersection exact and deterministic.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace from_generators(RatMat generators, std::size_t ambient);

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const RatMat& basis() const { return rows_; }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  RatMat rows_;  // RREF, no zero rows
  std::size_t ambient_ = 0;
};

}  // namespace resovar
