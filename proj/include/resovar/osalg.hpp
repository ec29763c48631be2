#pragma once

#include "resovar/chart.hpp"
#include "resovar/linalg.hpp"
#include "resovar/rational.hpp"

namespace resovar {

// A degree-1 element of the Orlik-Solomon algebra of the affine chart:
// rational residues (a_H) indexed by affine line indices.
struct OneForm {
  RatVec residues;

  std::size_t size() const { return residues.size(); }
  Rat& operator[](std::size_t i) { return residues[i]; }
  const Rat& operator[](std::size_t i) const { return residues[i]; }

  static OneForm zero(std::size_t n) { return OneForm{RatVec(n, Rat(0))}; }
  static OneForm unit(std::size_t n, std::size_t i);
  bool is_zero() const;
};

// A degree-2 element, stored per affine flat x in the basis
// { w_{i0} ^ w_j : j in incident(x), j != i0 } with i0 the least incident
// affine index; flats of multiplicity m carry blocks of length m - 1.
struct TwoForm {
  std::vector<RatVec> blocks;  // aligned with chart.affine_flats

  bool is_zero() const;
};

// Total degree-2 dimension of the chart, sum of (multiplicity - 1).
std::size_t b2(const Chart& chart);

// Cup product alpha ^ beta. Only intersecting pairs contribute: the block
// of flat x has coefficient A*b_j - B*a_j at w_{i0} ^ w_j, where A and B
// are the sums of the residues of alpha resp. beta over the lines through
// x. This closed form is the triple-relation rewriting
// w_i ^ w_j = w_{i0} ^ w_j - w_{i0} ^ w_i folded flat.
TwoForm wedge(const Chart& chart, const OneForm& alpha, const OneForm& beta);

// Matrix of beta -> wedge(alpha, beta) in the TwoForm basis, b2 x n;
// column j is wedge(alpha, e_j).
RatMat cup_matrix(const Chart& chart, const OneForm& alpha);

// Kernel of the cup map as a canonical RREF subspace; the orthogonal
// complement of alpha under the cup product pairing. Contains alpha
// whenever alpha != 0.
Subspace orth_complement(const Chart& chart, const OneForm& alpha);

// dim H^1 of the complex (A^*, alpha ^): n when alpha = 0, otherwise
// dim ker(cup) - 1 since the image of A^0 is the line through alpha.
std::size_t aomoto_h1_dim(const Chart& chart, const OneForm& alpha);

}  // namespace resovar
