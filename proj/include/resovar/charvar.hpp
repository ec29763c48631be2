#pragma once

#include <cstdint>
#include <vector>

#include "resovar/chart.hpp"
#include "resovar/rational.hpp"
#include "resovar/resonance.hpp"

namespace resovar {

// A rank-one local system with torsion monodromy: one residue class
// t_j in Q/Z per projective line, stored as a rational in [0, 1),
// with sum = 0 mod 1 (the product-one constraint on the monodromies).
struct LocalSystem {
  RatVec classes;

  static LocalSystem from_classes(RatVec classes);
  std::size_t size() const { return classes.size(); }
  bool is_trivial() const;
};

// Whitespace-separated rationals in projective line order; validated.
LocalSystem parse_local_system(const std::string& text, std::size_t expected_lines);

// A cohomology class in projective coordinates: one rational residue per
// line, summing to zero exactly.
struct ProjectiveResidues {
  RatVec a;

  std::size_t size() const { return a.size(); }
};

// The exponential correspondence: residues to monodromy classes mod 1.
// Throws SumNonzero unless the residues sum to zero.
LocalSystem exp_residues(const ProjectiveResidues& residues);

struct PencilSum {
  std::size_t flat_index;  // into the lattice, multiplicity >= 3
  Rat sum;
};

// A witness that the local system is admissible: residues that reduce to
// its classes mod 1, with no residue in Z_{>0} and no residue sum over a
// multiple point in Z_{>0}.
struct AdmissibilityReport {
  ProjectiveResidues witness;
  std::vector<PencilSum> pencil_sums;
};

// Bounded deterministic search for a witness. Base representatives are
// t_j - 1 for t_j != 0 (and 0 otherwise) on the lines j >= 1, with a_0
// forced by the zero-sum constraint; per-line shifts in {0, +1} are then
// explored by backtracking in lexicographic order, pruned by the per-flat
// sum conditions. Throws SearchExhausted when the box holds no witness.
AdmissibilityReport admissible_witness(const Arrangement& arr, const LocalSystem& lambda);

// The first `max_count` witnesses in search order (for independence tests).
std::vector<AdmissibilityReport> admissible_witnesses(const Arrangement& arr,
                                                      const LocalSystem& lambda,
                                                      std::size_t max_count);

// dim H^1(M, L) computed through the Aomoto complex at an admissible
// witness, converted to chart coordinates by dropping the hinf entry.
std::size_t local_system_h1(const Arrangement& arr, const Chart& chart,
                            const LocalSystem& lambda);

std::pair<std::size_t, AdmissibilityReport> local_system_h1_with_witness(
    const Arrangement& arr, const Chart& chart, const LocalSystem& lambda);

// A subtorus of the character torus matching one resonance component,
// described in the chart's affine coordinates: characters supported on
// `support` satisfying multiplicative relations prod_j lambda_j^{e_j} = 1
// given as integer exponent vectors. The hinf coordinate is determined by
// the others and carries no constraint.
struct CharComponent {
  std::size_t component = 0;  // index into the matching resonance enumeration
  ComponentKind kind = ComponentKind::ParallelFamily;
  std::vector<int> support;                        // affine indices
  std::vector<std::vector<long long>> relations;   // exponent vectors, length n
  std::size_t dimension = 0;

  bool contains(const Chart& chart, const LocalSystem& lambda) const;
};

// One subtorus per resonance component: full torus on a parallel family;
// product-one over the lines of a pencil; the three parallelogram
// relations l_{H0} l_{Hk} l_{Hp} = 1, l_{Hk} = l_{Hq}, l_{Hl} = l_{Hp}.
std::vector<CharComponent> char_components(const Arrangement& arr, const Chart& chart,
                                           std::optional<int> forced_h0 = std::nullopt);

// Lifts a chart one-form to projective residues (hinf entry forced by the
// zero-sum condition) and applies exp.
LocalSystem exp_chart_form(const Chart& chart, const OneForm& alpha);

// Random torsion character of the subtorus, pushed through exp from a
// rational point of the matching resonance component; resampled until the
// character is nontrivial (bounded retries).
LocalSystem sample_subtorus_point(const Chart& chart, const Component& component,
                                  std::mt19937_64& rng);

}  // namespace resovar
