#include "resovar/osalg.hpp"

#include <algorithm>
#include <string>

#include "resovar/errors.hpp"

namespace resovar {

namespace {

void require_matching(const Chart& chart, const OneForm& form, const char* what) {
  if (form.size() != chart.n()) {
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + " has " + std::to_string(form.size()) +
             " residues, chart has " + std::to_string(chart.n()) + " affine lines");
  }
}

}  // namespace

OneForm OneForm::unit(std::size_t n, std::size_t i) {
  OneForm e = zero(n);
  e[i] = 1;
  return e;
}

bool OneForm::is_zero() const {
  return std::all_of(residues.begin(), residues.end(), [](const Rat& x) { return x == 0; });
}

bool TwoForm::is_zero() const {
  for (const RatVec& block : blocks) {
    for (const Rat& x : block) {
      if (x != 0) return false;
    }
  }
  return true;
}

std::size_t b2(const Chart& chart) {
  std::size_t total = 0;
  for (const AffineFlat& flat : chart.affine_flats) total += flat.multiplicity() - 1;
  return total;
}

TwoForm wedge(const Chart& chart, const OneForm& alpha, const OneForm& beta) {
  require_matching(chart, alpha, "left one-form");
  require_matching(chart, beta, "right one-form");
  TwoForm result;
  result.blocks.reserve(chart.affine_flats.size());
  for (const AffineFlat& flat : chart.affine_flats) {
    Rat a_sum(0), b_sum(0);
    for (int line : flat.lines) {
      a_sum += alpha[line];
      b_sum += beta[line];
    }
    RatVec block;
    block.reserve(flat.multiplicity() - 1);
    for (std::size_t t = 1; t < flat.lines.size(); ++t) {
      const int j = flat.lines[t];
      block.push_back(a_sum * beta[j] - b_sum * alpha[j]);
    }
    result.blocks.push_back(std::move(block));
  }
  return result;
}

RatMat cup_matrix(const Chart& chart, const OneForm& alpha) {
  require_matching(chart, alpha, "one-form");
  const std::size_t n = chart.n();
  RatMat m;
  m.reserve(b2(chart));
  for (const AffineFlat& flat : chart.affine_flats) {
    Rat a_sum(0);
    for (int line : flat.lines) a_sum += alpha[line];
    for (std::size_t t = 1; t < flat.lines.size(); ++t) {
      const int j = flat.lines[t];
      RatVec row(n, Rat(0));
      for (int line : flat.lines) row[line] -= alpha[j];
      row[j] += a_sum;
      m.push_back(std::move(row));
    }
  }
  return m;
}

Subspace orth_complement(const Chart& chart, const OneForm& alpha) {
  return Subspace::from_generators(kernel_basis(cup_matrix(chart, alpha), chart.n()),
                                   chart.n());
}

std::size_t aomoto_h1_dim(const Chart& chart, const OneForm& alpha) {
  require_matching(chart, alpha, "one-form");
  if (alpha.is_zero()) return chart.n();
  return orth_complement(chart, alpha).dim() - 1;
}

}  // namespace resovar
