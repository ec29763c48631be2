#include "resovar/linalg.hpp"

#include <algorithm>
#include <utility>

#include "resovar/errors.hpp"

namespace resovar {

void rref_in_place(RatMat& m) {
  if (m.empty()) return;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rat inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
}

namespace {

bool is_zero_row(const RatVec& row) {
  return std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace

RatMat rref(RatMat m) {
  rref_in_place(m);
  while (!m.empty() && is_zero_row(m.back())) m.pop_back();
  return m;
}

std::size_t rank(RatMat m) { return rref(std::move(m)).size(); }

RatMat kernel_basis(const RatMat& m, std::size_t cols) {
  RatMat red = rref(m);
  // pivot column of each echelon row
  std::vector<std::size_t> pivot_col(red.size());
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0; r < red.size(); ++r) {
    std::size_t c = 0;
    while (c < cols && red[r][c] == 0) ++c;
    pivot_col[r] = c;
    if (c < cols) is_pivot[c] = true;
  }
  RatMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < red.size(); ++r) {
      if (pivot_col[r] < cols) v[pivot_col[r]] = -red[r][f];
    }
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  RatMat id(ambient, RatVec(ambient, Rat(0)));
  for (std::size_t i = 0; i < ambient; ++i) id[i][i] = 1;
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = std::move(id);
  return s;
}

Subspace Subspace::from_generators(RatMat generators, std::size_t ambient) {
  for (const RatVec& g : generators) {
    if (g.size() != ambient) {
      fail(ErrorCode::DimensionMismatch, "generator length does not match ambient dimension");
    }
  }
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = rref(std::move(generators));
  return s;
}

bool Subspace::contains(const RatVec& v) const {
  if (v.size() != ambient_) {
    fail(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
  }
  RatVec residual = v;
  for (const RatVec& row : rows_) {
    std::size_t p = 0;
    while (p < ambient_ && row[p] == 0) ++p;
    if (p == ambient_ || residual[p] == 0) continue;
    const Rat factor = residual[p];
    for (std::size_t j = p; j < ambient_; ++j) residual[j] -= factor * row[j];
  }
  return is_zero_row(residual);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const RatVec& row) { return contains(row); });
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) {
    fail(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  // Zassenhaus: row reduce [U | U; W | 0]; rows with vanishing left half
  // carry an intersection basis in the right half.
  const std::size_t n = ambient_;
  RatMat block;
  for (const RatVec& u : rows_) {
    RatVec row(2 * n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = u[j];
      row[n + j] = u[j];
    }
    block.push_back(std::move(row));
  }
  for (const RatVec& w : other.rows_) {
    RatVec row(2 * n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = w[j];
    block.push_back(std::move(row));
  }
  block = rref(std::move(block));
  RatMat inter;
  for (const RatVec& row : block) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = row[j] == 0;
    if (!left_zero) continue;
    inter.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return from_generators(std::move(inter), n);
}

}  // namespace resovar
