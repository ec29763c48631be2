#include "doctest.h"

#include <random>

#include "resovar/errors.hpp"
#include "resovar/gallery.hpp"
#include "resovar/osalg.hpp"

using namespace resovar;

namespace {

OneForm form(std::initializer_list<long> values) {
  OneForm f;
  for (long v : values) f.residues.emplace_back(v);
  return f;
}

OneForm random_form(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-6, 6);
  OneForm f = OneForm::zero(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = Rat(entry(rng));
  return f;
}

// Reference product: expand over all intersecting pairs i < j with the
// raw determinant coefficients, then fold the triple relation
// w_i ^ w_j = w_{i0} ^ w_j - w_{i0} ^ w_i block by block. Independent of
// the closed per-flat formula in the module.
TwoForm wedge_by_rewriting(const Chart& chart, const OneForm& a, const OneForm& b) {
  TwoForm out;
  for (const AffineFlat& flat : chart.affine_flats) {
    RatVec block(flat.multiplicity() - 1, Rat(0));
    auto position = [&](int line) {
      for (std::size_t t = 1; t < flat.lines.size(); ++t) {
        if (flat.lines[t] == line) return t - 1;
      }
      REQUIRE(false);
      return std::size_t{0};
    };
    for (std::size_t s = 0; s < flat.lines.size(); ++s) {
      for (std::size_t t = s + 1; t < flat.lines.size(); ++t) {
        const int i = flat.lines[s];
        const int j = flat.lines[t];
        const Rat coeff = a[i] * b[j] - a[j] * b[i];
        if (s == 0) {
          block[position(j)] += coeff;
        } else {
          block[position(j)] += coeff;
          block[position(i)] -= coeff;
        }
      }
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("osalg");

TEST_CASE("chart construction on ex3") {
  const Arrangement arr = gallery("ex3");
  const Chart chart = make_chart(arr, 6);
  CHECK(chart.n() == 6);
  CHECK(chart.affine_to_arr == std::vector<int>{0, 1, 2, 3, 4, 5});

  // affine high flats: origin of multiplicity 3, (1,1) of multiplicity 4
  std::vector<std::size_t> high;
  for (const AffineFlat& flat : chart.affine_flats) {
    if (flat.multiplicity() >= 3) high.push_back(flat.multiplicity());
  }
  CHECK(high == std::vector<std::size_t>{3, 4});
  CHECK(chart.affine_flats.size() == 6);

  // parallel families {x, x-z} and {y, y-z}, plus two single directions
  std::vector<std::vector<int>> big;
  for (const auto& family : chart.families) {
    if (family.size() >= 2) big.push_back(family);
  }
  CHECK(big == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(chart.families.size() == 4);

  CHECK_THROWS_AS(make_chart(arr, 7), Error);
  CHECK_THROWS_AS(make_chart(arr, -1), Error);
}

TEST_CASE("chart of the coordinate triangle") {
  const Chart chart = make_chart(parse_arrangement("1 0 0\n0 1 0\n0 0 1"), 2);
  CHECK(chart.n() == 2);
  REQUIRE(chart.affine_flats.size() == 1);
  CHECK(chart.affine_flats[0].multiplicity() == 2);
}

TEST_CASE("pencil chart with the center at infinity has no affine flats") {
  // three concurrent lines, one of them at infinity: the two affine lines
  // are parallel
  const Chart chart = make_chart(gallery("central(3)"), 0);
  CHECK(chart.n() == 2);
  CHECK(chart.affine_flats.empty());
  REQUIRE(chart.families.size() == 1);
  CHECK(chart.families[0].size() == 2);
  CHECK(b2(chart) == 0);
}

TEST_CASE("b2 identities") {
  // central n affine lines: one flat, b2 = n - 1
  for (int n = 3; n <= 6; ++n) {
    const Chart chart = make_chart(central_with_infinity(n), n);
    CHECK(chart.n() == static_cast<std::size_t>(n));
    CHECK(b2(chart) == static_cast<std::size_t>(n - 1));
  }
  // generic affine lines: all flats double, b2 = C(n, 2)
  for (int n = 3; n <= 6; ++n) {
    const Chart chart = make_chart(gallery("nodal(" + std::to_string(n + 1) + ")"), n);
    CHECK(b2(chart) == static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("wedge on a central pencil") {
  // affine pencil x, y, x - y at the origin; both forms sum to zero, so
  // the product vanishes after the rewriting
  const Arrangement arr = parse_arrangement("1 0 0\n0 1 0\n1 -1 0\n0 0 1");
  const Chart chart = make_chart(arr, 3);
  REQUIRE(chart.n() == 3);
  const OneForm alpha = form({1, 0, -1});
  const OneForm beta = form({0, 1, -1});
  CHECK(wedge(chart, alpha, beta).is_zero());
  CHECK(!wedge(chart, alpha, form({0, 1, 0})).is_zero());
}

TEST_CASE("parallel lines wedge to zero") {
  // two parallel affine lines x = 0 and x = 1
  const Arrangement arr = parse_arrangement("1 0 0\n1 0 -1\n0 0 1");
  const Chart chart = make_chart(arr, 2);
  CHECK(chart.affine_flats.empty());
  CHECK(wedge(chart, form({1, 0}), form({0, 1})).is_zero());
}

TEST_CASE("wedge properties on random forms") {
  std::mt19937_64 rng(17);
  const std::vector<Chart> charts = {make_chart(gallery("ex3"), 6),
                                     make_chart(gallery("braid"), 0),
                                     make_chart(gallery("nodal(5)"), 4),
                                     make_chart(central_with_infinity(4), 4)};
  for (const Chart& chart : charts) {
    for (int trial = 0; trial < 20; ++trial) {
      const OneForm a = random_form(rng, chart.n());
      const OneForm b = random_form(rng, chart.n());
      const OneForm c = random_form(rng, chart.n());

      CHECK(wedge(chart, a, a).is_zero());

      // antisymmetry and bilinearity
      const TwoForm ab = wedge(chart, a, b);
      const TwoForm ba = wedge(chart, b, a);
      OneForm b_plus_c = b;
      for (std::size_t j = 0; j < chart.n(); ++j) b_plus_c[j] += c[j];
      const TwoForm ac = wedge(chart, a, c);
      const TwoForm sum = wedge(chart, a, b_plus_c);
      for (std::size_t f = 0; f < ab.blocks.size(); ++f) {
        for (std::size_t t = 0; t < ab.blocks[f].size(); ++t) {
          CHECK(ab.blocks[f][t] == -ba.blocks[f][t]);
          CHECK(sum.blocks[f][t] == ab.blocks[f][t] + ac.blocks[f][t]);
        }
      }

      // agreement with the explicit rewriting-rule expansion
      const TwoForm reference = wedge_by_rewriting(chart, a, b);
      CHECK(ab.blocks == reference.blocks);
    }
  }
  CHECK_THROWS_AS(wedge(charts[0], form({1, 0}), form({1, 0})), Error);
}

TEST_CASE("cup matrix columns are unit wedges") {
  const Chart chart = make_chart(gallery("ex3"), 6);
  std::mt19937_64 rng(3);
  const OneForm alpha = random_form(rng, chart.n());
  const RatMat m = cup_matrix(chart, alpha);
  REQUIRE(m.size() == b2(chart));
  for (std::size_t j = 0; j < chart.n(); ++j) {
    const TwoForm column = wedge(chart, alpha, OneForm::unit(chart.n(), j));
    std::size_t row = 0;
    for (const RatVec& block : column.blocks) {
      for (const Rat& x : block) {
        CHECK(m[row][j] == x);
        ++row;
      }
    }
  }
  // zero form gives the zero matrix
  for (const RatVec& row : cup_matrix(chart, OneForm::zero(chart.n()))) {
    for (const Rat& x : row) CHECK(x == 0);
  }
}

TEST_CASE("central pencil law") {
  // kernel of the cup map on a central 4-line chart at a sum-zero form
  const Chart chart = make_chart(central_with_infinity(4), 4);
  const OneForm alpha = form({1, 1, 1, -3});
  CHECK(orth_complement(chart, alpha).dim() == 3);
  CHECK(aomoto_h1_dim(chart, alpha) == 2);

  // non-sum-zero forms are not resonant
  CHECK(aomoto_h1_dim(chart, form({1, 0, 0, 0})) == 0);

  for (int n = 3; n <= 6; ++n) {
    const Chart c = make_chart(central_with_infinity(n), n);
    OneForm sum_zero = OneForm::zero(c.n());
    sum_zero[0] = Rat(n - 1);
    for (int j = 1; j < n; ++j) sum_zero[j] = -1;
    CHECK(aomoto_h1_dim(c, sum_zero) == static_cast<std::size_t>(n - 2));
  }
}

TEST_CASE("nodal charts are never resonant") {
  std::mt19937_64 rng(29);
  for (int n = 5; n <= 7; ++n) {
    const Chart chart = make_chart(gallery("nodal(" + std::to_string(n) + ")"), 0);
    for (int trial = 0; trial < 10; ++trial) {
      OneForm alpha = random_form(rng, chart.n());
      if (alpha.is_zero()) alpha[0] = 1;
      CHECK(aomoto_h1_dim(chart, alpha) == 0);
      CHECK(orth_complement(chart, alpha).dim() == 1);
      CHECK(orth_complement(chart, alpha).contains(alpha.residues));
    }
  }
}

TEST_CASE("zero form spans everything") {
  const Chart chart = make_chart(gallery("ex3"), 6);
  CHECK(aomoto_h1_dim(chart, OneForm::zero(6)) == 6);
  CHECK(orth_complement(chart, OneForm::zero(6)).dim() == 6);
}

TEST_CASE("aomoto dimension equals kernel dimension minus one") {
  std::mt19937_64 rng(31);
  const std::vector<Chart> charts = {make_chart(gallery("ex3"), 6),
                                     make_chart(gallery("braid"), 2),
                                     make_chart(gallery("other7"), 0)};
  for (const Chart& chart : charts) {
    for (int trial = 0; trial < 15; ++trial) {
      OneForm alpha = random_form(rng, chart.n());
      if (alpha.is_zero()) continue;
      const Subspace orth = orth_complement(chart, alpha);
      CHECK(orth.contains(alpha.residues));
      CHECK(aomoto_h1_dim(chart, alpha) == orth.dim() - 1);
    }
  }
}

TEST_CASE("orthogonal complement of a family-supported form") {
  // one form supported on a single parallel family: its complement is the
  // span of the family, independent of the values
  const Arrangement arr = c1_families({3, 2});
  const Chart chart = make_chart(arr, static_cast<int>(arr.size()) - 1);
  REQUIRE(chart.families.size() == 2);
  const std::vector<int>& family = chart.families[0];
  REQUIRE(family.size() == 3);

  OneForm alpha = OneForm::zero(chart.n());
  alpha[family[0]] = 2;
  alpha[family[1]] = -7;
  alpha[family[2]] = 1;

  RatMat expected;
  for (int member : family) {
    RatVec row(chart.n(), Rat(0));
    row[member] = 1;
    expected.push_back(std::move(row));
  }
  CHECK(orth_complement(chart, alpha) ==
        Subspace::from_generators(std::move(expected), chart.n()));
  CHECK(aomoto_h1_dim(chart, alpha) == 2);
}

TEST_SUITE_END();
