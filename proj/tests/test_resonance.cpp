#include "doctest.h"

#include <algorithm>
#include <random>

#include "resovar/cli.hpp"
#include "resovar/errors.hpp"
#include "resovar/gallery.hpp"
#include "resovar/resonance.hpp"

using namespace resovar;

namespace {

std::vector<std::size_t> dimensions(const std::vector<Component>& components) {
  std::vector<std::size_t> dims;
  for (const Component& c : components) dims.push_back(c.dimension());
  return dims;
}

std::vector<std::size_t> sorted_dimensions(const std::vector<Component>& components) {
  auto dims = dimensions(components);
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace

TEST_SUITE_BEGIN("resonance");

TEST_CASE("pointwise membership oracle") {
  const Chart nodal = make_chart(gallery("nodal(5)"), 4);
  CHECK(is_resonant(nodal, OneForm::zero(nodal.n()), 1));  // dim = n at 0
  OneForm alpha = OneForm::zero(nodal.n());
  alpha[1] = 3;
  alpha[2] = -2;
  CHECK(!is_resonant(nodal, alpha, 1));

  const Chart central = make_chart(central_with_infinity(5), 5);
  OneForm sum_zero = OneForm::zero(5);
  sum_zero[0] = 4;
  for (int j = 1; j < 5; ++j) sum_zero[j] = -1;
  CHECK(is_resonant(central, sum_zero, 3));
  CHECK(!is_resonant(central, sum_zero, 4));
}

TEST_CASE("parallelograms of ex3") {
  const Chart chart = make_chart(gallery("ex3"), 6);
  const auto pgs = parallelograms(chart, 0);
  REQUIRE(pgs.size() == 1);
  const Parallelogram& pg = pgs.front();
  CHECK(pg.k == 1);  // x
  CHECK(pg.l == 3);  // x - z
  CHECK(pg.p == 2);  // y
  CHECK(pg.q == 4);  // y - z
  CHECK(chart.affine_flats[pg.x_flat].point.coords == Triple{0, 0, 1});
  CHECK(chart.affine_flats[pg.y_flat].point.coords == Triple{1, 1, 1});

  CHECK_THROWS_AS(parallelograms(chart, 6), Error);   // the infinity line
  CHECK_THROWS_AS(parallelograms(chart, 9), Error);
}

TEST_CASE("parallelogram of the braid arrangement") {
  // chart at x; the diagonal role is played by y - z
  const Chart chart = make_chart(gallery("braid"), 0);
  const auto pgs = parallelograms(chart, 5);
  REQUIRE(pgs.size() == 1);
  // affine order: y, z, x-y, x-z; the sides are y || x-y and z || x-z
  CHECK(pgs[0].k == 0);
  CHECK(pgs[0].l == 2);
  CHECK(pgs[0].p == 1);
  CHECK(pgs[0].q == 3);
  CHECK(chart.affine_flats[pgs[0].x_flat].point.coords == Triple{1, 0, 0});
  CHECK(chart.affine_flats[pgs[0].y_flat].point.coords == Triple{1, 1, 1});
}

TEST_CASE("nodal charts have no parallelograms") {
  const Chart chart = make_chart(gallery("nodal(6)"), 5);
  for (int h0 = 0; h0 < 5; ++h0) CHECK(parallelograms(chart, h0).empty());
}

TEST_CASE("enumeration on ex3") {
  const Arrangement arr = gallery("ex3");
  const Chart chart = make_chart(arr, 6);
  const auto components = enumerate_components(arr, chart);
  REQUIRE(components.size() == 5);
  CHECK(dimensions(components) == std::vector<std::size_t>{2, 2, 2, 3, 2});
  CHECK(components[0].kind == ComponentKind::ParallelFamily);
  CHECK(components[1].kind == ComponentKind::ParallelFamily);
  CHECK(components[2].kind == ComponentKind::Pencil);
  CHECK(components[3].kind == ComponentKind::Pencil);
  CHECK(components[4].kind == ComponentKind::Parallelogram);

  // the dimension-3 component sits at the multiplicity-4 point (1,1)
  CHECK(chart.affine_flats[components[3].flat].point.coords == Triple{1, 1, 1});

  // parallelogram equations: a_H0 + a_Hk + a_Hp = 0, a_Hk = a_Hq, a_Hl = a_Hp
  const Subspace& para = components[4].space;
  CHECK(para.dim() == 2);
  RatVec member(6, Rat(0));
  member[0] = -3;  // h0 = x - y
  member[1] = 1;   // k = x
  member[3] = 2;   // l = x - z
  member[2] = 2;   // p = y
  member[4] = 1;   // q = y - z
  CHECK(para.contains(member));
  member[4] = 2;
  CHECK(!para.contains(member));
}

TEST_CASE("enumeration on the braid arrangement") {
  const Arrangement arr = gallery("braid");
  const auto components = enumerate_components(arr, make_chart(arr, 0));
  REQUIRE(components.size() == 5);
  CHECK(sorted_dimensions(components) == std::vector<std::size_t>{2, 2, 2, 2, 2});
  std::size_t pencils = 0, families = 0, paras = 0;
  for (const Component& c : components) {
    if (c.kind == ComponentKind::Pencil) ++pencils;
    if (c.kind == ComponentKind::ParallelFamily) ++families;
    if (c.kind == ComponentKind::Parallelogram) ++paras;
  }
  CHECK(families == 2);
  CHECK(pencils == 2);
  CHECK(paras == 1);
}

TEST_CASE("enumeration edge cases") {
  const Arrangement nodal = gallery("nodal(4)");
  CHECK(enumerate_components(nodal, make_chart(nodal, 0)).empty());

  const Arrangement other = gallery("other7");
  CHECK_THROWS_AS(enumerate_components(other, make_chart(other, 0)), Error);

  // ex3: line 5 (x + y - 2z) is in no two-line cover
  const Arrangement ex3 = gallery("ex3");
  CHECK_THROWS_AS(enumerate_components(ex3, make_chart(ex3, 5)), Error);
  // but hinf = 1 pairs with 4
  CHECK(enumerate_components(ex3, make_chart(ex3, 1)).size() == 5);

  // C1 needs the cover line at infinity
  const Arrangement c1 = c1_families({3, 2});
  CHECK_THROWS_AS(enumerate_components(c1, make_chart(c1, 0)), Error);
  const auto c1_components = enumerate_components(c1, make_chart(c1, 5));
  CHECK(sorted_dimensions(c1_components) == std::vector<std::size_t>{2, 3});
  for (const Component& c : c1_components) CHECK(c.kind == ComponentKind::ParallelFamily);

  // forcing an invalid h0 is rejected
  CHECK_THROWS_AS(enumerate_components(ex3, make_chart(ex3, 6), 5), Error);
  CHECK(enumerate_components(ex3, make_chart(ex3, 6), 0).size() == 5);
}

TEST_CASE("components are isotropic and mutually transverse") {
  for (const auto& corpus : {corpus_c1(), corpus_c2()}) {
    for (const NamedArrangement& named : corpus) {
      const Chart chart = make_chart(named.arr, default_infinity_for_test(named.arr));
      const auto components = enumerate_components(named.arr, chart);
      for (const Component& c : components) {
        const RatMat& basis = c.space.basis();
        for (const RatVec& u : basis) {
          for (const RatVec& v : basis) {
            CHECK(wedge(chart, OneForm{u}, OneForm{v}).is_zero());
          }
        }
      }
      for (std::size_t i = 0; i < components.size(); ++i) {
        for (std::size_t j = i + 1; j < components.size(); ++j) {
          CHECK(components[i].space.intersect(components[j].space).dim() == 0);
          CHECK(!components[i].space.contains(components[j].space));
          CHECK(!components[j].space.contains(components[i].space));
        }
      }
    }
  }
}

TEST_CASE("resonance filtration on ex3") {
  const Arrangement arr = gallery("ex3");
  const Chart chart = make_chart(arr, 6);

  const ResonanceStratum r1 = resonance_k(arr, chart, 1);
  CHECK(r1.components.size() == 5);
  CHECK(r1.origin);

  const ResonanceStratum r2 = resonance_k(arr, chart, 2);
  REQUIRE(r2.components.size() == 1);
  CHECK(r2.components[0].dimension() == 3);
  CHECK(r2.components[0].kind == ComponentKind::Pencil);

  const ResonanceStratum r3 = resonance_k(arr, chart, 3);
  CHECK(r3.components.empty());
  CHECK(r3.origin);

  const ResonanceStratum r7 = resonance_k(arr, chart, 7);
  CHECK(r7.components.empty());
  CHECK(!r7.origin);

  CHECK_THROWS_AS(resonance_k(arr, chart, 0), Error);
}

TEST_CASE("oracle verification") {
  const Arrangement ex3 = gallery("ex3");
  const VerificationReport ex3_report = verify_oracle(ex3, make_chart(ex3, 6), 100, 0);
  CHECK(ex3_report.all_ok());
  CHECK(ex3_report.per_component.size() == 5);
  CHECK(ex3_report.outside_tested == 100);

  // reproducibility from the seed
  const VerificationReport again = verify_oracle(ex3, make_chart(ex3, 6), 100, 0);
  CHECK(again.all_ok() == ex3_report.all_ok());
  CHECK(again.outside_tested == ex3_report.outside_tested);

  const Arrangement nodal = gallery("nodal(5)");
  const VerificationReport nodal_report = verify_oracle(nodal, make_chart(nodal, 4), 100, 0);
  CHECK(nodal_report.all_ok());
  CHECK(nodal_report.per_component.empty());
  CHECK(nodal_report.outside_tested == 100);

  const Arrangement braid = gallery("braid");
  CHECK(verify_oracle(braid, make_chart(braid, 0), 100, 0).all_ok());
}

TEST_CASE("parallelogram orthogonal complements on the minimal fixture") {
  const Arrangement arr = gallery("parallelogram_min");
  const Chart chart = make_chart(arr, 5);
  const auto components = enumerate_components(arr, chart);
  const auto para = std::find_if(components.begin(), components.end(), [](const Component& c) {
    return c.kind == ComponentKind::Parallelogram;
  });
  REQUIRE(para != components.end());

  // generic member: orthogonal complement is the component itself
  OneForm generic = OneForm::zero(chart.n());
  generic[4] = -3;             // h0 = x - y
  generic[para->para.k] = 1;
  generic[para->para.q] = 1;
  generic[para->para.l] = 2;
  generic[para->para.p] = 2;
  REQUIRE(para->space.contains(generic.residues));
  CHECK(orth_complement(chart, generic).dim() == 2);
  CHECK(orth_complement(chart, generic) == para->space);

  // breaking a_k = a_q (keeping the vertex sums) kills the resonance
  OneForm perturbed = OneForm::zero(chart.n());
  perturbed[4] = -3;
  perturbed[para->para.k] = 1;
  perturbed[para->para.p] = 2;
  perturbed[para->para.l] = 1;
  perturbed[para->para.q] = 2;
  CHECK(!para->space.contains(perturbed.residues));
  CHECK(orth_complement(chart, perturbed).dim() == 1);
}

TEST_CASE("chart symmetry for C2 covers") {
  for (const char* name : {"ex3", "braid", "parallelogram_min"}) {
    const Arrangement arr = gallery(name);
    const ClassInfo info = classify(arr);
    REQUIRE(info.tag == ArrClass::C2);
    const auto [a, b] = info.pair_covers.front();

    const auto in_a = enumerate_components(arr, make_chart(arr, a));
    const auto in_b = enumerate_components(arr, make_chart(arr, b));
    CHECK(sorted_dimensions(in_a) == sorted_dimensions(in_b));

    auto count_paras = [](const std::vector<Component>& components) {
      return std::count_if(components.begin(), components.end(), [](const Component& c) {
        return c.kind == ComponentKind::Parallelogram;
      });
    };
    CHECK(count_paras(in_a) == count_paras(in_b));
  }
}

TEST_SUITE_END();
