#include "resovar/resonance.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <tuple>

#include "resovar/errors.hpp"

namespace resovar {

bool is_resonant(const Chart& chart, const OneForm& alpha, std::size_t k) {
  return aomoto_h1_dim(chart, alpha) >= k;
}

namespace {

int affine_index_of(const Chart& chart, int arr_line, const char* what) {
  if (arr_line < 0 || arr_line >= static_cast<int>(chart.arr.size())) {
    fail(ErrorCode::IndexOutOfRange,
         std::string(what) + " index " + std::to_string(arr_line) + " out of range");
  }
  const int affine = chart.arr_to_affine[arr_line];
  if (affine < 0) {
    fail(ErrorCode::IndexOutOfRange,
         std::string(what) + " line " + std::to_string(arr_line) +
             " is the line at infinity of this chart");
  }
  return affine;
}

Parallelogram canonical_parallelogram(Parallelogram pg) {
  const std::array<Parallelogram, 4> images{
      Parallelogram{pg.k, pg.l, pg.p, pg.q, pg.x_flat, pg.y_flat},
      Parallelogram{pg.l, pg.k, pg.q, pg.p, pg.y_flat, pg.x_flat},
      Parallelogram{pg.p, pg.q, pg.k, pg.l, pg.x_flat, pg.y_flat},
      Parallelogram{pg.q, pg.p, pg.l, pg.k, pg.y_flat, pg.x_flat},
  };
  return *std::min_element(images.begin(), images.end(),
                           [](const Parallelogram& a, const Parallelogram& b) {
                             return std::tie(a.k, a.l, a.p, a.q) < std::tie(b.k, b.l, b.p, b.q);
                           });
}

}  // namespace

std::vector<Parallelogram> parallelograms(const Chart& chart, int h0) {
  const int h0_affine = affine_index_of(chart, h0, "h0");
  const int n = static_cast<int>(chart.n());

  // affine flat on h0 through each pair of crossing lines, -1 otherwise
  std::vector<std::vector<int>> flat_on_h0(n, std::vector<int>(n, -1));
  for (std::size_t f = 0; f < chart.affine_flats.size(); ++f) {
    const AffineFlat& flat = chart.affine_flats[f];
    if (!std::binary_search(flat.lines.begin(), flat.lines.end(), h0_affine)) continue;
    for (std::size_t a = 0; a < flat.lines.size(); ++a) {
      for (std::size_t b = a + 1; b < flat.lines.size(); ++b) {
        flat_on_h0[flat.lines[a]][flat.lines[b]] = static_cast<int>(f);
        flat_on_h0[flat.lines[b]][flat.lines[a]] = static_cast<int>(f);
      }
    }
  }

  std::set<std::array<int, 4>> seen;
  std::vector<Parallelogram> found;
  for (int k = 0; k < n; ++k) {
    if (k == h0_affine) continue;
    for (int l = 0; l < n; ++l) {
      if (l == k || l == h0_affine || chart.family_of[l] != chart.family_of[k]) continue;
      for (int p = 0; p < n; ++p) {
        if (p == h0_affine || chart.family_of[p] == chart.family_of[k]) continue;
        for (int q = 0; q < n; ++q) {
          if (q == p || q == h0_affine || chart.family_of[q] != chart.family_of[p]) continue;
          const int x = flat_on_h0[k][p];
          const int y = flat_on_h0[l][q];
          if (x < 0 || y < 0) continue;
          Parallelogram pg = canonical_parallelogram(Parallelogram{k, l, p, q, x, y});
          if (seen.insert({pg.k, pg.l, pg.p, pg.q}).second) found.push_back(pg);
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Parallelogram& a, const Parallelogram& b) {
    return std::tie(a.k, a.l, a.p, a.q) < std::tie(b.k, b.l, b.p, b.q);
  });
  return found;
}

const char* component_kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::ParallelFamily: return "parallel_family";
    case ComponentKind::Pencil: return "pencil";
    case ComponentKind::Parallelogram: return "parallelogram";
  }
  return "?";
}

CoverResolution resolve_cover(const Arrangement& arr, const Chart& chart,
                              std::optional<int> forced_h0) {
  const ClassInfo info = classify(arr, chart.lattice);
  CoverResolution res;
  res.tag = info.tag;
  switch (info.tag) {
    case ArrClass::Other:
      fail(ErrorCode::UnsupportedClass,
           "component enumeration covers only the classes Nodal, C1 and C2");
    case ArrClass::Nodal:
      return res;
    case ArrClass::C1: {
      if (std::find(info.line_covers.begin(), info.line_covers.end(), chart.hinf) ==
          info.line_covers.end()) {
        fail(ErrorCode::ChartMismatch,
             "class C1: the line at infinity must be a cover of the multiple points");
      }
      return res;
    }
    case ArrClass::C2: {
      std::optional<int> partner;
      for (const auto& [i, j] : info.pair_covers) {
        if (i == chart.hinf) {
          partner = partner ? std::min(*partner, j) : j;
        } else if (j == chart.hinf) {
          partner = partner ? std::min(*partner, i) : i;
        }
      }
      if (!partner) {
        fail(ErrorCode::ChartMismatch,
             "class C2: the line at infinity must belong to a two-line cover");
      }
      if (forced_h0) {
        const auto key = std::minmax(*forced_h0, chart.hinf);
        const bool valid = std::find(info.pair_covers.begin(), info.pair_covers.end(),
                                     std::make_pair(key.first, key.second)) !=
                           info.pair_covers.end();
        if (!valid) {
          fail(ErrorCode::ChartMismatch,
               "h0 = " + std::to_string(*forced_h0) +
                   " does not form a cover with the line at infinity");
        }
        partner = *forced_h0;
      }
      res.h0_arr = *partner;
      res.h0_affine = chart.arr_to_affine[*partner];
      return res;
    }
  }
  return res;
}

namespace {

Component family_component(const Chart& chart, int family_index) {
  const std::vector<int>& family = chart.families[family_index];
  RatMat generators;
  for (int member : family) {
    RatVec row(chart.n(), Rat(0));
    row[member] = 1;
    generators.push_back(std::move(row));
  }
  Component c;
  c.kind = ComponentKind::ParallelFamily;
  c.family = family_index;
  c.space = Subspace::from_generators(std::move(generators), chart.n());
  return c;
}

Component pencil_component(const Chart& chart, int flat_index) {
  const AffineFlat& flat = chart.affine_flats[flat_index];
  RatMat generators;
  for (std::size_t t = 1; t < flat.lines.size(); ++t) {
    RatVec row(chart.n(), Rat(0));
    row[flat.lines[0]] = -1;
    row[flat.lines[t]] = 1;
    generators.push_back(std::move(row));
  }
  Component c;
  c.kind = ComponentKind::Pencil;
  c.flat = flat_index;
  c.space = Subspace::from_generators(std::move(generators), chart.n());
  return c;
}

Component parallelogram_component(const Chart& chart, const Parallelogram& pg, int h0_affine) {
  // supp in {h0,k,l,p,q} with a_h0 + a_k + a_p = 0, a_k = a_q, a_l = a_p
  RatVec v1(chart.n(), Rat(0));
  v1[pg.k] = 1;
  v1[pg.q] = 1;
  v1[h0_affine] = -1;
  RatVec v2(chart.n(), Rat(0));
  v2[pg.p] = 1;
  v2[pg.l] = 1;
  v2[h0_affine] = -1;
  Component c;
  c.kind = ComponentKind::Parallelogram;
  c.para = pg;
  c.space = Subspace::from_generators({v1, v2}, chart.n());
  return c;
}

}  // namespace

std::vector<Component> enumerate_components(const Arrangement& arr, const Chart& chart,
                                            std::optional<int> forced_h0) {
  const CoverResolution cover = resolve_cover(arr, chart, forced_h0);
  std::vector<Component> components;
  if (cover.tag == ArrClass::Nodal) return components;

  for (std::size_t f = 0; f < chart.families.size(); ++f) {
    if (chart.families[f].size() >= 2) {
      components.push_back(family_component(chart, static_cast<int>(f)));
    }
  }
  if (cover.tag == ArrClass::C2) {
    const int h0_affine = *cover.h0_affine;
    for (std::size_t f = 0; f < chart.affine_flats.size(); ++f) {
      const AffineFlat& flat = chart.affine_flats[f];
      if (flat.multiplicity() > 2 &&
          std::binary_search(flat.lines.begin(), flat.lines.end(), h0_affine)) {
        components.push_back(pencil_component(chart, static_cast<int>(f)));
      }
    }
    for (const Parallelogram& pg : parallelograms(chart, *cover.h0_arr)) {
      components.push_back(parallelogram_component(chart, pg, h0_affine));
    }
  }
  return components;
}

ResonanceStratum resonance_k(const Arrangement& arr, const Chart& chart, std::size_t k,
                             std::optional<int> forced_h0) {
  if (k < 1) fail(ErrorCode::BadInput, "resonance depth k must be positive");
  ResonanceStratum stratum;
  stratum.origin = k <= chart.n();
  for (Component& c : enumerate_components(arr, chart, forced_h0)) {
    if (c.dimension() > k) stratum.components.push_back(std::move(c));
  }
  return stratum;
}

bool VerificationReport::all_ok() const {
  if (!outside_all_nonresonant || !pairwise_intersections_zero) return false;
  return std::all_of(per_component.begin(), per_component.end(),
                     [](const ComponentCheck& c) { return c.all_resonant; });
}

long draw_int(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<unsigned long long>(hi - lo + 1);
  return lo + static_cast<long long>(rng() % span);
}

OneForm sample_component_point(const Component& component, std::mt19937_64& rng,
                               long bound) {
  if (component.dimension() == 0) {
    fail(ErrorCode::BadInput, "cannot sample a nonzero point of the zero space");
  }
  const RatMat& basis = component.space.basis();
  const std::size_t n = component.space.ambient();
  OneForm alpha = OneForm::zero(n);
  do {
    std::fill(alpha.residues.begin(), alpha.residues.end(), Rat(0));
    for (const RatVec& row : basis) {
      const long c = draw_int(rng, -bound, bound);
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) alpha[j] += Rat(c) * row[j];
    }
  } while (alpha.is_zero());
  return alpha;
}

VerificationReport verify_oracle(const Arrangement& arr, const Chart& chart,
                                 std::size_t samples, std::uint64_t seed,
                                 std::optional<int> forced_h0) {
  if (samples < 1) fail(ErrorCode::BadInput, "need at least one sample");
  const std::vector<Component> components = enumerate_components(arr, chart, forced_h0);
  constexpr long kBound = 10;

  VerificationReport report;
  report.seed = seed;
  report.samples = samples;
  std::mt19937_64 rng(seed);

  for (const Component& component : components) {
    ComponentCheck check;
    for (std::size_t s = 0; s < samples; ++s) {
      const OneForm alpha = sample_component_point(component, rng, kBound);
      ++check.samples;
      check.all_resonant = check.all_resonant && is_resonant(chart, alpha, 1);
    }
    report.per_component.push_back(check);
  }

  const bool union_is_everything =
      std::any_of(components.begin(), components.end(),
                  [&](const Component& c) { return c.dimension() == chart.n(); });
  if (!union_is_everything && chart.n() > 0) {
    const std::size_t max_attempts = 1000 * samples;
    std::size_t attempts = 0;
    while (report.outside_tested < samples && attempts < max_attempts) {
      ++attempts;
      OneForm v = OneForm::zero(chart.n());
      for (std::size_t j = 0; j < chart.n(); ++j) v[j] = Rat(draw_int(rng, -kBound, kBound));
      const bool inside = std::any_of(components.begin(), components.end(), [&](const Component& c) {
        return c.space.contains(v.residues);
      });
      if (inside) continue;  // the origin is always inside
      ++report.outside_tested;
      report.outside_all_nonresonant =
          report.outside_all_nonresonant && !is_resonant(chart, v, 1);
    }
  }

  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      if (components[i].space.intersect(components[j].space).dim() != 0) {
        report.pairwise_intersections_zero = false;
      }
    }
  }
  return report;
}

}  // namespace resovar
