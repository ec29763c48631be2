#include "resovar/charvar.hpp"

#include <algorithm>
#include <string>

#include "resovar/errors.hpp"
#include "resovar/osalg.hpp"

namespace resovar {

LocalSystem LocalSystem::from_classes(RatVec classes) {
  Rat sum(0);
  for (const Rat& t : classes) {
    if (t < 0 || t >= 1) {
      fail(ErrorCode::BadInput, "residue classes must lie in [0, 1), got " + rat_to_string(t));
    }
    sum += t;
  }
  if (!is_integer(sum)) {
    fail(ErrorCode::SumNonzero,
         "residue classes must sum to 0 mod 1, got " + rat_to_string(sum));
  }
  return LocalSystem{std::move(classes)};
}

bool LocalSystem::is_trivial() const {
  return std::all_of(classes.begin(), classes.end(), [](const Rat& t) { return t == 0; });
}

LocalSystem parse_local_system(const std::string& text, std::size_t expected_lines) {
  RatVec values = parse_rat_vector(text);
  if (values.size() != expected_lines) {
    fail(ErrorCode::DimensionMismatch,
         "local system has " + std::to_string(values.size()) + " classes, arrangement has " +
             std::to_string(expected_lines) + " lines");
  }
  return LocalSystem::from_classes(std::move(values));
}

LocalSystem exp_residues(const ProjectiveResidues& residues) {
  Rat sum(0);
  for (const Rat& a : residues.a) sum += a;
  if (sum != 0) {
    fail(ErrorCode::SumNonzero, "projective residues must sum to zero, got " + rat_to_string(sum));
  }
  RatVec classes;
  classes.reserve(residues.a.size());
  for (const Rat& a : residues.a) classes.push_back(mod1(a));
  return LocalSystem{std::move(classes)};
}

namespace {

struct WitnessSearch {
  const Arrangement& arr;
  const Lattice lattice;
  const LocalSystem& lambda;
  std::size_t max_count;

  std::vector<std::size_t> high_flats;
  RatVec base;                        // base representative per line, lines >= 1
  std::vector<std::size_t> shiftable; // lines j >= 1 with t_j != 0, ascending

  // incremental state
  RatVec values;       // current a_j for j >= 1 (a_0 handled at leaves)
  Rat sum_tail;        // sum over j >= 1 of current a_j
  Rat max_tail_rest;   // how much the unassigned shifts can still add
  std::vector<AdmissibilityReport> found;

  WitnessSearch(const Arrangement& arr_, const LocalSystem& lambda_, std::size_t max_count_)
      : arr(arr_), lattice(intersection_lattice(arr_)), lambda(lambda_), max_count(max_count_) {
    if (lambda.size() != arr.size()) {
      fail(ErrorCode::DimensionMismatch, "local system does not match the arrangement");
    }
    for (std::size_t f = 0; f < lattice.flats.size(); ++f) {
      if (lattice.flats[f].multiplicity() >= 3) high_flats.push_back(f);
    }
    base.assign(arr.size(), Rat(0));
    for (std::size_t j = 1; j < arr.size(); ++j) {
      if (lambda.classes[j] != 0) {
        base[j] = lambda.classes[j] - 1;
        shiftable.push_back(j);
      }
    }
    values = base;
    sum_tail = 0;
    for (std::size_t j = 1; j < arr.size(); ++j) sum_tail += base[j];
    max_tail_rest = Rat(static_cast<long>(shiftable.size()));
  }

  // the sum of a_j over a flat, with a_0 = -sum_tail substituted
  Rat flat_sum(const Flat& flat) const {
    Rat sum(0);
    for (int line : flat.incident) {
      sum += line == 0 ? -sum_tail : values[line];
    }
    return sum;
  }

  bool leaf_ok() const {
    const Rat a0 = -sum_tail;
    if (is_positive_integer(a0)) return false;
    for (std::size_t f : high_flats) {
      if (is_positive_integer(flat_sum(lattice.flats[f]))) return false;
    }
    return true;
  }

  void record() {
    ProjectiveResidues witness;
    witness.a = values;
    witness.a[0] = -sum_tail;
    AdmissibilityReport report;
    report.witness = std::move(witness);
    for (std::size_t f : high_flats) {
      report.pencil_sums.push_back(PencilSum{f, flat_sum(lattice.flats[f])});
    }
    found.push_back(std::move(report));
  }

  // Flats not through line 0 are fully decided once their shiftable lines
  // are assigned; a sum already in Z_{>0} kills the whole subtree.
  bool prune_decided_flats(std::size_t next) const {
    for (std::size_t f : high_flats) {
      const Flat& flat = lattice.flats[f];
      if (flat.contains_line(0)) continue;
      bool decided = true;
      Rat sum(0);
      for (int line : flat.incident) {
        const auto it = std::lower_bound(shiftable.begin(), shiftable.end(),
                                         static_cast<std::size_t>(line));
        if (it != shiftable.end() && *it == static_cast<std::size_t>(line) &&
            static_cast<std::size_t>(it - shiftable.begin()) >= next) {
          decided = false;
          break;
        }
        sum += values[line];
      }
      if (decided && is_positive_integer(sum)) return true;
    }
    return false;
  }

  void search(std::size_t next) {
    if (found.size() >= max_count) return;
    // a_0 = -sum_tail must not become a positive integer; when t_0 = 0 it
    // is an integer, so the tail sum has to be able to reach >= 0.
    if (lambda.classes[0] == 0 && sum_tail + max_tail_rest < 0) return;
    if (prune_decided_flats(next)) return;
    if (next == shiftable.size()) {
      if (leaf_ok()) record();
      return;
    }
    const std::size_t j = shiftable[next];
    max_tail_rest -= 1;
    // shift 0 first: lexicographic order over the shift tuple
    search(next + 1);
    values[j] += 1;
    sum_tail += 1;
    search(next + 1);
    values[j] -= 1;
    sum_tail -= 1;
    max_tail_rest += 1;
  }

  std::vector<AdmissibilityReport> run() {
    search(0);
    return std::move(found);
  }
};

// structural Def-style checks on every emitted witness; a failure here is
// a bug in the search, not a property of the input
void check_witness(const Arrangement& arr, const LocalSystem& lambda,
                   const AdmissibilityReport& report) {
  Rat sum(0);
  for (std::size_t j = 0; j < arr.size(); ++j) {
    const Rat& a = report.witness.a[j];
    if (mod1(a) != lambda.classes[j]) {
      throw std::logic_error("witness does not reduce to the given classes");
    }
    if (is_positive_integer(a)) {
      throw std::logic_error("witness has a positive integer residue");
    }
    sum += a;
  }
  if (sum != 0) {
    throw std::logic_error("witness residues do not sum to zero");
  }
  for (const PencilSum& ps : report.pencil_sums) {
    if (is_positive_integer(ps.sum)) {
      throw std::logic_error("witness has a positive integer pencil sum");
    }
  }
}

}  // namespace

std::vector<AdmissibilityReport> admissible_witnesses(const Arrangement& arr,
                                                      const LocalSystem& lambda,
                                                      std::size_t max_count) {
  WitnessSearch search(arr, lambda, max_count);
  std::vector<AdmissibilityReport> found = search.run();
  for (const AdmissibilityReport& report : found) check_witness(arr, lambda, report);
  return found;
}

AdmissibilityReport admissible_witness(const Arrangement& arr, const LocalSystem& lambda) {
  std::vector<AdmissibilityReport> found = admissible_witnesses(arr, lambda, 1);
  if (found.empty()) {
    fail(ErrorCode::SearchExhausted,
         "no admissible witness in the search box; expected only outside classes C1/C2");
  }
  return std::move(found.front());
}

std::pair<std::size_t, AdmissibilityReport> local_system_h1_with_witness(
    const Arrangement& arr, const Chart& chart, const LocalSystem& lambda) {
  if (chart.arr.lines != arr.lines) {
    fail(ErrorCode::ChartMismatch, "chart was built from a different arrangement");
  }
  AdmissibilityReport report = admissible_witness(arr, lambda);
  OneForm alpha = OneForm::zero(chart.n());
  for (std::size_t i = 0; i < chart.n(); ++i) {
    alpha[i] = report.witness.a[chart.affine_to_arr[i]];
  }
  return {aomoto_h1_dim(chart, alpha), std::move(report)};
}

std::size_t local_system_h1(const Arrangement& arr, const Chart& chart,
                            const LocalSystem& lambda) {
  return local_system_h1_with_witness(arr, chart, lambda).first;
}

bool CharComponent::contains(const Chart& chart, const LocalSystem& lambda) const {
  if (lambda.size() != chart.arr.size()) {
    fail(ErrorCode::DimensionMismatch, "local system does not match the arrangement");
  }
  RatVec t(chart.n());
  for (std::size_t i = 0; i < chart.n(); ++i) t[i] = lambda.classes[chart.affine_to_arr[i]];
  for (std::size_t i = 0; i < chart.n(); ++i) {
    if (t[i] != 0 && !std::binary_search(support.begin(), support.end(), static_cast<int>(i))) {
      return false;
    }
  }
  for (const std::vector<long long>& relation : relations) {
    Rat dot(0);
    for (std::size_t i = 0; i < chart.n(); ++i) {
      if (relation[i] != 0) dot += Rat(static_cast<long>(relation[i])) * t[i];
    }
    if (mod1(dot) != 0) return false;
  }
  return true;
}

std::vector<CharComponent> char_components(const Arrangement& arr, const Chart& chart,
                                           std::optional<int> forced_h0) {
  const std::vector<Component> components = enumerate_components(arr, chart, forced_h0);
  const int h0_affine = [&]() {
    const CoverResolution cover = resolve_cover(arr, chart, forced_h0);
    return cover.h0_affine.value_or(-1);
  }();

  std::vector<CharComponent> out;
  out.reserve(components.size());
  for (std::size_t index = 0; index < components.size(); ++index) {
    const Component& component = components[index];
    CharComponent sub;
    sub.component = index;
    sub.kind = component.kind;
    sub.dimension = component.dimension();
    switch (component.kind) {
      case ComponentKind::ParallelFamily: {
        sub.support = chart.families[component.family];
        break;
      }
      case ComponentKind::Pencil: {
        sub.support = chart.affine_flats[component.flat].lines;
        std::vector<long long> product_one(chart.n(), 0);
        for (int line : sub.support) product_one[line] = 1;
        sub.relations.push_back(std::move(product_one));
        break;
      }
      case ComponentKind::Parallelogram: {
        const Parallelogram& pg = component.para;
        sub.support = {h0_affine, pg.k, pg.l, pg.p, pg.q};
        std::vector<long long> vertex(chart.n(), 0);
        vertex[h0_affine] = 1;
        vertex[pg.k] = 1;
        vertex[pg.p] = 1;
        std::vector<long long> kq(chart.n(), 0);
        kq[pg.k] = 1;
        kq[pg.q] = -1;
        std::vector<long long> lp(chart.n(), 0);
        lp[pg.l] = 1;
        lp[pg.p] = -1;
        sub.relations.push_back(std::move(vertex));
        sub.relations.push_back(std::move(kq));
        sub.relations.push_back(std::move(lp));
        break;
      }
    }
    std::sort(sub.support.begin(), sub.support.end());
    out.push_back(std::move(sub));
  }
  return out;
}

LocalSystem exp_chart_form(const Chart& chart, const OneForm& alpha) {
  if (alpha.size() != chart.n()) {
    fail(ErrorCode::DimensionMismatch, "one-form does not match the chart");
  }
  ProjectiveResidues residues;
  residues.a.assign(chart.arr.size(), Rat(0));
  Rat sum(0);
  for (std::size_t i = 0; i < chart.n(); ++i) {
    residues.a[chart.affine_to_arr[i]] = alpha[i];
    sum += alpha[i];
  }
  residues.a[chart.hinf] = -sum;
  return exp_residues(residues);
}

LocalSystem sample_subtorus_point(const Chart& chart, const Component& component,
                                  std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    // rational coefficients with small denominators make the exp image a
    // nontrivial torsion character almost surely
    const RatMat& basis = component.space.basis();
    OneForm alpha = OneForm::zero(chart.n());
    for (const RatVec& row : basis) {
      const long num = draw_int(rng, -10, 10);
      const long den = draw_int(rng, 2, 8);
      if (num == 0) continue;
      Rat c(num, den);
      c.canonicalize();
      for (std::size_t j = 0; j < chart.n(); ++j) alpha[j] += c * row[j];
    }
    LocalSystem lambda = exp_chart_form(chart, alpha);
    if (!lambda.is_trivial()) return lambda;
  }
  fail(ErrorCode::SearchExhausted, "could not sample a nontrivial character of the subtorus");
}

}  // namespace resovar
