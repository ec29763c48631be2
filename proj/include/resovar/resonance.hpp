#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "resovar/chart.hpp"
#include "resovar/linalg.hpp"
#include "resovar/osalg.hpp"

namespace resovar {

// Membership oracle for the first resonance stratum R_k: exact rank
// computation, independent of the component enumeration below.
bool is_resonant(const Chart& chart, const OneForm& alpha, std::size_t k);

// Four affine lines forming a parallelogram whose diagonal is the affine
// line h0: k || l, p || q, k and p meet on h0, l and q meet on h0.
struct Parallelogram {
  int k = -1, l = -1, p = -1, q = -1;  // affine indices, all distinct, != h0
  int x_flat = -1;  // affine flat where k, p and h0 meet
  int y_flat = -1;  // affine flat where l, q and h0 meet

  bool operator==(const Parallelogram&) const = default;
};

// All parallelograms with diagonal h0 (an arrangement line index that must
// be affine in the chart), deduplicated up to the relabelings
// (k,l,p,q) ~ (l,k,q,p) ~ (p,q,k,l) ~ (q,p,l,k), in deterministic order.
std::vector<Parallelogram> parallelograms(const Chart& chart, int h0);

enum class ComponentKind { ParallelFamily, Pencil, Parallelogram };

const char* component_kind_name(ComponentKind kind);

// An irreducible component of R_1 as a labeled linear subspace of the
// chart's H^1 with an exact RREF basis.
struct Component {
  ComponentKind kind = ComponentKind::ParallelFamily;
  int family = -1;       // ParallelFamily: index into chart.families
  int flat = -1;         // Pencil: index into chart.affine_flats
  Parallelogram para{};  // Parallelogram
  Subspace space;

  std::size_t dimension() const { return space.dim(); }
};

// The chart's class data resolved against the classification: which
// arrangement line plays H0 (affine, C2 only). Throws UnsupportedClass for
// class Other and ChartMismatch if hinf is not a cover line of the class.
struct CoverResolution {
  ArrClass tag = ArrClass::Nodal;
  std::optional<int> h0_arr;     // C2: the affine cover line
  std::optional<int> h0_affine;  // same, in affine indexing
};

CoverResolution resolve_cover(const Arrangement& arr, const Chart& chart,
                              std::optional<int> forced_h0 = std::nullopt);

// Closed-form component enumeration for the classes Nodal, C1, C2:
//  - Nodal: empty,
//  - C1 (cover at infinity): one component per parallel family of size
//    >= 2, spanned by the family's generators,
//  - C2: those family components, plus a pencil component for every
//    affine flat of multiplicity >= 3 on H0, plus one component per
//    parallelogram with diagonal H0.
// Components come with RREF bases and none is contained in another.
std::vector<Component> enumerate_components(const Arrangement& arr, const Chart& chart,
                                            std::optional<int> forced_h0 = std::nullopt);

// R_k via the filtration by dimension: components of dimension > k. The
// origin belongs to R_k whenever k <= n and is reported as a flag rather
// than a component.
struct ResonanceStratum {
  std::vector<Component> components;
  bool origin = false;
};

ResonanceStratum resonance_k(const Arrangement& arr, const Chart& chart, std::size_t k,
                             std::optional<int> forced_h0 = std::nullopt);

struct ComponentCheck {
  std::size_t samples = 0;
  bool all_resonant = true;
};

// Randomized cross-validation of the enumeration against the rank oracle.
// Reproducible from (arrangement, chart, seed, samples).
struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<ComponentCheck> per_component;
  std::size_t outside_tested = 0;
  bool outside_all_nonresonant = true;
  bool pairwise_intersections_zero = true;

  bool all_ok() const;
};

// For every enumerated component, samples random nonzero rational points
// (integer coefficients in [-10, 10] on the RREF basis) and asserts
// resonance; samples ambient points outside every component and asserts
// non-resonance; checks that distinct components meet only in 0.
VerificationReport verify_oracle(const Arrangement& arr, const Chart& chart,
                                 std::size_t samples, std::uint64_t seed,
                                 std::optional<int> forced_h0 = std::nullopt);

// Uniform integer draw from [lo, hi], reproducible across platforms.
long draw_int(std::mt19937_64& rng, long lo, long hi);

// Random nonzero point of the component: integer coefficients in
// [-bound, bound] on the basis rows, resampled while zero.
OneForm sample_component_point(const Component& component, std::mt19937_64& rng,
                               long bound);

}  // namespace resovar
