#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace resovar {

using Triple = std::array<long long, 3>;

// A line a*x + b*y + c*z = 0 in P^2, stored as a primitive integer triple
// whose first nonzero entry is positive. Two lines are equal iff their
// canonical triples are equal.
struct ProjectiveLine {
  Triple coeffs{0, 0, 0};

  static ProjectiveLine from_triple(long long a, long long b, long long c);
  bool operator==(const ProjectiveLine&) const = default;
};

// A point (x : y : z), canonicalized the same way.
struct ProjectivePoint {
  Triple coords{0, 0, 0};

  static ProjectivePoint from_triple(long long x, long long y, long long z);
  bool operator==(const ProjectivePoint&) const = default;
  // lexicographic on the canonical triple; the lattice order
  bool operator<(const ProjectivePoint& other) const { return coords < other.coords; }
};

bool incident(const ProjectivePoint& p, const ProjectiveLine& l);

// Intersection point of two distinct lines.
ProjectivePoint meet(const ProjectiveLine& a, const ProjectiveLine& b);

// Ordered list of pairwise distinct lines; a line's identity is its index.
struct Arrangement {
  std::vector<ProjectiveLine> lines;

  std::size_t size() const { return lines.size(); }
};

Arrangement make_arrangement(const std::vector<Triple>& triples);

// Parses the ".arr" text format: one line per projective line, three
// whitespace-separated integers or rationals "p/q"; '#' starts a comment;
// blank lines are ignored. Rational rows are cleared of denominators.
Arrangement parse_arrangement(const std::string& text);

std::string arrangement_to_text(const Arrangement& arr);

// An intersection point together with the sorted indices of all lines
// through it. Multiplicity is the number of incident lines.
struct Flat {
  ProjectivePoint point;
  std::vector<int> incident;

  std::size_t multiplicity() const { return incident.size(); }
  bool contains_line(int line) const;
};

// All pairwise intersection points grouped by location, ordered
// lexicographically by canonical point.
struct Lattice {
  std::vector<Flat> flats;
};

Lattice intersection_lattice(const Arrangement& arr);

enum class ArrClass { Nodal, C1, C2, Other };

const char* arr_class_name(ArrClass tag);

// Classification by where the points of multiplicity >= 3 sit:
// on no line (Nodal), on one member line (C1), on two member lines (C2),
// or not coverable by two member lines (Other).
struct ClassInfo {
  ArrClass tag = ArrClass::Nodal;
  std::optional<int> h0;    // C1 and C2
  std::optional<int> hinf;  // C2 only
  std::vector<std::size_t> high_flats;  // indices into the lattice, multiplicity >= 3

  // every valid cover, deterministically ordered by line index
  std::vector<int> line_covers;                  // C1 candidates
  std::vector<std::pair<int, int>> pair_covers;  // C2 candidates, i < j

  // diagnostics for Other: the pair covering the most high points
  std::optional<std::pair<int, int>> nearest_pair;
  std::size_t uncovered = 0;
};

ClassInfo classify(const Arrangement& arr);
ClassInfo classify(const Arrangement& arr, const Lattice& lattice);

}  // namespace resovar
