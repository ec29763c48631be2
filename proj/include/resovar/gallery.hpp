#pragma once

#include <string>
#include <vector>

#include "resovar/arrangement.hpp"

namespace resovar {

// Built-in fixtures. Recognized names:
//   central(n)        n >= 1 concurrent lines through (0:0:1), nothing else
//   nodal(n)          n >= 1 tangent lines of a conic; only double points
//   ex3               xyz(x-z)(x-y)(y-z)(y+x-2z) = 0, seven lines
//   braid             x, y, z, x-y, x-z, y-z
//   parallelogram_min closure of x=0, x=1, y=0, y=1, y=x
//   other7            closures of x=0, y=0, y=x, y=1, y=x+1, x=1, y=x-1
// Throws UnknownFixture for anything else.
Arrangement gallery(const std::string& name);

std::vector<std::string> gallery_names();

struct NamedArrangement {
  std::string name;
  Arrangement arr;
};

// Pencil of n lines through (0:0:1) plus the line z at infinity; the chart
// at z has n central affine lines.
Arrangement central_with_infinity(int n);

// a vertical and b horizontal integer grid lines, the diagonal x = y and
// the line at infinity; class C2 with min(a,b) triple points on the
// diagonal. grid_with_diagonal(2, 2) is parallelogram_min.
Arrangement grid_with_diagonal(int a, int b);

// Projective closure of an affine arrangement with only double points,
// split into parallel families of the given sizes; class C1 with the line
// at infinity as cover.
Arrangement c1_families(const std::vector<int>& sizes);

// Verified corpora for cross-validation runs: every entry classifies as
// C1 resp. C2 (checked at construction).
std::vector<NamedArrangement> corpus_c1();
std::vector<NamedArrangement> corpus_c2();

}  // namespace resovar
