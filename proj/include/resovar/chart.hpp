#pragma once

#include <vector>

#include "resovar/arrangement.hpp"

namespace resovar {

// A flat off the line at infinity, with incident lines renumbered to
// affine indices.
struct AffineFlat {
  ProjectivePoint point;
  std::vector<int> lines;  // affine indices, sorted

  std::size_t multiplicity() const { return lines.size(); }
};

// An affine chart of the projective arrangement: one line is sent to
// infinity, the rest become the affine lines 0..n-1 in arrangement order.
// Flats on the infinity line group the affine lines into parallel
// families (direction classes); every affine line belongs to exactly one.
struct Chart {
  Arrangement arr;
  int hinf = 0;
  Lattice lattice;  // of the full projective arrangement

  std::vector<int> affine_to_arr;  // size n
  std::vector<int> arr_to_affine;  // size n+1, -1 at hinf

  std::vector<AffineFlat> affine_flats;    // lattice order
  std::vector<Flat> infinity_flats;        // flats on hinf, arrangement indices
  std::vector<std::vector<int>> families;  // affine indices, aligned with infinity_flats
  std::vector<int> family_of;              // affine index -> family index

  std::size_t n() const { return affine_to_arr.size(); }
};

Chart make_chart(const Arrangement& arr, int hinf);

}  // namespace resovar
