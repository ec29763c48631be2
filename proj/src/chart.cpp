#include "resovar/chart.hpp"

#include <string>

#include "resovar/errors.hpp"

namespace resovar {

Chart make_chart(const Arrangement& arr, int hinf) {
  if (hinf < 0 || hinf >= static_cast<int>(arr.size())) {
    fail(ErrorCode::IndexOutOfRange,
         "infinity index " + std::to_string(hinf) + " out of range for " +
             std::to_string(arr.size()) + " lines");
  }
  Chart chart;
  chart.arr = arr;
  chart.hinf = hinf;
  chart.lattice = intersection_lattice(arr);

  chart.arr_to_affine.assign(arr.size(), -1);
  for (int i = 0; i < static_cast<int>(arr.size()); ++i) {
    if (i == hinf) continue;
    chart.arr_to_affine[i] = static_cast<int>(chart.affine_to_arr.size());
    chart.affine_to_arr.push_back(i);
  }

  chart.family_of.assign(chart.n(), -1);
  for (const Flat& flat : chart.lattice.flats) {
    if (flat.contains_line(hinf)) {
      std::vector<int> family;
      for (int line : flat.incident) {
        if (line == hinf) continue;
        family.push_back(chart.arr_to_affine[line]);
      }
      for (int member : family) {
        chart.family_of[member] = static_cast<int>(chart.families.size());
      }
      chart.infinity_flats.push_back(flat);
      chart.families.push_back(std::move(family));
    } else {
      AffineFlat affine;
      affine.point = flat.point;
      for (int line : flat.incident) affine.lines.push_back(chart.arr_to_affine[line]);
      chart.affine_flats.push_back(std::move(affine));
    }
  }
  return chart;
}

}  // namespace resovar
