#include "resovar/json_io.hpp"

namespace resovar {

namespace {

Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

Json rat_row_json(const RatVec& row) {
  Json out = Json::array();
  for (const Rat& x : row) out.push_back(rat_to_string(x));
  return out;
}

Json basis_json(const Subspace& space) {
  Json out = Json::array();
  for (const RatVec& row : space.basis()) out.push_back(rat_row_json(row));
  return out;
}

Json flat_json(const Flat& flat) {
  return Json{{"point", triple_json(flat.point.coords)},
              {"lines", flat.incident},
              {"multiplicity", flat.multiplicity()}};
}

std::vector<int> to_arr_indices(const Chart& chart, const std::vector<int>& affine) {
  std::vector<int> out;
  out.reserve(affine.size());
  for (int i : affine) out.push_back(chart.affine_to_arr[i]);
  return out;
}

}  // namespace

Json to_json(const Arrangement& arr) {
  Json lines = Json::array();
  for (const ProjectiveLine& line : arr.lines) lines.push_back(triple_json(line.coeffs));
  return Json{{"lines", lines}};
}

Json to_json(const Lattice& lattice) {
  Json flats = Json::array();
  for (const Flat& flat : lattice.flats) flats.push_back(flat_json(flat));
  return Json{{"flats", flats}};
}

Json to_json(const ClassInfo& info) {
  Json out{{"tag", arr_class_name(info.tag)}};
  if (info.h0) out["h0"] = *info.h0;
  if (info.hinf) out["hinf"] = *info.hinf;
  out["high_flats"] = info.high_flats;
  if (!info.line_covers.empty()) out["line_covers"] = info.line_covers;
  if (!info.pair_covers.empty()) {
    Json pairs = Json::array();
    for (const auto& [i, j] : info.pair_covers) pairs.push_back(Json::array({i, j}));
    out["pair_covers"] = pairs;
  }
  if (info.nearest_pair) {
    out["nearest_pair"] = Json::array({info.nearest_pair->first, info.nearest_pair->second});
    out["uncovered_high_points"] = info.uncovered;
  }
  return out;
}

Json to_json(const TuttePolynomial& tutte) {
  Json terms = Json::array();
  for (const auto& [key, c] : tutte.coeffs) {
    terms.push_back(Json{{"x", key.first}, {"y", key.second}, {"coefficient", c}});
  }
  return Json{{"terms", terms},
              {"text", tutte.to_string()},
              {"bases", tutte.evaluate(1, 1)},
              {"subsets", tutte.evaluate(2, 2)}};
}

Json to_json(const Chart& chart) {
  Json families = Json::array();
  for (const auto& family : chart.families) {
    families.push_back(to_arr_indices(chart, family));
  }
  return Json{{"infinity", chart.hinf},
              {"affine_lines", chart.affine_to_arr},
              {"families", families}};
}

Json to_json(const Chart& chart, const Component& component) {
  Json out{{"kind", component_kind_name(component.kind)},
           {"dimension", component.dimension()},
           {"ambient", component.space.ambient()},
           {"basis", basis_json(component.space)}};
  switch (component.kind) {
    case ComponentKind::ParallelFamily: {
      out["lines"] = to_arr_indices(chart, chart.families[component.family]);
      out["infinity_point"] = triple_json(chart.infinity_flats[component.family].point.coords);
      break;
    }
    case ComponentKind::Pencil: {
      const AffineFlat& flat = chart.affine_flats[component.flat];
      out["lines"] = to_arr_indices(chart, flat.lines);
      out["point"] = triple_json(flat.point.coords);
      break;
    }
    case ComponentKind::Parallelogram: {
      const Parallelogram& pg = component.para;
      out["sides"] = Json{{"k", chart.affine_to_arr[pg.k]},
                          {"l", chart.affine_to_arr[pg.l]},
                          {"p", chart.affine_to_arr[pg.p]},
                          {"q", chart.affine_to_arr[pg.q]}};
      out["vertices"] =
          Json::array({triple_json(chart.affine_flats[pg.x_flat].point.coords),
                       triple_json(chart.affine_flats[pg.y_flat].point.coords)});
      break;
    }
  }
  return out;
}

Json to_json(const Chart& chart, const std::vector<Component>& components) {
  Json out = Json::array();
  for (const Component& c : components) out.push_back(to_json(chart, c));
  return out;
}

Json to_json(const VerificationReport& report) {
  Json per_component = Json::array();
  for (const ComponentCheck& check : report.per_component) {
    per_component.push_back(
        Json{{"samples", check.samples}, {"all_resonant", check.all_resonant}});
  }
  return Json{{"seed", report.seed},
              {"samples", report.samples},
              {"components", per_component},
              {"outside", Json{{"tested", report.outside_tested},
                               {"all_nonresonant", report.outside_all_nonresonant}}},
              {"pairwise_intersections_zero", report.pairwise_intersections_zero},
              {"ok", report.all_ok()}};
}

Json to_json(const Chart& chart, const CharComponent& component) {
  Json relations = Json::array();
  for (const auto& relation : component.relations) {
    Json exponents = Json::array();
    for (std::size_t i = 0; i < relation.size(); ++i) {
      if (relation[i] != 0) {
        exponents.push_back(Json{{"line", chart.affine_to_arr[static_cast<int>(i)]},
                                 {"exponent", relation[i]}});
      }
    }
    relations.push_back(exponents);
  }
  return Json{{"kind", component_kind_name(component.kind)},
              {"component", component.component},
              {"support", to_arr_indices(chart, component.support)},
              {"relations", relations},
              {"dimension", component.dimension}};
}

Json to_json(const Arrangement&, const Lattice& lattice, const AdmissibilityReport& report) {
  Json sums = Json::array();
  for (const PencilSum& ps : report.pencil_sums) {
    const Flat& flat = lattice.flats[ps.flat_index];
    sums.push_back(Json{{"point", triple_json(flat.point.coords)},
                        {"lines", flat.incident},
                        {"sum", rat_to_string(ps.sum)}});
  }
  return Json{{"witness", rat_vector_to_strings(report.witness.a)}, {"pencil_sums", sums}};
}

Subspace subspace_from_json(const Json& basis, std::size_t ambient) {
  RatMat rows;
  for (const Json& row : basis) {
    RatVec values;
    for (const Json& cell : row) values.push_back(rat_from_string(cell.get<std::string>()));
    rows.push_back(std::move(values));
  }
  return Subspace::from_generators(std::move(rows), ambient);
}

}  // namespace resovar
