#pragma once

#include "json.hpp"  // vendored nlohmann/json

#include "resovar/charvar.hpp"
#include "resovar/resonance.hpp"
#include "resovar/tutte.hpp"

namespace resovar {

using Json = nlohmann::json;

Json to_json(const Arrangement& arr);
Json to_json(const Lattice& lattice);
Json to_json(const ClassInfo& info);
Json to_json(const TuttePolynomial& tutte);
Json to_json(const Chart& chart);
Json to_json(const Chart& chart, const Component& component);
Json to_json(const Chart& chart, const std::vector<Component>& components);
Json to_json(const VerificationReport& report);
Json to_json(const Chart& chart, const CharComponent& component);
Json to_json(const Arrangement& arr, const Lattice& lattice, const AdmissibilityReport& report);

// Re-reads a component basis emitted by to_json; used to check that the
// serialized rational strings reproduce the subspace exactly.
Subspace subspace_from_json(const Json& basis, std::size_t ambient);

}  // namespace resovar
