#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "b1/classify.hpp"
#include "b1/congruences.hpp"
#include "b1/topology.hpp"

namespace b1 {

nlohmann::json elements_json(ElementSet s);

/// {"ideal":[0,2]}
nlohmann::json ideal_json(ElementSet ideal);

/// {"classes":[[0,2],[1]]}
nlohmann::json congruence_json(const Congruence& r);

/// {"points":[...], "closed_sets":[[...]], "t0":bool, "sober":bool,
///  "spectral":bool, "generic_points":{...}}
/// closed_sets and generic_points refer to points by position.
nlohmann::json topology_json(const Spectrum<ElementSet>& prs, const SpectralReport& report);

/// One line per (cardinality, case): "cardinality,case,count".
std::string census_csv(const CensusResult& census);

nlohmann::json census_json(const CensusResult& census);

std::string format_set(ElementSet s);
std::string format_partition(const Congruence& r);

}  // namespace b1
