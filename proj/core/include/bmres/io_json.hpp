#pragma once

#include <nlohmann/json.hpp>

#include "bmres/matching.hpp"
#include "bmres/search.hpp"
#include "bmres/taylor.hpp"
#include "bmres/verify.hpp"

namespace bmres {

using json = nlohmann::ordered_json;

/// {"edges": [{"source": .., "target": .., "lcm": "csv"}, ...]}
json matching_to_json(const MonomialIdeal& ideal, const AcyclicMatching& a);
AcyclicMatching matching_from_json(const json& j);

/// {"num_vars", "ranks", "basis": [[bitmask,...],...],
///  "entries": [[degree,row,col,coeff,"mono csv"],...]}
json complex_to_json(const FreeComplex& c);
FreeComplex complex_from_json(const json& j);

json betti_to_json(const BettiTable& t);

json certificate_to_json(const Certificate& cert);

json pipeline_report_to_json(const PipelineReport& report);

}  // namespace bmres
