#pragma once

#include "contentlab/records.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace contentlab {

// Hunts for polynomial pairs that split one content property from another.
// Config is a flat object, every key required:
//   base     "Int" or "Q[x,y]"
//   pair     "weak-vs-gaussian"
//   degree   max degree in the extension variable, >= 1
//   coeff    scalar coefficient bound, >= 1
//   samples  random pairs tried after the structured families, >= 1
// Throws ConfigError on anything missing, extra, or out of range.
//
// One record per pair found where the contents fail to multiply while the
// radical containment still holds. Structured families are enumerated
// before sampling, so over Q[x,y] the linear witness family is always in
// the result. An empty result means the box was exhausted, nothing more.
std::vector<RunRecord> search_pairs(const nlohmann::json &config,
                                    std::uint64_t seed);

} // namespace contentlab
