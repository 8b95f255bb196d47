#pragma once

#include "contentlab/numeric.hpp"
#include "contentlab/rings.hpp"
#include "contentlab/valgroup.hpp"

namespace contentlab {

// Bounds for random element generation. All sampling is driven by the
// deterministic Rng so runs replay exactly.
struct SampleBounds {
    int degree = 3;  // max polynomial degree (per variable level)
    long coeff = 9;  // scalar coefficients drawn from [-coeff, coeff]
    int terms = 3;   // max support size for sparse payloads
};

RingElement sample_element(const RingId &ring, Rng &rng, const SampleBounds &bounds);
RingElement sample_nonzero(const RingId &ring, Rng &rng, const SampleBounds &bounds);

// Nonnegative group element with coordinates bounded by `bound`.
GroupElement sample_nonneg_group_elem(const GroupId &group, Rng &rng, long bound);

} // namespace contentlab
