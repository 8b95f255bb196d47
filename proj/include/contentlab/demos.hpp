#pragma once

#include "contentlab/records.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace contentlab {

// Self-contained walkthroughs of the landmark examples. Every Fails report
// ships the structured certificates that make it checkable by ring
// arithmetic alone. Names:
//   gauss-fails-bipoly    the plane pair whose contents do not multiply
//   dm2-bipoly            the same pair needs multiplier exponent 2
//   prufer-gauss          gcd-style bases multiply contents, the plane not
//   valuation-trichotomy  series content over Z, LexZ(2), Quad(2)
//   field-case            a nilpotent algebra over Q versus a domain one
//   localization-example  inverting a variable leaves no smallest cover
std::vector<std::string> demo_names();

// Throws UnknownDemo for names outside the list.
RunRecord run_demo(const std::string &name, std::uint64_t seed = 1);

} // namespace contentlab
