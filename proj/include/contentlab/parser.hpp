#pragma once

#include "contentlab/content.hpp"
#include "contentlab/rings.hpp"
#include "contentlab/valgroup.hpp"

#include <string>

namespace contentlab {

// Text input for every CLI surface. The grammar mirrors the printer, so
// parse(print(e)) == e for every element the library can print:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-'* power
//   power   := atom ('^' (nat | '(' int (',' int)* ')'))?
//   atom    := nat ('/' nat)? | symbol | '(' expr ')'
//
// A parenthesized exponent is a value-group vector and is only meaningful
// on the series symbol t. Failures carry position and expected-token data:
// SyntaxError for token-level trouble, ElaborationError when the shape is
// fine but does not name anything in the target ring.

// Element of `ring` denoted by `src`.
RingElement parse_element(const std::string &src, const RingId &ring);

// Polynomial in `var` with coefficients in `base`. This is the input form
// for content queries; it works for every base, including the ones that
// never materialize base[var] as a ring.
PolyOverRing parse_poly(const std::string &src, const RingId &base,
                        const std::string &var);

// Ring and group names, accepting exactly the printed forms:
//   Int, Q, Mod(12), Fp(7), Int[T], Int[T][U], Q[x,y], Hahn(LexZ(2),Q)
//   Z, LexZ(2), Quad(2)
RingId parse_ring(const std::string &src);
GroupId parse_group(const std::string &src);

// Generator family for series content queries, accepting the printed
// descriptor forms over the value group of `hahn_ring`:
//   finite[(0),(2),(5)]   affine((2);(3))   conv(1/2 + 1/3*sqrt(2))
SeriesDescriptor parse_descriptor(const std::string &src,
                                  const RingId &hahn_ring);

} // namespace contentlab
