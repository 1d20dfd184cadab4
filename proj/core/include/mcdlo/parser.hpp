#ifndef MCDLO_PARSER_HPP
#define MCDLO_PARSER_HPP

// S-expression reader for formulas.
//
//   term    := VAR | bot | zero | zerostar | top
//            | (union t t) | (inter t t) | (setminus t t) | (delta t t)
//            | (sinv t) | (msinv t t) | (min t) | (max t) | (l t) | (r t)
//   formula := true | false
//            | (= t t) | (subset t t) | (ltE t t) | (at t)
//            | (not f) | (and f f ...) | (or f f ...) | (implies f f) | (iff f f)
//            | (exists VAR f) | (forall VAR f)
//
// VAR matches [A-Z][A-Za-z0-9_]*.  `delta` is read as a union of relative
// complements and `ltE` outside MO as its definition in the signature's own
// symbols.  Every symbol is checked against the signature as it is read.

#include <string_view>

#include "mcdlo/syntax.hpp"

namespace mcdlo::syntax {

Formula parse_formula(std::string_view text, Signature sig);
Term parse_term(std::string_view text, Signature sig);

}  // namespace mcdlo::syntax

#endif  // MCDLO_PARSER_HPP
