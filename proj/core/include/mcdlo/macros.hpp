#ifndef MCDLO_MACROS_HPP
#define MCDLO_MACROS_HPP

// Derived predicates written in the core symbols of each signature.  Bound
// variables introduced here are always fresh for the argument terms.

#include "mcdlo/syntax.hpp"

namespace mcdlo::syntax {

/// At(t) spelled out in the core symbols of `sig`.
Formula atom_expansion(const Term& t, Signature sig);
/// Replaces every At node by its core expansion.
Formula expand_atoms(const Formula& f, Signature sig);

/// a <E b in the core symbols of `sig`; plain ltE for MO.
Formula lt_exists_expansion(const Term& a, const Term& b, Signature sig);

/// a = bot, stated without constants in MO and with `bot` elsewhere.
Formula is_bot(const Term& t, Signature sig);
Formula is_nonempty(const Term& t, Signature sig);
/// Every atom lies below t (MO); t is the top element.
Formula is_top(const Term& t);

/// a subseteq b as the lattice equation a inter b = a.
Formula subset_eq(const Term& a, const Term& b);

/// Init(A): A is empty or an initial segment containing 0 (MSO(Fin) symbols).
Formula initial_segment(const Term& a);
/// A and B partition the universe (MSO(Fin) symbols).
Formula complementary(const Term& a, const Term& b);

}  // namespace mcdlo::syntax

#endif  // MCDLO_MACROS_HPP
