#ifndef MCDLO_TRANSFORM_HPP
#define MCDLO_TRANSFORM_HPP

// Structural operations on formulas: variables, capture-avoiding
// substitution, unnesting and syntactic classifiers.

#include <map>
#include <set>
#include <string>

#include "mcdlo/syntax.hpp"

namespace mcdlo::syntax {

bool allows(Signature sig, Const c);
bool allows(Signature sig, Fn fn);
bool allows(Signature sig, Formula::Kind relation);

/// Throws Error naming the first symbol outside the signature.
void check_signature(const Formula& f, Signature sig);
void check_signature(const Term& t, Signature sig);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
/// Free and bound variable names.
std::set<std::string> all_vars(const Formula& f);

/// `base` followed by the least positive counter not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

Term substitute(const Term& t, const std::map<std::string, Term>& sub);
/// Simultaneous capture-avoiding substitution of free occurrences.
Formula substitute(const Formula& f, const std::map<std::string, Term>& sub);
Formula substitute(const Formula& f, const std::string& var, const Term& t);
/// Renames free variables simultaneously.
Formula rename_free(const Formula& f, const std::map<std::string, std::string>& names);

/// Number of function-symbol occurrences in a term.
int function_symbols(const Term& t);
int quantifier_depth(const Formula& f);
bool is_quantifier_free(const Formula& f);

/// Rewrites every atomic subformula so that it carries at most one function
/// symbol, hoisting nested applications into existentially quantified
/// auxiliaries defined by `Z = t`.  Relational atoms (subset, ltE, at) are
/// left with variables and constants only.
Formula unnest(const Formula& f);
/// True when every atomic subformula is in the shape unnest produces.
bool is_unnested(const Formula& f);

/// No negation, implication, biconditional or universal quantifier, and no
/// relative complement inside terms.
bool is_positive_existential(const Formula& f);
/// Existential quantifiers occur only positively and universal ones only
/// negatively, so the formula has an existential prenex form.
bool is_existential(const Formula& f);

}  // namespace mcdlo::syntax

#endif  // MCDLO_TRANSFORM_HPP
