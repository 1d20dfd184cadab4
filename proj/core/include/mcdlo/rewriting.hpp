#ifndef MCDLO_REWRITING_HPP
#define MCDLO_REWRITING_HPP

// Translations between the signatures: definitional equivalences of MO with
// MSO(Fin) and with W(I), positive existential forms over W(I), and the two
// interpretations linking W(I) and L(I).

#include <set>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "mcdlo/order.hpp"
#include "mcdlo/syntax.hpp"

namespace mcdlo::rewriting {

using syntax::Formula;
using syntax::Signature;
using syntax::Term;

/// Supported pairs: MO <-> MSOFIN (over MSO(n)) and MO <-> WSO (over W(I)).
/// Throws Error for any other pair.
Formula defeq_translate(const Formula& f, Signature from, Signature to);

/// Pushes negations onto atomic formulas and removes -> and <->.
Formula negation_normal_form(const Formula& f);

/// Replaces every relative complement by a witness C with (a inter b) union C = a
/// and b inter C = bot, innermost first.
Formula eliminate_setminus(const Formula& f);

/// A positive existential WSO formula equivalent over W(I) to the
/// quantifier-free input (relative complements allowed in the input).
Formula qf_positive_rewrite(const Formula& f);

/// The LCI formula saying msinv(a, b) = c for finite a, b, c, through a
/// witness D with endpoints read off by l and r.  Arguments must be
/// variables or constants; names in `avoid` are not reused.
Formula sinv_characterization(const Term& a, const Term& b, const Term& c, std::set<std::string> avoid);

/// Reads a WSO formula in L(I): quantifiers are restricted to finite sets
/// (l(X) = r(X)) and msinv atoms are replaced by sinv_characterization.
Formula w_in_l_translate(const Formula& f);

/// An element of L(I) written as its left and right endpoint sets.
struct CodePair {
  FinSet l;
  FinSet r;

  friend bool operator==(const CodePair&, const CodePair&) = default;
};

CodePair code_of(const IntervalUnion& u);
/// Throws DomainError unless the pair codes some element.
IntervalUnion decode(const CodePair& p);
nlohmann::json to_json(const CodePair& p);
CodePair code_pair_from_json(const nlohmann::json& j);

/// Whether (b, c) are the endpoint sets of a nonempty element of L(I).
bool code_domain(const FinSet& b, const FinSet& c);
/// The same condition as a WSO formula (with relative complement).
Formula code_domain_formula(const Term& b, const Term& c);
/// code_domain_formula, or both components empty.
Formula code_or_empty(const Term& b, const Term& c);

/// Names of the code variables standing for an LCI variable.
std::pair<std::string, std::string> code_names(const std::string& x);

/// WSO formulas on codes (xl, xr).  `z` must denote an atom for membership.
Formula bounded_code(const Term& xl, const Term& xr);
Formula membership_code(const Term& xl, const Term& xr, const Term& z);
Formula inclusion_code(const Term& xl, const Term& xr, const Term& yl, const Term& yr,
                       std::set<std::string> avoid);

/// L(I) satisfies f at A iff W(I) satisfies the result at the codes of A,
/// each free X becoming the pair code_names(X).
Formula l_in_w_translate(const Formula& f);

/// An existential LCI formula equivalent over L(I) to the quantifier-free
/// LCI input.
Formula lci_existential_rewrite(const Formula& f);

}  // namespace mcdlo::rewriting

#endif  // MCDLO_REWRITING_HPP
