#ifndef MCDLO_GENERATORS_HPP
#define MCDLO_GENERATORS_HPP

// Seeded random terms and formulas for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcdlo/syntax.hpp"

namespace mcdlo::generators {

using syntax::Formula;
using syntax::Signature;
using syntax::Term;

using Rng = std::mt19937_64;

struct GenOptions {
  Signature sig = Signature::mo();
  std::vector<std::string> vars{"X", "Y"};
  int term_depth = 1;      // nesting of function applications
  int depth = 2;           // connectives and quantifiers
  bool quantifiers = true;
  bool constants = true;
  /// Constants to draw from; empty means every constant of the signature.
  std::vector<syntax::Const> constant_set;
  /// Relation kinds to draw from; empty means every relation of the signature.
  std::vector<Formula::Kind> relations;
};

Term random_term(Rng& rng, const GenOptions& o, const std::vector<std::string>& vars, int depth);
Formula random_atom(Rng& rng, const GenOptions& o, const std::vector<std::string>& vars);
/// Bound variables are named B1, B2, ... by nesting level.
Formula random_formula(Rng& rng, const GenOptions& o);

/// Quantifier-free WSO with extensions over A, B.
GenOptions qf_wso_options();
/// Quantifier-free LCI over A, B.
GenOptions qf_lci_options();
/// MO formulas over the power signature: variable or bot/zero arguments only.
GenOptions power_options();

}  // namespace mcdlo::generators

#endif  // MCDLO_GENERATORS_HPP
