#ifndef MCDLO_FEFVAU_HPP
#define MCDLO_FEFVAU_HPP

// Generalised powers M^I whose index algebra is the powerset of a finite
// index set.  A relation of the power is given by an acceptable sequence
// (Phi; theta_1..theta_m): it holds of a tuple when the index algebra
// satisfies Phi at the supports of the theta_j.

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcdlo/models.hpp"
#include "mcdlo/syntax.hpp"

namespace mcdlo::fefvau {

using models::Mask;
using syntax::Formula;
using syntax::Term;

struct AcceptableSequence {
  /// Over MO with extensions; free variables among `supports`.
  Formula index = Formula::truth();
  /// Component formulas over MO with extensions; free variables among `vars`.
  std::vector<Formula> components;
  /// supports[j] is the index variable carrying the support of components[j].
  std::vector<std::string> supports;
  /// The shared argument tuple of the component formulas.
  std::vector<std::string> vars;

  std::size_t size() const { return components.size(); }
};

std::string print(const AcceptableSequence& z);
nlohmann::json to_json(const AcceptableSequence& z);

/// Names the supports Y1..Ym in component order.
AcceptableSequence canonical(AcceptableSequence z);

struct AtomicSequences {
  AcceptableSequence subset;     // (Y1 = top; X1 subset X2)
  AcceptableSequence lt_exists;  // (Y1 != bot or Y2 ltE Y3; X1 ltE X2, X1 != bot, X2 != bot)
  /// The constant whose components are 0 on the index set A and bot off it:
  /// (Y1 = A and Y2 = top \ A; X1 = zero, X1 = bot).
  std::function<AcceptableSequence(const Term&)> constant;
};

AtomicSequences atomic_sequences();
/// (Y1 = top; X1 = X2)
AcceptableSequence equality_sequence();
/// Atoms of the power: (At(Y1) and Y2 = top; At(X1), At(X1) or X1 = bot).
AcceptableSequence atom_sequence();

/// Formulas in the language of the power: relations given by acceptable
/// sequences, Boolean connectives and quantifiers over power elements.
class PowerFormula {
 public:
  enum class Kind { rel, not_, and_, or_, exists, forall };

  /// The sequence's `vars` are positional; `args` are variables or the
  /// constants bot and zero of the power.
  static PowerFormula relation(AcceptableSequence zeta, std::vector<Term> args);
  static PowerFormula negate(PowerFormula f);
  static PowerFormula conj(PowerFormula a, PowerFormula b);
  static PowerFormula disj(PowerFormula a, PowerFormula b);
  static PowerFormula exists(std::string var, PowerFormula body);
  static PowerFormula forall(std::string var, PowerFormula body);

  Kind kind() const;
  const AcceptableSequence& sequence() const;  // rel only
  const std::vector<Term>& args() const;       // rel only
  const PowerFormula& child(std::size_t i = 0) const;
  const std::string& bound_var() const;  // quantifiers only

 private:
  struct Node;
  explicit PowerFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string print(const PowerFormula& f);
std::set<std::string> free_vars(const PowerFormula& f);
int quantifier_depth(const PowerFormula& f);

/// Reads an MO formula (constants bot and zero allowed as arguments) in the
/// language of the power, through the atomic sequences.
PowerFormula to_power(const Formula& f);

inline constexpr std::size_t kDefaultComponentCap = 512;

/// An acceptable sequence equivalent to f over every generalised power of
/// this kind.  Throws Error when more than `cap` components would arise.
AcceptableSequence fv_reduce(const PowerFormula& f, std::size_t cap = kDefaultComponentCap);

// ---------------------------------------------------------------- finite powers

/// M^I with M a finite mask algebra and I a finite chain whose powerset is
/// the index algebra.  A power element is one factor value per index point.
class FinitePower {
 public:
  using Element = std::vector<Mask>;

  FinitePower(const models::SetAlgebra& factor, std::size_t index_size);

  std::size_t index_size() const noexcept { return index_.points(); }
  const models::SetAlgebra& factor() const noexcept { return factor_; }
  const models::PointAlgebra& index_algebra() const noexcept { return index_; }
  /// Every power element, in lexicographic order.
  std::vector<Element> elements() const;

  /// The supports of z's components at a tuple aligned with z.vars.
  std::vector<Mask> supports(const AcceptableSequence& z, const std::vector<Element>& tuple) const;
  bool holds(const AcceptableSequence& z, const std::map<std::string, Element>& a) const;
  /// Direct semantics: quantifiers enumerate all power elements.
  bool holds(const PowerFormula& f, const std::map<std::string, Element>& a) const;

 private:
  Element constant(const Term& t) const;

  const models::SetAlgebra& factor_;
  models::PointAlgebra index_;
};

// ---------------------------------------------------------------- W(I) over W<A>

struct PowerElement {
  FinSet index;
  std::vector<FinSet> components;  // one per index point, in increasing order

  friend bool operator==(const PowerElement&, const PowerElement&) = default;
};

/// {0} together with every entry of the tuple.
FinSet funky(const std::vector<FinSet>& params);

/// Splits B along the index points: the component at i is B on [i, next(i))
/// mapped back through the affine identification with [0,1).
PowerElement decompose(const std::vector<FinSet>& params, const FinSet& b);
FinSet reassemble(const PowerElement& e);

struct SupportResult {
  FinSet support;
  bool stabilized = true;
};

/// Index points whose component values satisfy theta in W(I), each decided by
/// grid evaluation up to budget kmax.  `vars` are aligned with `tuple`.
SupportResult support(const Formula& theta, const std::vector<std::string>& vars,
                      const std::vector<PowerElement>& tuple, int kmax);

struct OracleAnswer {
  bool verdict = false;
  bool stabilized = true;
};

using SentenceOracle = std::function<OracleAnswer(const Formula&)>;

/// Decides W(I) sentences by stabilised grid evaluation with budget up to
/// quantifier depth + extra, memoising on the printed sentence.
SentenceOracle grid_oracle(int extra = 2);

struct ParameterTranslation {
  Formula psi = Formula::truth();
  std::vector<std::string> params;
  std::vector<Formula> sentences;
  std::vector<OracleAnswer> answers;
  bool stabilized = true;
};

nlohmann::json to_json(const ParameterTranslation& t);

/// For an MO formula with free variables `params`, a formula psi over MO with
/// extensions such that W(I) satisfies f at a tuple A iff the restriction of
/// W(I) to <A> satisfies psi at A.
ParameterTranslation translate_with_parameters(const Formula& f, const std::vector<std::string>& params,
                                               const SentenceOracle& oracle,
                                               std::size_t cap = kDefaultComponentCap);

/// Evaluates psi at the tuple inside W(I) restricted to <A>, through its
/// copy of MSO(|<A>|).
bool eval_translation(const ParameterTranslation& t, const std::vector<FinSet>& values);

}  // namespace mcdlo::fefvau

#endif  // MCDLO_FEFVAU_HPP
