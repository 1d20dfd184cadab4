#ifndef MCDLO_SYNTAX_HPP
#define MCDLO_SYNTAX_HPP

// One abstract syntax shared by the four signatures.  Terms and formulas are
// immutable, cheap to copy, and compared structurally.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcdlo::syntax {

enum class SigTag { mo, msofin, wso, lci };

/// A signature tag plus optional extensions.  With `extended` set, relative
/// complement and symmetric difference are available; for MO the extension
/// also admits the Boolean-algebra terms (union, inter, bot, zero, top).
struct Signature {
  SigTag tag = SigTag::mo;
  bool extended = false;

  static constexpr Signature mo() { return {SigTag::mo, false}; }
  static constexpr Signature msofin() { return {SigTag::msofin, false}; }
  static constexpr Signature wso() { return {SigTag::wso, false}; }
  static constexpr Signature lci() { return {SigTag::lci, false}; }
  constexpr Signature with_extensions() const { return {tag, true}; }

  friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

std::string_view to_string(SigTag tag);
/// Accepts "mo", "msofin", "wso", "lci", optionally suffixed with "+ext".
Signature parse_signature(std::string_view text);

enum class Const { bot, zero, zerostar, top };
enum class Fn { union_, inter, setminus, succ_inv, sinv, min, max, left, right };

int arity(Fn fn);
std::string_view keyword(Const c);
std::string_view keyword(Fn fn);

class Term {
 public:
  enum class Kind { var, constant, apply };

  static Term var(std::string name);
  static Term constant(Const c);
  static Term apply(Fn fn, std::vector<Term> args);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::var; }
  bool is_constant() const { return kind() == Kind::constant; }
  bool is_apply() const { return kind() == Kind::apply; }

  const std::string& name() const;     // var only
  Const constant_value() const;        // constant only
  Fn fn() const;                       // apply only
  std::span<const Term> args() const;  // apply only; empty otherwise

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Term var(std::string name);
Term bot();
Term zero();
Term zerostar();
Term top();
Term unite(Term a, Term b);
Term meet(Term a, Term b);
Term setminus(Term a, Term b);
/// Symmetric difference, written with relative complements.
Term delta(Term a, Term b);
Term succ_inv(Term a);
Term sinv(Term a, Term b);
Term min_term(Term a);
Term max_term(Term a);
Term left_ends(Term a);
Term right_ends(Term a);

class Formula {
 public:
  enum class Kind {
    truth,
    falsity,
    eq,
    subset,
    lt_exists,
    atom,  // At(t): t is a singleton
    not_,
    and_,
    or_,
    implies,
    iff,
    exists,
    forall
  };

  static Formula truth();
  static Formula falsity();
  static Formula eq(Term a, Term b);
  static Formula subset(Term a, Term b);
  static Formula lt_exists(Term a, Term b);
  static Formula atom(Term t);
  static Formula negate(Formula f);
  static Formula binary(Kind kind, Formula a, Formula b);
  static Formula quantifier(Kind kind, std::string var, Formula body);

  Kind kind() const;
  bool is_atomic() const;      // eq, subset, lt_exists, atom, truth, falsity
  bool is_quantifier() const;  // exists, forall
  bool is_binary() const;      // and, or, implies, iff

  std::span<const Term> terms() const;        // atomic only
  std::span<const Formula> children() const;  // connectives and quantifiers
  const std::string& bound_var() const;       // quantifiers only

  const Formula& child(std::size_t i = 0) const { return children()[i]; }
  const Term& term(std::size_t i = 0) const { return terms()[i]; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula eq(Term a, Term b);
Formula neq(Term a, Term b);
Formula subset(Term a, Term b);
Formula lt_exists(Term a, Term b);
Formula at(Term t);
Formula lnot(Formula f);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);
/// Right-nested conjunction; truth for an empty list.
Formula conjunction(std::vector<Formula> parts);
/// Right-nested disjunction; falsity for an empty list.
Formula disjunction(std::vector<Formula> parts);
Formula exists_all(const std::vector<std::string>& vars, Formula body);

std::string print(const Term& t);
std::string print(const Formula& f);

}  // namespace mcdlo::syntax

#endif  // MCDLO_SYNTAX_HPP
