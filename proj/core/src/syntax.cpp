#include "mcdlo/syntax.hpp"

#include <cassert>

#include "mcdlo/error.hpp"

namespace mcdlo::syntax {

std::string_view to_string(SigTag tag) {
  switch (tag) {
    case SigTag::mo: return "mo";
    case SigTag::msofin: return "msofin";
    case SigTag::wso: return "wso";
    case SigTag::lci: return "lci";
  }
  return "?";
}

Signature parse_signature(std::string_view text) {
  Signature sig;
  constexpr std::string_view suffix = "+ext";
  if (text.size() > suffix.size() && text.substr(text.size() - suffix.size()) == suffix) {
    sig.extended = true;
    text.remove_suffix(suffix.size());
  }
  if (text == "mo") {
    sig.tag = SigTag::mo;
  } else if (text == "msofin") {
    sig.tag = SigTag::msofin;
  } else if (text == "wso") {
    sig.tag = SigTag::wso;
  } else if (text == "lci") {
    sig.tag = SigTag::lci;
  } else {
    throw Error("unknown signature '" + std::string(text) + "'");
  }
  return sig;
}

int arity(Fn fn) {
  switch (fn) {
    case Fn::union_:
    case Fn::inter:
    case Fn::setminus:
    case Fn::sinv:
      return 2;
    default:
      return 1;
  }
}

std::string_view keyword(Const c) {
  switch (c) {
    case Const::bot: return "bot";
    case Const::zero: return "zero";
    case Const::zerostar: return "zerostar";
    case Const::top: return "top";
  }
  return "?";
}

std::string_view keyword(Fn fn) {
  switch (fn) {
    case Fn::union_: return "union";
    case Fn::inter: return "inter";
    case Fn::setminus: return "setminus";
    case Fn::succ_inv: return "sinv";
    case Fn::sinv: return "msinv";
    case Fn::min: return "min";
    case Fn::max: return "max";
    case Fn::left: return "l";
    case Fn::right: return "r";
  }
  return "?";
}

// ---------------------------------------------------------------- Term

struct Term::Node {
  Kind kind;
  std::string name;
  Const constant = Const::bot;
  Fn fn = Fn::union_;
  std::vector<Term> args;
};

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::var, std::move(name), {}, {}, {}}));
}

Term Term::constant(Const c) {
  return Term(std::make_shared<const Node>(Node{Kind::constant, {}, c, {}, {}}));
}

Term Term::apply(Fn fn, std::vector<Term> args) {
  if (static_cast<int>(args.size()) != arity(fn)) {
    throw Error("function '" + std::string(keyword(fn)) + "' expects " +
                std::to_string(arity(fn)) + " arguments");
  }
  return Term(std::make_shared<const Node>(Node{Kind::apply, {}, {}, fn, std::move(args)}));
}

Term::Kind Term::kind() const { return node_->kind; }

const std::string& Term::name() const {
  assert(node_->kind == Kind::var);
  return node_->name;
}

Const Term::constant_value() const {
  assert(node_->kind == Kind::constant);
  return node_->constant;
}

Fn Term::fn() const {
  assert(node_->kind == Kind::apply);
  return node_->fn;
}

std::span<const Term> Term::args() const { return node_->args; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::var: return a.name() == b.name();
    case Term::Kind::constant: return a.constant_value() == b.constant_value();
    case Term::Kind::apply:
      return a.fn() == b.fn() && std::equal(a.args().begin(), a.args().end(),
                                            b.args().begin(), b.args().end());
  }
  return false;
}

Term var(std::string name) { return Term::var(std::move(name)); }
Term bot() { return Term::constant(Const::bot); }
Term zero() { return Term::constant(Const::zero); }
Term zerostar() { return Term::constant(Const::zerostar); }
Term top() { return Term::constant(Const::top); }
Term unite(Term a, Term b) { return Term::apply(Fn::union_, {std::move(a), std::move(b)}); }
Term meet(Term a, Term b) { return Term::apply(Fn::inter, {std::move(a), std::move(b)}); }
Term setminus(Term a, Term b) { return Term::apply(Fn::setminus, {std::move(a), std::move(b)}); }
Term delta(Term a, Term b) { return unite(setminus(a, b), setminus(b, a)); }
Term succ_inv(Term a) { return Term::apply(Fn::succ_inv, {std::move(a)}); }
Term sinv(Term a, Term b) { return Term::apply(Fn::sinv, {std::move(a), std::move(b)}); }
Term min_term(Term a) { return Term::apply(Fn::min, {std::move(a)}); }
Term max_term(Term a) { return Term::apply(Fn::max, {std::move(a)}); }
Term left_ends(Term a) { return Term::apply(Fn::left, {std::move(a)}); }
Term right_ends(Term a) { return Term::apply(Fn::right, {std::move(a)}); }

// ---------------------------------------------------------------- Formula

struct Formula::Node {
  Kind kind;
  std::vector<Term> terms;
  std::vector<Formula> children;
  std::string var;
};

Formula Formula::truth() { return Formula(std::make_shared<const Node>(Node{Kind::truth, {}, {}, {}})); }
Formula Formula::falsity() {
  return Formula(std::make_shared<const Node>(Node{Kind::falsity, {}, {}, {}}));
}

Formula Formula::eq(Term a, Term b) {
  return Formula(std::make_shared<const Node>(Node{Kind::eq, {std::move(a), std::move(b)}, {}, {}}));
}

Formula Formula::subset(Term a, Term b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::subset, {std::move(a), std::move(b)}, {}, {}}));
}

Formula Formula::lt_exists(Term a, Term b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::lt_exists, {std::move(a), std::move(b)}, {}, {}}));
}

Formula Formula::atom(Term t) {
  return Formula(std::make_shared<const Node>(Node{Kind::atom, {std::move(t)}, {}, {}}));
}

Formula Formula::negate(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::not_, {}, {std::move(f)}, {}}));
}

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  assert(kind == Kind::and_ || kind == Kind::or_ || kind == Kind::implies || kind == Kind::iff);
  return Formula(std::make_shared<const Node>(Node{kind, {}, {std::move(a), std::move(b)}, {}}));
}

Formula Formula::quantifier(Kind kind, std::string var, Formula body) {
  assert(kind == Kind::exists || kind == Kind::forall);
  return Formula(std::make_shared<const Node>(Node{kind, {}, {std::move(body)}, std::move(var)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_atomic() const {
  switch (kind()) {
    case Kind::truth:
    case Kind::falsity:
    case Kind::eq:
    case Kind::subset:
    case Kind::lt_exists:
    case Kind::atom:
      return true;
    default:
      return false;
  }
}

bool Formula::is_quantifier() const { return kind() == Kind::exists || kind() == Kind::forall; }

bool Formula::is_binary() const {
  return kind() == Kind::and_ || kind() == Kind::or_ || kind() == Kind::implies ||
         kind() == Kind::iff;
}

std::span<const Term> Formula::terms() const { return node_->terms; }
std::span<const Formula> Formula::children() const { return node_->children; }

const std::string& Formula::bound_var() const {
  assert(is_quantifier());
  return node_->var;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_quantifier() && a.bound_var() != b.bound_var()) return false;
  return std::equal(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end()) &&
         std::equal(a.children().begin(), a.children().end(), b.children().begin(),
                    b.children().end());
}

Formula eq(Term a, Term b) { return Formula::eq(std::move(a), std::move(b)); }
Formula neq(Term a, Term b) { return lnot(eq(std::move(a), std::move(b))); }
Formula subset(Term a, Term b) { return Formula::subset(std::move(a), std::move(b)); }
Formula lt_exists(Term a, Term b) { return Formula::lt_exists(std::move(a), std::move(b)); }
Formula at(Term t) { return Formula::atom(std::move(t)); }
Formula lnot(Formula f) { return Formula::negate(std::move(f)); }
Formula land(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::and_, std::move(a), std::move(b));
}
Formula lor(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::or_, std::move(a), std::move(b));
}
Formula implies(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::implies, std::move(a), std::move(b));
}
Formula iff(Formula a, Formula b) {
  return Formula::binary(Formula::Kind::iff, std::move(a), std::move(b));
}
Formula exists(std::string var, Formula body) {
  return Formula::quantifier(Formula::Kind::exists, std::move(var), std::move(body));
}
Formula forall(std::string var, Formula body) {
  return Formula::quantifier(Formula::Kind::forall, std::move(var), std::move(body));
}

Formula conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::truth();
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = land(*it, acc);
  return acc;
}

Formula disjunction(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::falsity();
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = lor(*it, acc);
  return acc;
}

Formula exists_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, body);
  return body;
}

// ---------------------------------------------------------------- printing

namespace {

void print_to(std::string& out, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::var:
      out += t.name();
      return;
    case Term::Kind::constant:
      out += keyword(t.constant_value());
      return;
    case Term::Kind::apply:
      out += '(';
      out += keyword(t.fn());
      for (const auto& a : t.args()) {
        out += ' ';
        print_to(out, a);
      }
      out += ')';
      return;
  }
}

std::string_view head(Formula::Kind k) {
  using K = Formula::Kind;
  switch (k) {
    case K::eq: return "=";
    case K::subset: return "subset";
    case K::lt_exists: return "ltE";
    case K::atom: return "at";
    case K::not_: return "not";
    case K::and_: return "and";
    case K::or_: return "or";
    case K::implies: return "implies";
    case K::iff: return "iff";
    case K::exists: return "exists";
    case K::forall: return "forall";
    case K::truth: return "true";
    case K::falsity: return "false";
  }
  return "?";
}

void print_to(std::string& out, const Formula& f) {
  if (f.kind() == Formula::Kind::truth || f.kind() == Formula::Kind::falsity) {
    out += head(f.kind());
    return;
  }
  out += '(';
  out += head(f.kind());
  if (f.is_quantifier()) {
    out += ' ';
    out += f.bound_var();
  }
  for (const auto& t : f.terms()) {
    out += ' ';
    print_to(out, t);
  }
  for (const auto& c : f.children()) {
    out += ' ';
    print_to(out, c);
  }
  out += ')';
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_to(out, t);
  return out;
}

std::string print(const Formula& f) {
  std::string out;
  print_to(out, f);
  return out;
}

}  // namespace mcdlo::syntax
