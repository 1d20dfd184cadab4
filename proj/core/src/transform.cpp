#include "mcdlo/transform.hpp"

#include <algorithm>

#include "mcdlo/error.hpp"

namespace mcdlo::syntax {

bool allows(Signature sig, Const c) {
  switch (sig.tag) {
    case SigTag::mo:
      return sig.extended && (c == Const::bot || c == Const::zero || c == Const::top);
    case SigTag::msofin:
      return c != Const::top || sig.extended;
    case SigTag::wso:
    case SigTag::lci:
      return c == Const::bot || c == Const::zero;
  }
  return false;
}

bool allows(Signature sig, Fn fn) {
  switch (sig.tag) {
    case SigTag::mo:
      return sig.extended && (fn == Fn::union_ || fn == Fn::inter || fn == Fn::setminus);
    case SigTag::msofin:
      return fn == Fn::union_ || fn == Fn::inter || fn == Fn::succ_inv ||
             (sig.extended && fn == Fn::setminus);
    case SigTag::wso:
      return fn == Fn::union_ || fn == Fn::inter || fn == Fn::min || fn == Fn::max ||
             fn == Fn::sinv || (sig.extended && fn == Fn::setminus);
    case SigTag::lci:
      return fn == Fn::union_ || fn == Fn::inter || fn == Fn::min || fn == Fn::max ||
             fn == Fn::left || fn == Fn::right;
  }
  return false;
}

bool allows(Signature sig, Formula::Kind relation) {
  switch (relation) {
    case Formula::Kind::subset:
    case Formula::Kind::lt_exists:
      return sig.tag == SigTag::mo;
    default:
      return true;
  }
}

void check_signature(const Term& t, Signature sig) {
  const auto where = std::string(" is not in signature ") + std::string(to_string(sig.tag)) +
                     (sig.extended ? "+ext" : "");
  switch (t.kind()) {
    case Term::Kind::var:
      return;
    case Term::Kind::constant:
      if (!allows(sig, t.constant_value())) {
        throw Error("constant '" + std::string(keyword(t.constant_value())) + "'" + where);
      }
      return;
    case Term::Kind::apply:
      if (!allows(sig, t.fn())) {
        throw Error("function '" + std::string(keyword(t.fn())) + "'" + where);
      }
      for (const auto& a : t.args()) check_signature(a, sig);
      return;
  }
}

void check_signature(const Formula& f, Signature sig) {
  if (!allows(sig, f.kind())) {
    throw Error("relation in '" + print(f) + "' is not in signature " +
                std::string(to_string(sig.tag)));
  }
  for (const auto& t : f.terms()) check_signature(t, sig);
  for (const auto& c : f.children()) check_signature(c, sig);
}

namespace {

void collect(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect(a, out);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  for (const auto& t : f.terms()) {
    std::set<std::string> vs;
    collect(t, vs);
    for (const auto& v : vs) {
      if (!bound.contains(v)) out.insert(v);
    }
  }
  if (f.is_quantifier()) {
    const bool fresh = bound.insert(f.bound_var()).second;
    collect_free(f.child(), bound, out);
    if (fresh) bound.erase(f.bound_var());
    return;
  }
  for (const auto& c : f.children()) collect_free(c, bound, out);
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) collect(t, out);
  if (f.is_quantifier()) out.insert(f.bound_var());
  for (const auto& c : f.children()) collect_all(c, out);
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    auto candidate = base + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

Term substitute(const Term& t, const std::map<std::string, Term>& sub) {
  switch (t.kind()) {
    case Term::Kind::var: {
      auto it = sub.find(t.name());
      return it == sub.end() ? t : it->second;
    }
    case Term::Kind::constant:
      return t;
    case Term::Kind::apply: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, sub));
      return Term::apply(t.fn(), std::move(args));
    }
  }
  return t;
}

namespace {

Formula rebuild(const Formula& f, std::vector<Term> terms, std::vector<Formula> kids,
                const std::string& var) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::truth: return Formula::truth();
    case K::falsity: return Formula::falsity();
    case K::eq: return Formula::eq(terms[0], terms[1]);
    case K::subset: return Formula::subset(terms[0], terms[1]);
    case K::lt_exists: return Formula::lt_exists(terms[0], terms[1]);
    case K::atom: return Formula::atom(terms[0]);
    case K::not_: return Formula::negate(kids[0]);
    case K::and_:
    case K::or_:
    case K::implies:
    case K::iff:
      return Formula::binary(f.kind(), kids[0], kids[1]);
    case K::exists:
    case K::forall:
      return Formula::quantifier(f.kind(), var, kids[0]);
  }
  return f;
}

Formula substitute_impl(const Formula& f, std::map<std::string, Term> sub) {
  if (sub.empty()) return f;
  if (f.is_quantifier()) {
    sub.erase(f.bound_var());
    if (sub.empty()) return f;
    std::set<std::string> incoming;
    const auto body_free = free_vars(f.child());
    for (auto it = sub.begin(); it != sub.end();) {
      if (!body_free.contains(it->first)) {
        it = sub.erase(it);
      } else {
        collect(it->second, incoming);
        ++it;
      }
    }
    if (sub.empty()) return f;
    std::string bound = f.bound_var();
    if (incoming.contains(bound)) {
      auto avoid = all_vars(f.child());
      avoid.insert(incoming.begin(), incoming.end());
      for (const auto& [k, v] : sub) avoid.insert(k);
      std::string renamed = fresh_name(bound, avoid);
      sub.emplace(bound, Term::var(renamed));
      bound = renamed;
    }
    return Formula::quantifier(f.kind(), bound, substitute_impl(f.child(), sub));
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back(substitute(t, sub));
  std::vector<Formula> kids;
  for (const auto& c : f.children()) kids.push_back(substitute_impl(c, sub));
  return rebuild(f, std::move(terms), std::move(kids), {});
}

}  // namespace

Formula substitute(const Formula& f, const std::map<std::string, Term>& sub) {
  return substitute_impl(f, sub);
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  return substitute_impl(f, {{var, t}});
}

Formula rename_free(const Formula& f, const std::map<std::string, std::string>& names) {
  std::map<std::string, Term> sub;
  for (const auto& [from, to] : names) {
    if (from != to) sub.emplace(from, Term::var(to));
  }
  return substitute_impl(f, std::move(sub));
}

int function_symbols(const Term& t) {
  if (!t.is_apply()) return 0;
  int n = 1;
  for (const auto& a : t.args()) n += function_symbols(a);
  return n;
}

int quantifier_depth(const Formula& f) {
  int d = 0;
  for (const auto& c : f.children()) d = std::max(d, quantifier_depth(c));
  return f.is_quantifier() ? d + 1 : d;
}

bool is_quantifier_free(const Formula& f) { return quantifier_depth(f) == 0; }

// ---------------------------------------------------------------- unnesting

namespace {

struct Hoister {
  std::set<std::string>& avoid;
  std::vector<std::string> names;
  std::vector<Formula> definitions;

  // Replaces t by a fresh variable whose definition is itself unnested.
  Term name(const Term& t) {
    Term flat = flatten_args(t);
    auto z = fresh_name("Z", avoid);
    avoid.insert(z);
    names.push_back(z);
    definitions.push_back(Formula::eq(Term::var(z), flat));
    return Term::var(z);
  }

  // Keeps the head symbol of t and names every applied argument.
  Term flatten_args(const Term& t) {
    if (!t.is_apply()) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(a.is_apply() ? name(a) : a);
    return Term::apply(t.fn(), std::move(args));
  }
};

bool flat_term(const Term& t) {
  if (!t.is_apply()) return true;
  return std::none_of(t.args().begin(), t.args().end(), [](const Term& a) { return a.is_apply(); });
}

Formula unnest_atom(const Formula& f, std::set<std::string>& avoid) {
  using K = Formula::Kind;
  Hoister h{avoid, {}, {}};
  Formula atom = f;
  if (f.kind() == K::eq) {
    const Term& a = f.term(0);
    const Term& b = f.term(1);
    if (function_symbols(a) + function_symbols(b) <= 1) return f;
    Term na = h.flatten_args(a);
    Term nb = b.is_apply() && a.is_apply() ? h.name(b) : h.flatten_args(b);
    atom = Formula::eq(na, nb);
  } else if (f.kind() == K::subset || f.kind() == K::lt_exists || f.kind() == K::atom) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) terms.push_back(t.is_apply() ? h.name(t) : t);
    if (h.names.empty()) return f;
    atom = rebuild(f, std::move(terms), {}, {});
  } else {
    return f;
  }
  auto parts = h.definitions;
  parts.push_back(atom);
  return exists_all(h.names, conjunction(std::move(parts)));
}

Formula unnest_impl(const Formula& f, std::set<std::string>& avoid) {
  if (f.is_atomic()) return unnest_atom(f, avoid);
  std::vector<Formula> kids;
  for (const auto& c : f.children()) kids.push_back(unnest_impl(c, avoid));
  return rebuild(f, {}, std::move(kids), f.is_quantifier() ? f.bound_var() : std::string{});
}

}  // namespace

Formula unnest(const Formula& f) {
  auto avoid = all_vars(f);
  return unnest_impl(f, avoid);
}

bool is_unnested(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::eq: {
      const auto& a = f.term(0);
      const auto& b = f.term(1);
      return function_symbols(a) + function_symbols(b) <= 1 && flat_term(a) && flat_term(b);
    }
    case K::subset:
    case K::lt_exists:
    case K::atom:
      return std::none_of(f.terms().begin(), f.terms().end(),
                          [](const Term& t) { return t.is_apply(); });
    default:
      return std::all_of(f.children().begin(), f.children().end(),
                         [](const Formula& c) { return is_unnested(c); });
  }
}

// ---------------------------------------------------------------- classifiers

namespace {

bool term_uses(const Term& t, Fn fn) {
  if (!t.is_apply()) return false;
  if (t.fn() == fn) return true;
  return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return term_uses(a, fn); });
}

bool existential_at(const Formula& f, bool positive) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::not_:
      return existential_at(f.child(), !positive);
    case K::implies:
      return existential_at(f.child(0), !positive) && existential_at(f.child(1), positive);
    case K::iff:
      // Both polarities occur; only quantifier-free sides are safe.
      return is_quantifier_free(f);
    case K::exists:
      return positive && existential_at(f.child(), positive);
    case K::forall:
      return !positive && existential_at(f.child(), positive);
    default:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return existential_at(c, positive); });
  }
}

}  // namespace

bool is_positive_existential(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::not_:
    case K::implies:
    case K::iff:
    case K::forall:
      return false;
    default:
      break;
  }
  for (const auto& t : f.terms()) {
    if (term_uses(t, Fn::setminus)) return false;
  }
  return std::all_of(f.children().begin(), f.children().end(),
                     [](const Formula& c) { return is_positive_existential(c); });
}

bool is_existential(const Formula& f) { return existential_at(f, true); }

}  // namespace mcdlo::syntax
