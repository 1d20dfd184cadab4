#include "mcdlo/generators.hpp"

#include "mcdlo/transform.hpp"

namespace mcdlo::generators {

using syntax::Const;
using syntax::Fn;
using K = Formula::Kind;

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Const> constants_of(const GenOptions& o) {
  std::vector<Const> out;
  if (!o.constants) return out;
  if (!o.constant_set.empty()) return o.constant_set;
  for (Const c : {Const::bot, Const::zero, Const::zerostar, Const::top}) {
    if (syntax::allows(o.sig, c)) out.push_back(c);
  }
  return out;
}

std::vector<Fn> functions_of(const GenOptions& o) {
  std::vector<Fn> out;
  for (Fn f : {Fn::union_, Fn::inter, Fn::setminus, Fn::succ_inv, Fn::sinv, Fn::min, Fn::max, Fn::left, Fn::right}) {
    if (syntax::allows(o.sig, f)) out.push_back(f);
  }
  return out;
}

std::vector<K> relations_of(const GenOptions& o) {
  if (!o.relations.empty()) return o.relations;
  std::vector<K> out;
  for (K k : {K::eq, K::subset, K::lt_exists, K::atom}) {
    if (syntax::allows(o.sig, k)) out.push_back(k);
  }
  return out;
}

Formula formula_at(Rng& rng, const GenOptions& o, std::vector<std::string>& vars, int depth) {
  if (depth <= 0 || coin(rng, 0.25)) return random_atom(rng, o, vars);
  const int choice = std::uniform_int_distribution<int>(0, o.quantifiers ? 4 : 2)(rng);
  switch (choice) {
    case 0: return syntax::lnot(formula_at(rng, o, vars, depth - 1));
    case 1: return syntax::land(formula_at(rng, o, vars, depth - 1), formula_at(rng, o, vars, depth - 1));
    case 2: return syntax::lor(formula_at(rng, o, vars, depth - 1), formula_at(rng, o, vars, depth - 1));
    default: {
      const std::string v = "B" + std::to_string(depth);
      vars.push_back(v);
      Formula body = formula_at(rng, o, vars, depth - 1);
      vars.pop_back();
      return choice == 3 ? syntax::exists(v, body) : syntax::forall(v, body);
    }
  }
}

}  // namespace

Term random_term(Rng& rng, const GenOptions& o, const std::vector<std::string>& vars, int depth) {
  const auto fns = functions_of(o);
  if (depth > 0 && !fns.empty() && coin(rng, 0.5)) {
    const Fn f = pick(rng, fns);
    std::vector<Term> args;
    for (int i = 0; i < syntax::arity(f); ++i) args.push_back(random_term(rng, o, vars, depth - 1));
    return Term::apply(f, std::move(args));
  }
  const auto consts = constants_of(o);
  if (!consts.empty() && (vars.empty() || coin(rng, 0.2))) return Term::constant(pick(rng, consts));
  return Term::var(pick(rng, vars));
}

Formula random_atom(Rng& rng, const GenOptions& o, const std::vector<std::string>& vars) {
  const K k = pick(rng, relations_of(o));
  auto t = [&] { return random_term(rng, o, vars, o.term_depth); };
  switch (k) {
    case K::atom: return syntax::at(t());
    case K::subset: {
      Term a = t();
      return syntax::subset(a, t());
    }
    case K::lt_exists: {
      Term a = t();
      return syntax::lt_exists(a, t());
    }
    default: {
      Term a = t();
      return syntax::eq(a, t());
    }
  }
}

Formula random_formula(Rng& rng, const GenOptions& o) {
  std::vector<std::string> vars = o.vars;
  return formula_at(rng, o, vars, o.depth);
}

GenOptions qf_wso_options() {
  GenOptions o;
  o.sig = Signature::wso().with_extensions();
  o.vars = {"A", "B"};
  o.term_depth = 2;
  o.depth = 3;
  o.quantifiers = false;
  return o;
}

GenOptions qf_lci_options() {
  GenOptions o;
  o.sig = Signature::lci();
  o.vars = {"A", "B"};
  o.term_depth = 1;
  o.depth = 2;
  o.quantifiers = false;
  return o;
}

GenOptions power_options() {
  GenOptions o;
  o.sig = Signature::mo().with_extensions();
  o.vars = {"Y"};
  o.term_depth = 0;
  o.depth = 2;
  o.relations = {K::eq, K::subset, K::lt_exists, K::atom};
  o.constant_set = {Const::bot, Const::zero};
  return o;
}

}  // namespace mcdlo::generators
