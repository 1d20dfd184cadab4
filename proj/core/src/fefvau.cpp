#include "mcdlo/fefvau.hpp"

#include <algorithm>

#include "mcdlo/error.hpp"
#include "mcdlo/eval.hpp"
#include "mcdlo/transform.hpp"

namespace mcdlo::fefvau {

using syntax::Const;
using FK = Formula::Kind;
namespace sx = syntax;

namespace {

std::string support_name(std::size_t j) { return "Y" + std::to_string(j + 1); }

Term complement(const Term& a) { return sx::setminus(sx::top(), a); }

// Merges components that are syntactically identical.
AcceptableSequence deduplicate(AcceptableSequence z) {
  for (std::size_t j = 0; j < z.components.size(); ++j) {
    for (std::size_t k = j + 1; k < z.components.size();) {
      if (z.components[k] == z.components[j]) {
        z.index = sx::substitute(z.index, z.supports[k], sx::var(z.supports[j]));
        z.components.erase(z.components.begin() + static_cast<std::ptrdiff_t>(k));
        z.supports.erase(z.supports.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        ++k;
      }
    }
  }
  return z;
}

std::set<std::string> index_avoid(const AcceptableSequence& z) {
  auto avoid = sx::all_vars(z.index);
  avoid.insert(z.supports.begin(), z.supports.end());
  return avoid;
}

AcceptableSequence make_sequence(Formula index, std::vector<Formula> components, std::vector<std::string> vars) {
  AcceptableSequence z;
  z.index = std::move(index);
  z.components = std::move(components);
  for (std::size_t j = 0; j < z.components.size(); ++j) z.supports.push_back(support_name(j));
  z.vars = std::move(vars);
  return z;
}

void check_cap(std::size_t m, std::size_t cap) {
  if (m > cap) {
    throw Error("acceptable sequence would need " + std::to_string(m) + " components (cap " +
                std::to_string(cap) + ")");
  }
}

}  // namespace

std::string print(const AcceptableSequence& z) {
  std::string out = "[" + sx::print(z.index) + ";";
  for (std::size_t j = 0; j < z.size(); ++j) {
    out += " " + z.supports[j] + ":" + sx::print(z.components[j]);
  }
  return out + "]";
}

nlohmann::json to_json(const AcceptableSequence& z) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : z.components) comps.push_back(sx::print(c));
  return {{"index", sx::print(z.index)}, {"components", comps}, {"supports", z.supports}, {"vars", z.vars}};
}

AcceptableSequence canonical(AcceptableSequence z) {
  std::map<std::string, std::string> names;
  for (std::size_t j = 0; j < z.supports.size(); ++j) names[z.supports[j]] = support_name(j);
  z.index = sx::rename_free(z.index, names);
  for (std::size_t j = 0; j < z.supports.size(); ++j) z.supports[j] = support_name(j);
  return z;
}

// ---------------------------------------------------------------- atomic sequences

AtomicSequences atomic_sequences() {
  const Term x1 = sx::var("X1");
  const Term x2 = sx::var("X2");
  const Term y1 = sx::var("Y1");
  const Term y2 = sx::var("Y2");
  const Term y3 = sx::var("Y3");
  AtomicSequences s;
  s.subset = make_sequence(sx::eq(y1, sx::top()), {sx::subset(x1, x2)}, {"X1", "X2"});
  s.lt_exists = make_sequence(sx::lor(sx::neq(y1, sx::bot()), sx::lt_exists(y2, y3)),
                              {sx::lt_exists(x1, x2), sx::neq(x1, sx::bot()), sx::neq(x2, sx::bot())},
                              {"X1", "X2"});
  s.constant = [x1, y1, y2](const Term& a) {
    return make_sequence(sx::land(sx::eq(y1, a), sx::eq(y2, complement(a))),
                         {sx::eq(x1, sx::zero()), sx::eq(x1, sx::bot())}, {"X1"});
  };
  return s;
}

AcceptableSequence equality_sequence() {
  return make_sequence(sx::eq(sx::var("Y1"), sx::top()), {sx::eq(sx::var("X1"), sx::var("X2"))}, {"X1", "X2"});
}

AcceptableSequence atom_sequence() {
  const Term x1 = sx::var("X1");
  return make_sequence(sx::land(sx::at(sx::var("Y1")), sx::eq(sx::var("Y2"), sx::top())),
                       {sx::at(x1), sx::lor(sx::at(x1), sx::eq(x1, sx::bot()))}, {"X1"});
}

// ---------------------------------------------------------------- power formulas

struct PowerFormula::Node {
  Kind kind;
  AcceptableSequence zeta;
  std::vector<Term> args;
  std::vector<PowerFormula> kids;
  std::string var;
};

PowerFormula PowerFormula::relation(AcceptableSequence zeta, std::vector<Term> args) {
  if (args.size() != zeta.vars.size()) throw Error("relation arity mismatch");
  for (const auto& a : args) {
    if (a.is_apply() || (a.is_constant() && a.constant_value() != Const::bot &&
                         a.constant_value() != Const::zero)) {
      throw Error("power relation arguments must be variables, bot or zero: " + sx::print(a));
    }
  }
  return PowerFormula(std::make_shared<const Node>(Node{Kind::rel, std::move(zeta), std::move(args), {}, {}}));
}

PowerFormula PowerFormula::negate(PowerFormula f) {
  return PowerFormula(std::make_shared<const Node>(Node{Kind::not_, {}, {}, {std::move(f)}, {}}));
}

PowerFormula PowerFormula::conj(PowerFormula a, PowerFormula b) {
  return PowerFormula(std::make_shared<const Node>(Node{Kind::and_, {}, {}, {std::move(a), std::move(b)}, {}}));
}

PowerFormula PowerFormula::disj(PowerFormula a, PowerFormula b) {
  return PowerFormula(std::make_shared<const Node>(Node{Kind::or_, {}, {}, {std::move(a), std::move(b)}, {}}));
}

PowerFormula PowerFormula::exists(std::string var, PowerFormula body) {
  return PowerFormula(
      std::make_shared<const Node>(Node{Kind::exists, {}, {}, {std::move(body)}, std::move(var)}));
}

PowerFormula PowerFormula::forall(std::string var, PowerFormula body) {
  return PowerFormula(
      std::make_shared<const Node>(Node{Kind::forall, {}, {}, {std::move(body)}, std::move(var)}));
}

PowerFormula::Kind PowerFormula::kind() const { return node_->kind; }
const AcceptableSequence& PowerFormula::sequence() const { return node_->zeta; }
const std::vector<Term>& PowerFormula::args() const { return node_->args; }
const PowerFormula& PowerFormula::child(std::size_t i) const { return node_->kids.at(i); }
const std::string& PowerFormula::bound_var() const { return node_->var; }

std::string print(const PowerFormula& f) {
  using PK = PowerFormula::Kind;
  switch (f.kind()) {
    case PK::rel: {
      std::string out = "(rel " + print(f.sequence());
      for (const auto& a : f.args()) out += " " + sx::print(a);
      return out + ")";
    }
    case PK::not_: return "(not " + print(f.child()) + ")";
    case PK::and_: return "(and " + print(f.child(0)) + " " + print(f.child(1)) + ")";
    case PK::or_: return "(or " + print(f.child(0)) + " " + print(f.child(1)) + ")";
    case PK::exists: return "(exists " + f.bound_var() + " " + print(f.child()) + ")";
    case PK::forall: return "(forall " + f.bound_var() + " " + print(f.child()) + ")";
  }
  return "?";
}

std::set<std::string> free_vars(const PowerFormula& f) {
  using PK = PowerFormula::Kind;
  switch (f.kind()) {
    case PK::rel: {
      std::set<std::string> out;
      for (const auto& a : f.args()) {
        if (a.is_var()) out.insert(a.name());
      }
      return out;
    }
    case PK::not_: return free_vars(f.child());
    case PK::and_:
    case PK::or_: {
      auto out = free_vars(f.child(0));
      auto rest = free_vars(f.child(1));
      out.insert(rest.begin(), rest.end());
      return out;
    }
    case PK::exists:
    case PK::forall: {
      auto out = free_vars(f.child());
      out.erase(f.bound_var());
      return out;
    }
  }
  return {};
}

int quantifier_depth(const PowerFormula& f) {
  using PK = PowerFormula::Kind;
  switch (f.kind()) {
    case PK::rel: return 0;
    case PK::not_: return quantifier_depth(f.child());
    case PK::and_:
    case PK::or_: return std::max(quantifier_depth(f.child(0)), quantifier_depth(f.child(1)));
    default: return 1 + quantifier_depth(f.child());
  }
}

PowerFormula to_power(const Formula& f) {
  static const AtomicSequences seqs = atomic_sequences();
  auto terms = [&](const Formula& g) { return std::vector<Term>(g.terms().begin(), g.terms().end()); };
  switch (f.kind()) {
    case FK::truth: return PowerFormula::relation(make_sequence(Formula::truth(), {}, {}), {});
    case FK::falsity: return PowerFormula::relation(make_sequence(Formula::falsity(), {}, {}), {});
    case FK::eq: return PowerFormula::relation(equality_sequence(), terms(f));
    case FK::subset: return PowerFormula::relation(seqs.subset, terms(f));
    case FK::lt_exists: return PowerFormula::relation(seqs.lt_exists, terms(f));
    case FK::atom: return PowerFormula::relation(atom_sequence(), terms(f));
    case FK::not_: return PowerFormula::negate(to_power(f.child()));
    case FK::and_: return PowerFormula::conj(to_power(f.child(0)), to_power(f.child(1)));
    case FK::or_: return PowerFormula::disj(to_power(f.child(0)), to_power(f.child(1)));
    case FK::implies:
      return PowerFormula::disj(PowerFormula::negate(to_power(f.child(0))), to_power(f.child(1)));
    case FK::iff: {
      const auto a = to_power(f.child(0));
      const auto b = to_power(f.child(1));
      return PowerFormula::conj(PowerFormula::disj(PowerFormula::negate(a), b),
                                PowerFormula::disj(a, PowerFormula::negate(b)));
    }
    case FK::exists: return PowerFormula::exists(f.bound_var(), to_power(f.child()));
    case FK::forall: return PowerFormula::forall(f.bound_var(), to_power(f.child()));
  }
  throw Error("unsupported formula");
}

// ---------------------------------------------------------------- reduction

namespace {

// A relation applied to its arguments.  The constant zero of the power is 0
// at the least index point and bot elsewhere, so a component mentioning it
// splits into the two cases, recombined in the index by the constant zero.
AcceptableSequence reduce_relation(const PowerFormula& f) {
  const AcceptableSequence& zeta = f.sequence();
  std::map<std::string, Term> sub;
  std::set<std::string> zero_positions;
  for (std::size_t l = 0; l < zeta.vars.size(); ++l) {
    const Term& a = f.args()[l];
    if (a.is_constant() && a.constant_value() == Const::zero) {
      zero_positions.insert(zeta.vars[l]);
    } else {
      sub.emplace(zeta.vars[l], a);
    }
  }
  AcceptableSequence out;
  out.index = zeta.index;
  auto avoid = index_avoid(zeta);
  for (std::size_t j = 0; j < zeta.size(); ++j) {
    const auto fv = sx::free_vars(zeta.components[j]);
    const bool split = std::any_of(zero_positions.begin(), zero_positions.end(),
                                   [&](const std::string& v) { return fv.contains(v); });
    if (!split) {
      out.components.push_back(sx::substitute(zeta.components[j], sub));
      out.supports.push_back(zeta.supports[j]);
      continue;
    }
    auto at_zero = sub;
    auto at_bot = sub;
    for (const auto& v : zero_positions) {
      at_zero.emplace(v, sx::zero());
      at_bot.emplace(v, sx::bot());
    }
    const std::string y0 = sx::fresh_name("S", avoid);
    avoid.insert(y0);
    const std::string yb = sx::fresh_name("S", avoid);
    avoid.insert(yb);
    out.components.push_back(sx::substitute(zeta.components[j], at_zero));
    out.supports.push_back(y0);
    out.components.push_back(sx::substitute(zeta.components[j], at_bot));
    out.supports.push_back(yb);
    const Term merged = sx::unite(sx::meet(sx::zero(), sx::var(y0)), sx::meet(complement(sx::zero()), sx::var(yb)));
    out.index = sx::substitute(out.index, zeta.supports[j], merged);
  }
  return out;
}

AcceptableSequence combine(FK kind, AcceptableSequence a, AcceptableSequence b) {
  a = canonical(std::move(a));
  b = canonical(std::move(b));
  std::map<std::string, std::string> shift;
  for (std::size_t j = 0; j < b.size(); ++j) shift[b.supports[j]] = support_name(a.size() + j);
  AcceptableSequence out;
  const Formula bi = sx::rename_free(b.index, shift);
  out.index = kind == FK::and_ ? sx::land(a.index, bi) : sx::lor(a.index, bi);
  out.components = a.components;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  for (std::size_t j = 0; j < out.components.size(); ++j) out.supports.push_back(support_name(j));
  return out;
}

// For every pattern sigma of truth values of the components mentioning x, a
// new component eta_sigma says some x realises the pattern.  The index
// formula guesses the new supports U_j of the old components and checks that
// each index point takes a pattern whose eta holds there.
AcceptableSequence eliminate_exists(const std::string& x, AcceptableSequence z, std::size_t cap) {
  z = canonical(std::move(z));
  std::vector<std::size_t> J;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (sx::free_vars(z.components[j]).contains(x)) J.push_back(j);
  }
  if (J.empty()) return z;
  if (J.size() >= 20) check_cap(std::size_t{1} << 20, cap);
  const std::size_t patterns = std::size_t{1} << J.size();
  check_cap(z.size() - J.size() + patterns, cap);

  auto avoid = index_avoid(z);
  auto fresh = [&](const std::string& base) {
    auto n = sx::fresh_name(base, avoid);
    avoid.insert(n);
    return n;
  };

  AcceptableSequence out;
  std::map<std::string, std::string> to_u;
  std::vector<std::string> u_names;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (std::find(J.begin(), J.end(), j) == J.end()) {
      out.components.push_back(z.components[j]);
      out.supports.push_back(z.supports[j]);
    } else {
      u_names.push_back(fresh("U"));
      to_u[z.supports[j]] = u_names.back();
    }
  }
  const std::string atom = fresh("Z");
  const Term zt = sx::var(atom);
  std::vector<Formula> cases;
  for (std::size_t sigma = 0; sigma < patterns; ++sigma) {
    std::vector<Formula> parts;
    std::vector<Formula> membership;
    for (std::size_t b = 0; b < J.size(); ++b) {
      const bool in = (sigma >> b) & 1U;
      const Formula& theta = z.components[J[b]];
      parts.push_back(in ? theta : sx::lnot(theta));
      const Formula mem = sx::subset(zt, sx::var(u_names[b]));
      membership.push_back(in ? mem : sx::lnot(mem));
    }
    const std::string h = fresh("H");
    out.components.push_back(sx::exists(x, sx::conjunction(parts)));
    out.supports.push_back(h);
    membership.insert(membership.begin(), sx::subset(zt, sx::var(h)));
    cases.push_back(sx::conjunction(membership));
  }
  const Formula compat = sx::forall(atom, sx::implies(sx::at(zt), sx::disjunction(cases)));
  out.index = sx::exists_all(u_names, sx::land(compat, sx::rename_free(z.index, to_u)));
  return out;
}

AcceptableSequence reduce(const PowerFormula& f, std::size_t cap) {
  using PK = PowerFormula::Kind;
  AcceptableSequence out;
  switch (f.kind()) {
    case PK::rel:
      out = reduce_relation(f);
      break;
    case PK::not_:
      out = reduce(f.child(), cap);
      out.index = sx::lnot(out.index);
      break;
    case PK::and_:
    case PK::or_:
      out = combine(f.kind() == PK::and_ ? FK::and_ : FK::or_, reduce(f.child(0), cap), reduce(f.child(1), cap));
      break;
    case PK::exists:
      out = eliminate_exists(f.bound_var(), reduce(f.child(), cap), cap);
      break;
    case PK::forall: {
      AcceptableSequence inner = reduce(f.child(), cap);
      inner.index = sx::lnot(inner.index);
      out = eliminate_exists(f.bound_var(), std::move(inner), cap);
      out.index = sx::lnot(out.index);
      break;
    }
  }
  out = canonical(deduplicate(std::move(out)));
  check_cap(out.size(), cap);
  return out;
}

}  // namespace

AcceptableSequence fv_reduce(const PowerFormula& f, std::size_t cap) {
  AcceptableSequence z = reduce(f, cap);
  const auto fv = free_vars(f);
  z.vars.assign(fv.begin(), fv.end());
  return z;
}

// ---------------------------------------------------------------- finite powers

FinitePower::FinitePower(const models::SetAlgebra& factor, std::size_t index_size)
    : factor_(factor), index_(index_size, models::PointAlgebra::Mode::mso) {}

std::vector<FinitePower::Element> FinitePower::elements() const {
  const auto& uni = factor_.universe();
  std::vector<Element> out{Element{}};
  for (std::size_t i = 0; i < index_size(); ++i) {
    std::vector<Element> next;
    for (const auto& prefix : out) {
      for (Mask m : uni) {
        next.push_back(prefix);
        next.back().push_back(m);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Mask> FinitePower::supports(const AcceptableSequence& z, const std::vector<Element>& tuple) const {
  if (tuple.size() != z.vars.size()) throw Error("tuple does not match the sequence arity");
  std::vector<Mask> out;
  for (const auto& theta : z.components) {
    Mask s = 0;
    for (std::size_t i = 0; i < index_size(); ++i) {
      models::Assignment<Mask> a;
      for (std::size_t l = 0; l < tuple.size(); ++l) a[z.vars[l]] = tuple[l].at(i);
      if (eval::eval_in(factor_, theta, a)) s |= Mask{1} << i;
    }
    out.push_back(s);
  }
  return out;
}

bool FinitePower::holds(const AcceptableSequence& z, const std::map<std::string, Element>& a) const {
  std::vector<Element> tuple;
  for (const auto& v : z.vars) {
    auto it = a.find(v);
    if (it == a.end()) throw EvalError("unbound variable '" + v + "'");
    tuple.push_back(it->second);
  }
  const auto s = supports(z, tuple);
  models::Assignment<Mask> ya;
  for (std::size_t j = 0; j < z.size(); ++j) ya[z.supports[j]] = s[j];
  return eval::eval_in(index_, z.index, ya);
}

FinitePower::Element FinitePower::constant(const Term& t) const {
  Element e(index_size(), 0);
  if (t.constant_value() == Const::zero && index_size() > 0) e[0] = factor_.constant(Const::zero);
  return e;
}

bool FinitePower::holds(const PowerFormula& f, const std::map<std::string, Element>& a) const {
  using PK = PowerFormula::Kind;
  switch (f.kind()) {
    case PK::rel: {
      std::vector<Element> tuple;
      for (const auto& t : f.args()) {
        if (t.is_constant()) {
          tuple.push_back(constant(t));
          continue;
        }
        auto it = a.find(t.name());
        if (it == a.end()) throw EvalError("unbound variable '" + t.name() + "'");
        tuple.push_back(it->second);
      }
      const auto& z = f.sequence();
      const auto s = supports(z, tuple);
      models::Assignment<Mask> ya;
      for (std::size_t j = 0; j < z.size(); ++j) ya[z.supports[j]] = s[j];
      return eval::eval_in(index_, z.index, ya);
    }
    case PK::not_: return !holds(f.child(), a);
    case PK::and_: return holds(f.child(0), a) && holds(f.child(1), a);
    case PK::or_: return holds(f.child(0), a) || holds(f.child(1), a);
    case PK::exists:
    case PK::forall: {
      const bool want = f.kind() == PK::exists;
      auto inner = a;
      for (const auto& e : elements()) {
        inner[f.bound_var()] = e;
        if (holds(f.child(), inner) == want) return want;
      }
      return !want;
    }
  }
  return false;
}

// ---------------------------------------------------------------- W(I) over W<A>

FinSet funky(const std::vector<FinSet>& params) {
  FinSet out{Rat(0)};
  for (const auto& p : params) out = set_union(out, p);
  return out;
}

namespace {

models::IntervalRestriction piece(const FinSet& index, std::size_t t) {
  const auto& p = index.points();
  return models::IntervalRestriction(p[t], t + 1 < p.size() ? std::optional<Rat>(p[t + 1]) : std::nullopt);
}

}  // namespace

PowerElement decompose(const std::vector<FinSet>& params, const FinSet& b) {
  PowerElement e;
  e.index = funky(params);
  for (std::size_t t = 0; t < e.index.size(); ++t) {
    const auto r = piece(e.index, t);
    std::vector<Rat> local;
    for (const auto& p : b.points()) {
      if (r.contains(p)) local.push_back(r.project(p));
    }
    e.components.push_back(FinSet(std::move(local)));
  }
  return e;
}

FinSet reassemble(const PowerElement& e) {
  if (e.components.size() != e.index.size()) throw DomainError("components do not match the index");
  FinSet out;
  for (std::size_t t = 0; t < e.index.size(); ++t) out = set_union(out, piece(e.index, t).embed(e.components[t]));
  return out;
}

SupportResult support(const Formula& theta, const std::vector<std::string>& vars,
                      const std::vector<PowerElement>& tuple, int kmax) {
  if (vars.size() != tuple.size()) throw Error("support: arity mismatch");
  const FinSet index = tuple.empty() ? FinSet{Rat(0)} : tuple.front().index;
  for (const auto& e : tuple) {
    if (!(e.index == index) || e.components.size() != index.size()) {
      throw DomainError("support: power elements over different indices");
    }
  }
  SupportResult out;
  std::vector<Rat> pts;
  for (std::size_t t = 0; t < index.size(); ++t) {
    models::Assignment<FinSet> a;
    for (std::size_t l = 0; l < vars.size(); ++l) a[vars[l]] = tuple[l].components[t];
    const auto rep = eval::stabilize(theta, a, kmax);
    if (rep.verdict) pts.push_back(index.points()[t]);
    out.stabilized = out.stabilized && rep.stabilized;
  }
  out.support = FinSet(std::move(pts));
  return out;
}

SentenceOracle grid_oracle(int extra) {
  auto memo = std::make_shared<std::map<std::string, OracleAnswer>>();
  return [memo, extra](const Formula& s) {
    const std::string key = sx::print(s);
    if (auto it = memo->find(key); it != memo->end()) return it->second;
    const int kmax = std::max(1, sx::quantifier_depth(s) + extra);
    const auto rep = eval::stabilize(s, models::Assignment<FinSet>{}, kmax);
    const OracleAnswer ans{rep.verdict, rep.stabilized};
    memo->emplace(key, ans);
    return ans;
  };
}

nlohmann::json to_json(const ParameterTranslation& t) {
  nlohmann::json sentences = nlohmann::json::array();
  for (const auto& s : t.sentences) sentences.push_back(sx::print(s));
  return {{"psi", sx::print(t.psi)}, {"sentences", sentences}, {"stabilized", t.stabilized}};
}

ParameterTranslation translate_with_parameters(const Formula& f, const std::vector<std::string>& params,
                                               const SentenceOracle& oracle, std::size_t cap) {
  for (const auto& v : sx::free_vars(f)) {
    if (std::find(params.begin(), params.end(), v) == params.end()) {
      throw Error("free variable '" + v + "' is not a parameter");
    }
  }
  if (params.size() > 10) throw Error("too many parameters");
  const AcceptableSequence z = fv_reduce(to_power(f), cap);

  ParameterTranslation out;
  out.params = params;
  const std::size_t n = params.size();
  const std::size_t patterns = std::size_t{1} << n;
  std::map<std::string, Term> expr;
  for (std::size_t j = 0; j < z.size(); ++j) {
    std::vector<Term> regions;
    for (std::size_t p = 0; p < patterns; ++p) {
      std::map<std::string, Term> sub;
      for (std::size_t l = 0; l < n; ++l) sub.emplace(params[l], ((p >> l) & 1U) ? sx::zero() : sx::bot());
      const Formula s = sx::substitute(z.components[j], sub);
      const OracleAnswer ans = oracle(s);
      out.sentences.push_back(s);
      out.answers.push_back(ans);
      out.stabilized = out.stabilized && ans.stabilized;
      if (!ans.verdict) continue;
      std::optional<Term> region;
      for (std::size_t l = 0; l < n; ++l) {
        if ((p >> l) & 1U) region = region ? sx::meet(*region, sx::var(params[l])) : sx::var(params[l]);
      }
      Term r = region ? *region : sx::top();
      for (std::size_t l = 0; l < n; ++l) {
        if (!((p >> l) & 1U)) r = sx::setminus(r, sx::var(params[l]));
      }
      regions.push_back(r);
    }
    Term e = sx::bot();
    if (regions.size() == patterns) {
      e = sx::top();
    } else if (!regions.empty()) {
      e = regions.front();
      for (std::size_t r = 1; r < regions.size(); ++r) e = sx::unite(e, regions[r]);
    }
    expr.emplace(z.supports[j], e);
  }
  out.psi = sx::substitute(z.index, expr);
  return out;
}

bool eval_translation(const ParameterTranslation& t, const std::vector<FinSet>& values) {
  if (values.size() != t.params.size()) throw Error("wrong number of parameter values");
  const models::ElementRestriction r(funky(values));
  models::Assignment<Mask> a;
  for (std::size_t l = 0; l < values.size(); ++l) a[t.params[l]] = r.to_mso(values[l]);
  const models::MsoFin m(r.size(), models::PointAlgebra::kUniverseCap);
  return eval::eval_in(m.algebra(), t.psi, a);
}

}  // namespace mcdlo::fefvau
