#include "mcdlo/eval.hpp"

#include <cstdlib>
#include <map>

#include "mcdlo/error.hpp"
#include "mcdlo/transform.hpp"

namespace mcdlo::eval {

using syntax::Fn;
using syntax::Formula;
using syntax::Term;
using K = Formula::Kind;

namespace {

// ---------------------------------------------------------------- compiled form

struct CTerm {
  enum class Kind { slot, value, apply } kind = Kind::value;
  int slot = -1;
  Mask value = 0;
  Fn fn = Fn::union_;
  std::vector<CTerm> args;
};

enum class Range { all, atoms, submasks, defined };

struct CForm {
  K kind = K::truth;
  std::vector<CTerm> terms;
  std::vector<CForm> kids;
  int slot = -1;
  Range range = Range::all;
  int bound = -1;  // slot whose submasks are enumerated
  std::vector<CTerm> def;  // the single candidate value, for Range::defined
};

class Compiler {
 public:
  explicit Compiler(const models::SetAlgebra& alg) : alg_(alg) {}

  int bind_free(const std::string& name) {
    const int s = next_++;
    scope_[name].push_back(s);
    return s;
  }

  int slots() const { return next_; }

  CForm formula(const Formula& f) {
    CForm c;
    c.kind = f.kind();
    if (f.is_atomic()) {
      for (const auto& t : f.terms()) c.terms.push_back(term(t));
      return c;
    }
    if (!f.is_quantifier()) {
      for (const auto& k : f.children()) c.kids.push_back(formula(k));
      return c;
    }
    const std::string& v = f.bound_var();
    Formula body = f.child();
    detect_guard(f.kind(), v, body, c);
    c.slot = next_++;
    scope_[v].push_back(c.slot);
    c.kids.push_back(formula(body));
    scope_[v].pop_back();
    return c;
  }

 private:
  static bool is_var(const Term& t, const std::string& v) { return t.is_var() && t.name() == v; }

  bool is_at_guard(const Formula& g, const std::string& v) const {
    return g.kind() == K::atom && is_var(g.term(), v);
  }

  // Slot of y when g is "v subset y" with y a variable in scope other than v.
  std::optional<int> subset_guard(const Formula& g, const std::string& v) const {
    if (g.kind() != K::subset || !is_var(g.term(0), v) || !g.term(1).is_var()) return std::nullopt;
    const std::string& y = g.term(1).name();
    if (y == v) return std::nullopt;
    auto it = scope_.find(y);
    if (it == scope_.end() || it->second.empty()) return std::nullopt;
    return it->second.back();
  }

  // "v = t" or "t = v" with v not occurring in t.
  std::optional<Term> definition(const Formula& g, const std::string& v) const {
    if (g.kind() != K::eq) return std::nullopt;
    for (int side = 0; side < 2; ++side) {
      const Term& other = g.term(1 - side);
      if (is_var(g.term(side), v) && !syntax::free_vars(other).contains(v)) return other;
    }
    return std::nullopt;
  }

  bool try_guard(const Formula& g, const std::string& v, CForm& c) {
    if (auto t = definition(g, v)) {
      c.range = Range::defined;
      c.def.push_back(term(*t));
      return true;
    }
    if (is_at_guard(g, v)) {
      c.range = Range::atoms;
      return true;
    }
    if (auto y = subset_guard(g, v)) {
      c.range = Range::submasks;
      c.bound = *y;
      return true;
    }
    return false;
  }

  // Recognises exists v (G and rest) and forall v (G -> rest), also with
  // forall v ((G and r1) -> r2), where G restricts the range of v.
  void detect_guard(K q, const std::string& v, Formula& body, CForm& c) {
    if (q == K::exists && body.kind() == K::and_) {
      if (try_guard(body.child(0), v, c)) body = body.child(1);
      return;
    }
    if (q != K::forall || body.kind() != K::implies) return;
    const Formula& lhs = body.child(0);
    if (try_guard(lhs, v, c)) {
      body = body.child(1);
    } else if (lhs.kind() == K::and_ && try_guard(lhs.child(0), v, c)) {
      body = syntax::implies(lhs.child(1), body.child(1));
    }
  }

  CTerm term(const Term& t) {
    CTerm c;
    switch (t.kind()) {
      case Term::Kind::var: {
        auto it = scope_.find(t.name());
        if (it == scope_.end() || it->second.empty()) {
          throw EvalError("unbound variable '" + t.name() + "'");
        }
        c.kind = CTerm::Kind::slot;
        c.slot = it->second.back();
        break;
      }
      case Term::Kind::constant:
        c.kind = CTerm::Kind::value;
        c.value = alg_.constant(t.constant_value());
        break;
      case Term::Kind::apply:
        c.kind = CTerm::Kind::apply;
        c.fn = t.fn();
        for (const auto& a : t.args()) c.args.push_back(term(a));
        break;
    }
    return c;
  }

  const models::SetAlgebra& alg_;
  std::map<std::string, std::vector<int>> scope_;
  int next_ = 0;
};

class Machine {
 public:
  Machine(const models::SetAlgebra& alg, std::vector<Mask> env) : alg_(alg), env_(std::move(env)) {}

  bool run(const CForm& f) { return eval(f); }

 private:
  Mask term(const CTerm& t) const {
    switch (t.kind) {
      case CTerm::Kind::slot: return env_[static_cast<std::size_t>(t.slot)];
      case CTerm::Kind::value: return t.value;
      case CTerm::Kind::apply: {
        const Mask a = term(t.args[0]);
        const Mask b = t.args.size() > 1 ? term(t.args[1]) : 0;
        return alg_.apply(t.fn, a, b);
      }
    }
    return 0;
  }

  template <class Body>
  bool any_in_range(const CForm& f, Body body) {
    Mask& cell = env_[static_cast<std::size_t>(f.slot)];
    switch (f.range) {
      case Range::all:
        for (Mask m : alg_.universe()) {
          cell = m;
          if (body()) return true;
        }
        return false;
      case Range::atoms:
        for (Mask m : alg_.atoms()) {
          cell = m;
          if (body()) return true;
        }
        return false;
      case Range::defined: {
        const Mask m = term(f.def[0]);
        if (!alg_.in_universe(m)) return false;
        cell = m;
        return body();
      }
      case Range::submasks: {
        const Mask top = env_[static_cast<std::size_t>(f.bound)];
        for (Mask s = top;; s = (s - 1) & top) {
          if (alg_.in_universe(s)) {
            cell = s;
            if (body()) return true;
          }
          if (s == 0) break;
        }
        return false;
      }
    }
    return false;
  }

  bool eval(const CForm& f) {
    switch (f.kind) {
      case K::truth: return true;
      case K::falsity: return false;
      case K::eq: return term(f.terms[0]) == term(f.terms[1]);
      case K::subset: return alg_.subset(term(f.terms[0]), term(f.terms[1]));
      case K::lt_exists: return alg_.lt_exists(term(f.terms[0]), term(f.terms[1]));
      case K::atom: return alg_.is_atom(term(f.terms[0]));
      case K::not_: return !eval(f.kids[0]);
      case K::and_: return eval(f.kids[0]) && eval(f.kids[1]);
      case K::or_: return eval(f.kids[0]) || eval(f.kids[1]);
      case K::implies: return !eval(f.kids[0]) || eval(f.kids[1]);
      case K::iff: return eval(f.kids[0]) == eval(f.kids[1]);
      case K::exists: {
        const Mask saved = env_[static_cast<std::size_t>(f.slot)];
        const bool r = any_in_range(f, [&] { return eval(f.kids[0]); });
        env_[static_cast<std::size_t>(f.slot)] = saved;
        return r;
      }
      case K::forall: {
        const Mask saved = env_[static_cast<std::size_t>(f.slot)];
        const bool r = !any_in_range(f, [&] { return !eval(f.kids[0]); });
        env_[static_cast<std::size_t>(f.slot)] = saved;
        return r;
      }
    }
    return false;
  }

  const models::SetAlgebra& alg_;
  std::vector<Mask> env_;
};

// Quantifier-free evaluation through an exact atomic evaluator.
template <class Atomic>
bool qf_eval(const Formula& f, const Atomic& atomic) {
  switch (f.kind()) {
    case K::not_: return !qf_eval(f.child(), atomic);
    case K::and_: return qf_eval(f.child(0), atomic) && qf_eval(f.child(1), atomic);
    case K::or_: return qf_eval(f.child(0), atomic) || qf_eval(f.child(1), atomic);
    case K::implies: return !qf_eval(f.child(0), atomic) || qf_eval(f.child(1), atomic);
    case K::iff: return qf_eval(f.child(0), atomic) == qf_eval(f.child(1), atomic);
    case K::exists:
    case K::forall: throw EvalError("formula is not quantifier-free");
    default: return atomic(f);
  }
}

FinSet seeds_of(const Assignment<FinSet>& a) {
  std::vector<Rat> pts{Rat(0)};
  for (const auto& [name, s] : a) pts.insert(pts.end(), s.points().begin(), s.points().end());
  return FinSet(std::move(pts));
}

FinSet seeds_of(const Assignment<IntervalUnion>& a) {
  std::vector<Rat> pts{Rat(0)};
  for (const auto& [name, u] : a) {
    const FinSet e = endpoints(u, Side::both);
    pts.insert(pts.end(), e.points().begin(), e.points().end());
  }
  return FinSet(std::move(pts));
}

GridSpec checked_spec(FinSet seeds, int k) {
  if (k < 1) throw DomainError("grid budget must be at least 1");
  GridSpec spec{std::move(seeds), k};
  if (spec.size() > grid_cap()) {
    throw EvalError("grid of " + std::to_string(spec.size()) + " points exceeds the cap " +
                    std::to_string(grid_cap()));
  }
  return spec;
}

bool exact_qf(const Formula& f, const Assignment<FinSet>& a) {
  models::WsoStructure w;
  return qf_eval(f, [&](const Formula& g) { return w.eval_atomic(g, a); });
}

bool exact_qf(const Formula& f, const Assignment<IntervalUnion>& a) {
  models::LciStructure l;
  return qf_eval(f, [&](const Formula& g) { return l.eval_atomic(g, a); });
}

template <class Value>
EvalReport grid_eval_impl(const Formula& f, const Assignment<Value>& a, int k) {
  if (k < 1) throw DomainError("grid budget must be at least 1");
  if (syntax::is_quantifier_free(f)) return {exact_qf(f, a), k, true};
  const bool v = grid_verdict(f, a, k);
  if (GridSpec{seeds_of(a), k + 1}.size() > grid_cap()) return {v, k, false};
  return {v, k, v == grid_verdict(f, a, k + 1)};
}

template <class Value>
EvalReport stabilize_impl(const Formula& f, const Assignment<Value>& a, int kmax) {
  if (kmax < 1) throw DomainError("kmax must be at least 1");
  if (syntax::is_quantifier_free(f)) return {exact_qf(f, a), 1, true};
  const FinSet seeds = seeds_of(a);
  bool prev = grid_verdict(f, a, 1);
  for (int k = 1; k <= kmax; ++k) {
    if (GridSpec{seeds, k + 1}.size() > grid_cap()) return {prev, k, false};
    const bool next = grid_verdict(f, a, k + 1);
    if (next == prev) return {prev, k, true};
    if (k == kmax) break;
    prev = next;
  }
  return {prev, kmax, false};
}

}  // namespace

bool eval_in(const models::SetAlgebra& alg, const Formula& f, const Assignment<Mask>& a) {
  Compiler c(alg);
  std::vector<Mask> env;
  for (const auto& [name, m] : a) {
    if (!alg.in_universe(m)) throw DomainError("value of '" + name + "' is not an element of " + alg.name());
    c.bind_free(name);
    env.push_back(m);
  }
  const CForm code = c.formula(f);
  env.resize(static_cast<std::size_t>(c.slots()), 0);
  return Machine(alg, std::move(env)).run(code);
}

bool bruteforce_eval(std::size_t n, const Formula& f, const Assignment<Mask>& a, std::size_t cap) {
  return bruteforce_eval(models::MsoFin(n, cap), f, a);
}

bool bruteforce_eval(const models::MsoFin& m, const Formula& f, const Assignment<Mask>& a) {
  return eval_in(m.algebra(), f, a);
}

FinSet GridSpec::grid() const {
  std::vector<Rat> pts = seeds.points();
  const auto& s = seeds.points();
  for (std::size_t t = 0; t < s.size(); ++t) {
    const Rat lo = s[t];
    const Rat hi = t + 1 < s.size() ? s[t + 1] : Rat(1);
    for (int j = 1; j <= budget; ++j) pts.push_back(lo + (hi - lo) * Rat(j, budget + 1));
  }
  return FinSet(std::move(pts));
}

std::size_t grid_cap() {
  if (const char* env = std::getenv("MCDLO_GRID_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 14;
}

nlohmann::json to_json(const EvalReport& r) {
  return {{"verdict", r.verdict}, {"budget_used", r.budget_used}, {"stabilized", r.stabilized}};
}

bool grid_verdict(const Formula& f, const Assignment<FinSet>& a, int k) {
  const models::WsoGrid g(checked_spec(seeds_of(a), k).grid());
  Assignment<Mask> enc;
  for (const auto& [name, s] : a) enc[name] = g.encode(s);
  return eval_in(g, f, enc);
}

bool grid_verdict(const Formula& f, const Assignment<IntervalUnion>& a, int k) {
  const models::LciGrid g(checked_spec(seeds_of(a), k).grid());
  Assignment<Mask> enc;
  for (const auto& [name, u] : a) enc[name] = g.encode(u);
  return eval_in(g, f, enc);
}

EvalReport grid_eval(const Formula& f, const Assignment<FinSet>& a, int k) { return grid_eval_impl(f, a, k); }

EvalReport grid_eval(const Formula& f, const Assignment<IntervalUnion>& a, int k) {
  return grid_eval_impl(f, a, k);
}

EvalReport stabilize(const Formula& f, const Assignment<FinSet>& a, int kmax) {
  return stabilize_impl(f, a, kmax);
}

EvalReport stabilize(const Formula& f, const Assignment<IntervalUnion>& a, int kmax) {
  return stabilize_impl(f, a, kmax);
}

// ---------------------------------------------------------------- relativisation

namespace {

template <class Guard>
Formula relativize_with(const Formula& f, const std::set<std::string>& reserved, const Guard& guard) {
  if (f.is_atomic()) return f;
  if (!f.is_quantifier()) {
    std::vector<Formula> kids;
    for (const auto& k : f.children()) kids.push_back(relativize_with(k, reserved, guard));
    if (f.kind() == K::not_) return syntax::lnot(kids[0]);
    return Formula::binary(f.kind(), kids[0], kids[1]);
  }
  std::string v = f.bound_var();
  Formula body = f.child();
  if (reserved.contains(v)) {
    auto avoid = syntax::all_vars(f);
    avoid.insert(reserved.begin(), reserved.end());
    const std::string nv = syntax::fresh_name(v, avoid);
    body = syntax::substitute(body, v, syntax::var(nv));
    v = nv;
  }
  body = relativize_with(body, reserved, guard);
  const Formula g = guard(v, body);
  if (f.kind() == K::exists) return syntax::exists(v, syntax::land(g, body));
  return syntax::forall(v, syntax::implies(g, body));
}

void require_not_free(const Formula& f, const std::string& name) {
  if (syntax::free_vars(f).contains(name)) {
    throw Error("relativisation variable '" + name + "' occurs free in the formula");
  }
}

}  // namespace

Formula relativize_element(const Formula& f, const std::string& y) {
  require_not_free(f, y);
  return relativize_with(f, {y}, [&](const std::string& v, const Formula&) {
    return syntax::subset(syntax::var(v), syntax::var(y));
  });
}

Formula interval_window(const Term& x, const std::string& i, const std::optional<std::string>& j) {
  const Term iv = syntax::var(i);
  Formula w = syntax::land(syntax::at(x), syntax::lor(syntax::lt_exists(iv, x), syntax::eq(iv, x)));
  if (j) w = syntax::land(w, syntax::lt_exists(x, syntax::var(*j)));
  return w;
}

Formula relativize_interval(const Formula& f, const std::string& i, const std::optional<std::string>& j) {
  require_not_free(f, i);
  std::set<std::string> reserved{i};
  if (j) {
    require_not_free(f, *j);
    reserved.insert(*j);
  }
  return relativize_with(f, reserved, [&](const std::string& v, const Formula& body) {
    auto avoid = syntax::all_vars(body);
    avoid.insert(reserved.begin(), reserved.end());
    avoid.insert(v);
    const std::string z = syntax::fresh_name("Z", avoid);
    const Term zt = syntax::var(z);
    return syntax::forall(z, syntax::implies(syntax::land(syntax::at(zt), syntax::subset(zt, syntax::var(v))),
                                             interval_window(zt, i, j)));
  });
}

}  // namespace mcdlo::eval
