#include "mcdlo/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "mcdlo/error.hpp"
#include "mcdlo/eval.hpp"
#include "mcdlo/fefvau.hpp"
#include "mcdlo/generators.hpp"
#include "mcdlo/macros.hpp"
#include "mcdlo/models.hpp"
#include "mcdlo/parser.hpp"
#include "mcdlo/rewriting.hpp"
#include "mcdlo/transform.hpp"

namespace mcdlo::selftest {

using models::Mask;
using syntax::Formula;
using syntax::Signature;
using syntax::Term;
using K = Formula::Kind;

namespace {

class Suite {
 public:
  explicit Suite(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what();
  }

 private:
  SuiteResult& r_;
};

FinSet pool(int n) {
  std::vector<Rat> pts;
  for (int j = 0; j < n; ++j) pts.emplace_back(j, n);
  return FinSet(std::move(pts));
}

std::vector<FinSet> subsets(const FinSet& p) {
  std::vector<FinSet> out;
  for (Mask m = 0; m < (Mask{1} << p.size()); ++m) {
    std::vector<Rat> pts;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (m >> i & 1) pts.push_back(p.points()[i]);
    }
    out.emplace_back(std::move(pts));
  }
  return out;
}

// Unnested atomic formulas over the given variables.
std::vector<Formula> unnested_atoms(Signature sig, const std::vector<std::string>& vars) {
  using syntax::Const;
  using syntax::Fn;
  std::vector<Term> base;
  for (const auto& v : vars) base.push_back(syntax::var(v));
  for (Const c : {Const::bot, Const::zero, Const::zerostar, Const::top}) {
    if (syntax::allows(sig, c)) base.push_back(Term::constant(c));
  }
  std::vector<Term> applied;
  for (Fn f : {Fn::union_, Fn::inter, Fn::setminus, Fn::succ_inv, Fn::sinv, Fn::min, Fn::max, Fn::left, Fn::right}) {
    if (!syntax::allows(sig, f)) continue;
    for (const auto& a : base) {
      if (syntax::arity(f) == 1) {
        applied.push_back(Term::apply(f, {a}));
        continue;
      }
      for (const auto& b : vars) applied.push_back(Term::apply(f, {a, syntax::var(b)}));
    }
  }
  std::vector<Formula> out;
  for (const auto& a : base) {
    out.push_back(syntax::at(a));
    for (const auto& b : base) {
      out.push_back(syntax::eq(a, b));
      if (syntax::allows(sig, K::subset)) out.push_back(syntax::subset(a, b));
      if (syntax::allows(sig, K::lt_exists)) out.push_back(syntax::lt_exists(a, b));
    }
  }
  for (const auto& t : applied) {
    for (const auto& v : vars) out.push_back(syntax::eq(syntax::var(v), t));
  }
  return out;
}

std::string show(const Formula& f) { return syntax::print(f); }

// ---------------------------------------------------------------- core-order

void order_sinv_intersection(Suite& s) {
  for (const auto& a : subsets(pool(4))) {
    for (const auto& b : subsets(pool(4))) {
      s.check(sinv(a, b) == sinv(a, set_intersection(a, b)),
              [&] { return "A=" + to_string(a) + " B=" + to_string(b); });
    }
  }
}

void order_sinv_bounds(Suite& s) {
  for (const auto& a : subsets(pool(4))) {
    if (a.empty()) continue;
    for (const auto& b : subsets(pool(4))) {
      const FinSet r = sinv(a, b);
      s.check(is_subset(r, a) && !r.contains(*a.max()), [&] { return "A=" + to_string(a) + " B=" + to_string(b); });
    }
  }
}

void order_normalize(Suite& s) {
  generators::Rng rng(7);
  std::uniform_int_distribution<int> pt(0, 7);
  for (int round = 0; round < 200; ++round) {
    std::vector<Interval> raw;
    const int count = 1 + round % 4;
    for (int i = 0; i < count; ++i) {
      Rat a(pt(rng), 8);
      Rat b(pt(rng), 8);
      if (b < a) std::swap(a, b);
      std::optional<Rat> right = b;
      if (pt(rng) == 0) right.reset();
      raw.push_back({a, right});
    }
    const IntervalUnion u = IntervalUnion::normalize(raw);
    s.check(IntervalUnion::normalize(u.intervals()) == u, [&] { return "not idempotent: " + to_string(u); });
    std::shuffle(raw.begin(), raw.end(), rng);
    s.check(IntervalUnion::normalize(raw) == u, [&] { return "order sensitive: " + to_string(u); });
  }
}

void order_finite_endpoints(Suite& s) {
  for (const auto& a : subsets(pool(4))) {
    const IntervalUnion u = IntervalUnion::from_finset(a);
    s.check(endpoints(u, Side::left) == a && endpoints(u, Side::right) == a, [&] { return to_string(a); });
  }
}

void order_boundedness(Suite& s) {
  const models::LciGrid g(pool(4));
  for (Mask m : g.universe()) {
    const IntervalUnion u = g.decode(m);
    const bool max_empty = iu_minmax(u, Extreme::max).empty();
    const bool bounded = u.empty() || !max_empty;
    const bool unbounded = !u.empty() && max_empty;
    s.check(bounded != unbounded, [&] { return to_string(u); });
  }
}

// ---------------------------------------------------------------- syntax

std::vector<generators::GenOptions> mixed_options() {
  std::vector<generators::GenOptions> out;
  for (Signature sig : {Signature::mo().with_extensions(), Signature::msofin(), Signature::wso().with_extensions(),
                        Signature::lci()}) {
    generators::GenOptions o;
    o.sig = sig;
    o.term_depth = 2;
    o.depth = 3;
    out.push_back(o);
  }
  return out;
}

void syntax_roundtrip(Suite& s) {
  generators::Rng rng(11);
  for (const auto& o : mixed_options()) {
    for (int i = 0; i < 50; ++i) {
      const Formula f = generators::random_formula(rng, o);
      bool ok = false;
      try {
        ok = syntax::parse_formula(show(f), o.sig) == f;
      } catch (const Error&) {
      }
      s.check(ok, [&] { return show(f); });
    }
  }
}

void syntax_unnest(Suite& s) {
  generators::Rng rng(12);
  for (const auto& o : mixed_options()) {
    for (int i = 0; i < 50; ++i) {
      const Formula f = generators::random_formula(rng, o);
      s.check(syntax::is_unnested(syntax::unnest(f)), [&] { return show(f); });
    }
  }
}

void syntax_substitution(Suite& s) {
  generators::Rng rng(13);
  const models::PointAlgebra alg(2, models::PointAlgebra::Mode::mso);
  generators::GenOptions o;
  o.sig = Signature::msofin();
  o.depth = 2;
  for (int i = 0; i < 40; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const Term t = generators::random_term(rng, o, {"Y"}, 1);
    const Formula g = syntax::substitute(f, "X", t);
    for (Mask y : alg.universe()) {
      const Mask tx = models::eval_term(alg, t, {{"Y", y}});
      const bool lhs = eval::eval_in(alg, g, {{"Y", y}, {"X", 0}});
      const bool rhs = eval::eval_in(alg, f, {{"X", tx}, {"Y", y}});
      s.check(lhs == rhs, [&] { return show(f) + " with X := " + syntax::print(t); });
    }
  }
}

// ---------------------------------------------------------------- models

void models_restriction_iso(Suite& s) {
  const auto atoms = unnested_atoms(Signature::msofin(), {"X", "Y"});
  for (const auto& a : subsets(pool(4))) {
    const models::ElementRestriction r(a);
    const models::MsoFin m(a.size());
    const Mask full = (Mask{1} << a.size()) - 1;
    for (const auto& f : atoms) {
      for (Mask x = 0; x <= full; ++x) {
        for (Mask y = 0; y <= full; ++y) {
          const bool lhs = r.eval_atomic(f, {{"X", r.from_mso(x)}, {"Y", r.from_mso(y)}});
          const bool rhs = m.eval_atomic(f, {{"X", x}, {"Y", y}});
          s.check(lhs == rhs, [&] { return "A=" + to_string(a) + " " + show(f); });
        }
      }
    }
  }
}

void models_succ_inv(Suite& s) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const models::PointAlgebra alg(n, models::PointAlgebra::Mode::mso);
    const Mask low = n < 2 ? 0 : (Mask{1} << (n - 1)) - 1;
    for (Mask a : alg.universe()) {
      const Mask r = alg.apply(syntax::Fn::succ_inv, a, 0);
      s.check((r & ~low) == 0, [&] { return "n=" + std::to_string(n); });
    }
    s.check(alg.apply(syntax::Fn::succ_inv, alg.full(), 0) == low, [&] { return "full, n=" + std::to_string(n); });
  }
}

void models_interval_compose(Suite& s) {
  const auto atoms = unnested_atoms(Signature::wso(), {"X", "Y"});
  const models::WsoStructure w;
  const FinSet local = pool(3);
  struct Window {
    Rat lo;
    std::optional<Rat> hi;
  };
  const std::vector<Window> outer{{Rat(0), Rat(1, 2)}, {Rat(1, 4), std::nullopt}, {Rat(1, 3), Rat(2, 3)}};
  const std::vector<Window> inner{{Rat(0), Rat(1, 2)}, {Rat(1, 2), std::nullopt}, {Rat(1, 4), Rat(3, 4)}};
  for (const auto& o : outer) {
    const models::IntervalRestriction r(o.lo, o.hi);
    for (const auto& i : inner) {
      const models::IntervalRestriction composed = r.restrict(i.lo, i.hi);
      const models::IntervalRestriction step(i.lo, i.hi);
      for (const auto& f : atoms) {
        for (const auto& x : subsets(local)) {
          for (const auto& y : subsets(local)) {
            const FinSet ex = composed.embed(x);
            const FinSet ey = composed.embed(y);
            const bool same_points = ex == r.embed(step.embed(x)) && ey == r.embed(step.embed(y));
            const bool lhs = composed.eval_atomic(f, {{"X", ex}, {"Y", ey}});
            const bool rhs = w.eval_atomic(f, {{"X", x}, {"Y", y}});
            s.check(same_points && lhs == rhs, [&] { return show(f); });
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------- eval

generators::GenOptions mo_options(int depth) {
  generators::GenOptions o;
  o.sig = Signature::mo();
  o.vars = {"X"};
  o.term_depth = 0;
  o.depth = depth;
  return o;
}

void eval_relativize_element(Suite& s) {
  generators::Rng rng(21);
  const auto o = mo_options(2);
  for (int i = 0; i < 12; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const Formula g = eval::relativize_element(f, "A");
    for (const auto& a : subsets(pool(4))) {
      const models::ElementRestriction r(a);
      for (Mask x = 0; x < (Mask{1} << a.size()); ++x) {
        const bool lhs = eval::grid_eval(g, models::Assignment<FinSet>{{"A", a}, {"X", r.from_mso(x)}}, 1).verdict;
        const bool rhs = eval::bruteforce_eval(a.size(), f, {{"X", x}});
        s.check(lhs == rhs, [&] { return show(f) + " at A=" + to_string(a); });
      }
    }
  }
}

void eval_relativize_random(Suite& s) {
  generators::Rng rng(22);
  const auto o = mo_options(2);
  for (int i = 0; i < 12; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const Formula g = eval::relativize_element(f, "A");
    for (const auto& a : subsets(pool(3))) {
      const models::ElementRestriction r(a);
      const models::PointAlgebra alg(a.size(), models::PointAlgebra::Mode::mso);
      for (Mask x = 0; x < (Mask{1} << a.size()); ++x) {
        const bool lhs = eval::eval_in(alg, f, {{"X", x}});
        const bool rhs = eval::grid_verdict(g, models::Assignment<FinSet>{{"A", a}, {"X", r.from_mso(x)}}, 2);
        s.check(lhs == rhs, [&] { return show(f) + " at A=" + to_string(a); });
      }
    }
  }
}

const std::vector<std::string>& regression_corpus() {
  static const std::vector<std::string> corpus{
      "(exists X (not (= X bot)))",
      "(forall X (exists Y (and (subset X Y) (not (= X Y)))))",
      "(exists X (and (at X) (forall Y (implies (at Y) (ltE X Y)))))",
      "(forall X (forall Y (or (subset X Y) (subset Y X))))",
      "(exists X (and (at X) (not (= X zero))))",
      "(forall X (implies (at X) (exists Y (and (at Y) (ltE X Y)))))",
      "(exists X (and (at X) (ltE P X)))",
      "(forall X (implies (at X) (or (ltE X P) (ltE P X) (subset X P))))",
  };
  return corpus;
}

void eval_monotone_stable(Suite& s) {
  const Signature sig = Signature::mo().with_extensions();
  const models::Assignment<FinSet> params{{"P", FinSet{Rat(1, 2)}}};
  for (const auto& text : regression_corpus()) {
    const Formula f = syntax::parse_formula(text, sig);
    const int cap = eval::grid_cap();
    std::vector<bool> v;
    for (int k = 1; k <= 4; ++k) {
      if (eval::GridSpec{FinSet{Rat(0), Rat(1, 2)}, k}.size() > static_cast<std::size_t>(cap)) break;
      v.push_back(eval::grid_verdict(f, params, k));
    }
    for (std::size_t k = 0; k + 2 < v.size(); ++k) {
      s.check(v[k] != v[k + 1] || v[k + 1] == v[k + 2], [&] { return text + " at k=" + std::to_string(k + 1); });
    }
  }
}

// ---------------------------------------------------------------- fefvau

void fefvau_powers(Suite& s) {
  generators::Rng rng(31);
  const models::PointAlgebra factor(2, models::PointAlgebra::Mode::mso);
  const fefvau::FinitePower power(factor, 2);
  const auto elements = power.elements();
  auto o = generators::power_options();
  for (int i = 0; i < 10; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const auto pf = fefvau::to_power(f);
    fefvau::AcceptableSequence z;
    try {
      z = fefvau::fv_reduce(pf, 128);
    } catch (const Error&) {
      continue;  // above the component cap used here
    }
    for (const auto& e : elements) {
      const std::map<std::string, fefvau::FinitePower::Element> a{{"Y", e}};
      s.check(power.holds(pf, a) == power.holds(z, a), [&] { return show(f); });
    }
  }
}

void fefvau_parameters(Suite& s) {
  const Signature sig = Signature::mo().with_extensions();
  const std::vector<std::string> corpus{"(= X bot)", "(exists Z (and (at Z) (ltE Z X)))",
                                        "(exists Z (and (subset Z X) (not (= Z X))))"};
  const auto oracle = fefvau::grid_oracle();
  for (const auto& text : corpus) {
    const Formula f = syntax::parse_formula(text, sig);
    const auto t = fefvau::translate_with_parameters(f, {"X"}, oracle);
    if (!t.stabilized) continue;
    for (const auto& x : subsets(FinSet{Rat(1, 4), Rat(1, 2)})) {
      const auto direct = eval::stabilize(f, models::Assignment<FinSet>{{"X", x}}, 3);
      if (!direct.stabilized) continue;
      s.check(direct.verdict == fefvau::eval_translation(t, {x}), [&] { return text + " at X=" + to_string(x); });
    }
  }
}

void fefvau_support_index(Suite& s) {
  const std::vector<FinSet> params{FinSet{Rat(1, 2)}};
  const Formula theta = syntax::parse_formula("(not (= X bot))", Signature::wso());
  for (const auto& b : subsets(pool(4))) {
    const auto e = fefvau::decompose(params, b);
    const auto r = fefvau::support(theta, {"X"}, {e}, 2);
    s.check(is_subset(r.support, e.index), [&] { return to_string(b); });
  }
}

void fefvau_roundtrip(Suite& s) {
  const std::vector<std::vector<FinSet>> param_sets{{}, {FinSet{Rat(1, 2)}}, {FinSet{Rat(1, 4), Rat(3, 4)}}};
  for (const auto& params : param_sets) {
    for (const auto& b : subsets(pool(8))) {
      s.check(fefvau::reassemble(fefvau::decompose(params, b)) == b, [&] { return to_string(b); });
    }
  }
}

// ---------------------------------------------------------------- rewriting

void rewriting_defeq_msofin(Suite& s) {
  const auto mo_atoms = unnested_atoms(Signature::mo(), {"X", "Y"});
  const auto fin_atoms = unnested_atoms(Signature::msofin(), {"X", "Y"});
  for (std::size_t n = 0; n <= 4; ++n) {
    const models::PointAlgebra alg(n, models::PointAlgebra::Mode::mso);
    auto run = [&](const std::vector<Formula>& atoms, Signature from, Signature to) {
      for (const auto& f : atoms) {
        const Formula g = rewriting::defeq_translate(f, from, to);
        for (Mask x : alg.universe()) {
          for (Mask y : alg.universe()) {
            const models::Assignment<Mask> a{{"X", x}, {"Y", y}};
            s.check(eval::eval_in(alg, f, a) == eval::eval_in(alg, g, a),
                    [&] { return show(f) + " n=" + std::to_string(n); });
          }
        }
      }
    };
    run(mo_atoms, Signature::mo(), Signature::msofin());
    run(fin_atoms, Signature::msofin(), Signature::mo());
  }
}

void rewriting_defeq_wso(Suite& s) {
  const models::WsoGrid g(pool(4));
  const Signature wext = Signature::wso().with_extensions();
  auto run = [&](const std::vector<Formula>& atoms, Signature from, Signature to) {
    for (const auto& f : atoms) {
      const Formula t = rewriting::defeq_translate(f, from, to);
      for (Mask x : g.universe()) {
        for (Mask y : g.universe()) {
          const models::Assignment<Mask> a{{"X", x}, {"Y", y}};
          s.check(eval::eval_in(g, f, a) == eval::eval_in(g, t, a), [&] { return show(f); });
        }
      }
    }
  };
  run(unnested_atoms(Signature::mo(), {"X", "Y"}), Signature::mo(), Signature::wso());
  run(unnested_atoms(wext, {"X", "Y"}), wext, Signature::mo());
}

void rewriting_notbotelim(Suite& s) {
  const models::WsoGrid g(pool(6));
  const Term a = syntax::var("A");
  const Term z = syntax::zero();
  const Formula rhs =
      syntax::lor(syntax::eq(a, z), subset_eq(z, syntax::sinv(syntax::unite(a, z), a)));
  for (Mask m : g.universe()) {
    s.check((m != 0) == eval::eval_in(g, rhs, {{"A", m}}), [&] { return to_string(g.decode(m)); });
  }
}

void rewriting_positive(Suite& s) {
  generators::Rng rng(41);
  const models::WsoGrid g(pool(4));
  const auto o = generators::qf_wso_options();
  for (int i = 0; i < 30; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const Formula r = rewriting::qf_positive_rewrite(f);
    bool pure = true;
    try {
      syntax::check_signature(r, Signature::wso());
    } catch (const Error&) {
      pure = false;
    }
    s.check(pure && syntax::is_positive_existential(r), [&] { return "not positive: " + show(f); });
    for (Mask a : g.universe()) {
      for (Mask b : g.universe()) {
        const models::Assignment<Mask> as{{"A", a}, {"B", b}};
        s.check(eval::eval_in(g, f, as) == eval::eval_in(g, r, as), [&] { return show(f); });
      }
    }
  }
}

void rewriting_code_domain(Suite& s) {
  const FinSet p = pool(4);
  std::set<std::pair<FinSet, FinSet>> realized;
  const models::LciGrid lg(p);
  for (Mask m : lg.universe()) {
    const IntervalUnion u = lg.decode(m);
    if (!u.empty()) realized.insert({endpoints(u, Side::left), endpoints(u, Side::right)});
  }
  for (const auto& b : subsets(p)) {
    for (const auto& c : subsets(p)) {
      s.check(rewriting::code_domain(b, c) == realized.contains({b, c}),
              [&] { return to_string(b) + " " + to_string(c); });
    }
  }
}

void rewriting_membership(Suite& s) {
  const FinSet p = pool(4);
  const models::LciGrid lg(p);
  // Points of the pool, gap midpoints, and a point above the pool.
  FinSet fine = p;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rat hi = i + 1 < p.size() ? p.points()[i + 1] : Rat(1);
    fine = set_union(fine, FinSet{(p.points()[i] + hi) / 2});
  }
  const models::WsoGrid wg(fine);
  const Term l = syntax::var("L"), r = syntax::var("R"), z = syntax::var("Z");
  const Formula mem = rewriting::membership_code(l, r, z);
  const Formula inc =
      rewriting::inclusion_code(l, r, syntax::var("M"), syntax::var("S"), {"L", "R", "M", "S"});
  std::vector<std::pair<IntervalUnion, rewriting::CodePair>> all;
  for (Mask m : lg.universe()) {
    const IntervalUnion u = lg.decode(m);
    all.push_back({u, rewriting::code_of(u)});
  }
  for (const auto& [u, c] : all) {
    for (const auto& pt : fine.points()) {
      const models::Assignment<Mask> a{{"L", wg.encode(c.l)}, {"R", wg.encode(c.r)}, {"Z", wg.encode(FinSet{pt})}};
      s.check(eval::eval_in(wg, mem, a) == iu_member(u, pt), [&] { return to_string(u) + " at " + format_rat(pt); });
    }
    for (const auto& [v, d] : all) {
      const models::Assignment<Mask> a{
          {"L", wg.encode(c.l)}, {"R", wg.encode(c.r)}, {"M", wg.encode(d.l)}, {"S", wg.encode(d.r)}};
      s.check(eval::eval_in(wg, inc, a) == iu_subset(u, v), [&] { return to_string(u) + " in " + to_string(v); });
    }
  }
}

void rewriting_sinv_witness(Suite& s) {
  const FinSet p = pool(4);
  const models::LciGrid lg(p);
  const models::WsoGrid wg(p);
  const Formula f = rewriting::sinv_characterization(syntax::var("A"), syntax::var("B"), syntax::var("C"), {});
  auto enc = [&](Mask m) { return lg.encode(IntervalUnion::from_finset(wg.decode(m))); };
  for (Mask a : wg.universe()) {
    for (Mask b : wg.universe()) {
      for (Mask c : wg.universe()) {
        const bool want = wg.apply(syntax::Fn::sinv, a, b) == c;
        const bool got = eval::eval_in(lg, f, {{"A", enc(a)}, {"B", enc(b)}, {"C", enc(c)}});
        s.check(want == got, [&] { return to_string(wg.decode(a)) + " " + to_string(wg.decode(b)); });
      }
    }
  }
}

void rewriting_lci_existential(Suite& s) {
  generators::Rng rng(43);
  const models::LciGrid lg(pool(3));
  const auto o = generators::qf_lci_options();
  for (int i = 0; i < 10; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const Formula r = rewriting::lci_existential_rewrite(f);
    s.check(syntax::is_existential(r), [&] { return "not existential: " + show(f); });
    for (Mask a : lg.universe()) {
      for (Mask b : lg.universe()) {
        const models::Assignment<Mask> as{{"A", a}, {"B", b}};
        s.check(eval::eval_in(lg, f, as) == eval::eval_in(lg, r, as), [&] { return show(f); });
      }
    }
  }
}

const std::vector<std::pair<std::string, std::function<void(Suite&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(Suite&)>>> suites{
      {"order.sinv-intersection", order_sinv_intersection},
      {"order.sinv-bounds", order_sinv_bounds},
      {"order.normalize", order_normalize},
      {"order.finite-endpoints", order_finite_endpoints},
      {"order.boundedness", order_boundedness},
      {"syntax.roundtrip", syntax_roundtrip},
      {"syntax.unnest", syntax_unnest},
      {"syntax.substitution", syntax_substitution},
      {"models.restriction-iso", models_restriction_iso},
      {"models.succ-inv", models_succ_inv},
      {"models.interval-compose", models_interval_compose},
      {"eval.relativize-element", eval_relativize_element},
      {"eval.relativize-random", eval_relativize_random},
      {"eval.monotone-stable", eval_monotone_stable},
      {"fefvau.powers", fefvau_powers},
      {"fefvau.parameters", fefvau_parameters},
      {"fefvau.support-index", fefvau_support_index},
      {"fefvau.roundtrip", fefvau_roundtrip},
      {"rewriting.defeq-msofin", rewriting_defeq_msofin},
      {"rewriting.defeq-wso", rewriting_defeq_wso},
      {"rewriting.notbotelim", rewriting_notbotelim},
      {"rewriting.positive", rewriting_positive},
      {"rewriting.code-domain", rewriting_code_domain},
      {"rewriting.membership", rewriting_membership},
      {"rewriting.sinv-witness", rewriting_sinv_witness},
      {"rewriting.lci-existential", rewriting_lci_existential},
  };
  return suites;
}

}  // namespace

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j{{"suite", r.name},
                   {"passed", r.passed()},
                   {"cases", r.cases},
                   {"failures", r.failures},
                   {"millis", r.millis}};
  if (r.failures > 0) j["first_failure"] = r.first_failure;
  return j;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult r;
    r.name = n;
    Suite s(r);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(s);
    } catch (const std::exception& e) {
      ++r.cases;
      if (r.failures++ == 0) r.first_failure = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error("unknown selftest suite '" + name + "'");
}

std::vector<SuiteResult> run_all() {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name));
  return out;
}

}  // namespace mcdlo::selftest
