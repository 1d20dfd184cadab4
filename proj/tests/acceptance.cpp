// Acceptance criteria 1-10.  One PASS/FAIL line per criterion on stdout.
//
// Oracles here are written against the definitions directly (bitmask
// semantics, explicit interval enumeration) and do not call the library
// routine under test.  Exit status is nonzero when a criterion fails that is
// not listed in kKnownFindings.

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcdlo/error.hpp"
#include "mcdlo/eval.hpp"
#include "mcdlo/fefvau.hpp"
#include "mcdlo/generators.hpp"
#include "mcdlo/macros.hpp"
#include "mcdlo/models.hpp"
#include "mcdlo/parser.hpp"
#include "mcdlo/rewriting.hpp"
#include "mcdlo/transform.hpp"

using namespace mcdlo;
using syntax::Const;
using syntax::Fn;
using syntax::Formula;
using syntax::Signature;
using syntax::Term;
using K = Formula::Kind;
using Mask = std::uint64_t;

namespace {

// Pinned limits.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 60.0;
constexpr double kLimit3 = 10.0;
constexpr double kLimit4 = 60.0;
constexpr double kLimit5 = 30.0;
constexpr double kLimit6 = 30.0;
constexpr double kLimit7 = 300.0;
constexpr double kLimit8 = 60.0;
constexpr double kLimit9 = 60.0;
constexpr double kStabilizedTarget = 0.90;
constexpr std::size_t kAllowedMismatches = 0;

// Criteria whose failure is a documented finding about the source statement.
const std::set<int> kKnownFindings{2};

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------- bitmask semantics

int low_bit(Mask m) { return std::countr_zero(m); }
int high_bit(Mask m) { return 63 - std::countl_zero(m); }

// Members of a whose successor inside a lies in b.
Mask ref_sinv(Mask a, Mask b) {
  Mask out = 0;
  for (int i = 0; i < 64; ++i) {
    if (!(a >> i & 1)) continue;
    const Mask above = a & ~((Mask{2} << i) - 1);
    if (above == 0) continue;
    if (b >> low_bit(above) & 1) out |= Mask{1} << i;
  }
  return out;
}

Mask ref_min(Mask a) { return a == 0 ? 0 : Mask{1} << low_bit(a); }
Mask ref_max(Mask a) { return a == 0 ? 0 : Mask{1} << high_bit(a); }
bool ref_lt_exists(Mask a, Mask b) { return a != 0 && b != 0 && low_bit(a) < high_bit(b); }
bool ref_atom(Mask a) { return std::popcount(a) == 1; }

// Subsets of an n-point chain; bit i is the i-th point, point 0 is the origin.
struct RefChain {
  int n;
  Mask full() const { return n == 0 ? 0 : (n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1); }

  Mask term(const Term& t, const std::map<std::string, Mask>& a) const {
    switch (t.kind()) {
      case Term::Kind::var: return a.at(t.name());
      case Term::Kind::constant:
        switch (t.constant_value()) {
          case Const::bot: return 0;
          case Const::zero: return n == 0 ? 0 : 1;
          case Const::zerostar: return n == 0 ? 0 : Mask{1} << (n - 1);
          case Const::top: return full();
        }
        return 0;
      case Term::Kind::apply: break;
    }
    const Mask x = term(t.args()[0], a);
    const Mask y = t.args().size() > 1 ? term(t.args()[1], a) : 0;
    switch (t.fn()) {
      case Fn::union_: return x | y;
      case Fn::inter: return x & y;
      case Fn::setminus: return x & ~y;
      case Fn::succ_inv: return (x >> 1) & full();
      case Fn::sinv: return ref_sinv(x, y);
      case Fn::min: return ref_min(x);
      case Fn::max: return ref_max(x);
      default: throw mcdlo::Error("reference chain has no '" + std::string(syntax::keyword(t.fn())) + "'");
    }
  }

  bool holds(const Formula& f, std::map<std::string, Mask>& a) const {
    switch (f.kind()) {
      case K::truth: return true;
      case K::falsity: return false;
      case K::eq: return term(f.term(0), a) == term(f.term(1), a);
      case K::subset: return (term(f.term(0), a) & ~term(f.term(1), a)) == 0;
      case K::lt_exists: return ref_lt_exists(term(f.term(0), a), term(f.term(1), a));
      case K::atom: return ref_atom(term(f.term(0), a));
      case K::not_: return !holds(f.child(), a);
      case K::and_: return holds(f.child(0), a) && holds(f.child(1), a);
      case K::or_: return holds(f.child(0), a) || holds(f.child(1), a);
      case K::implies: return !holds(f.child(0), a) || holds(f.child(1), a);
      case K::iff: return holds(f.child(0), a) == holds(f.child(1), a);
      case K::exists:
      case K::forall: {
        const bool ex = f.kind() == K::exists;
        const std::string& v = f.bound_var();
        const auto saved = a.find(v) == a.end() ? std::optional<Mask>{} : std::optional<Mask>{a[v]};
        bool result = !ex;
        for (Mask m = 0; m <= full(); ++m) {
          a[v] = m;
          if (holds(f.child(), a) == ex) {
            result = ex;
            break;
          }
          if (m == full()) break;
        }
        if (saved) {
          a[v] = *saved;
        } else {
          a.erase(v);
        }
        return result;
      }
    }
    return false;
  }
};

FinSet points_of(const std::vector<Rat>& chain, Mask m) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (m >> i & 1) out.push_back(chain[i]);
  }
  return FinSet(std::move(out));
}

// ---------------------------------------------------------------- interval unions on a grid

// Canonical interval unions with endpoints among grid indices; hi == -1 is END.
struct RefUnion {
  std::vector<std::pair<int, int>> parts;

  Mask left() const {
    Mask m = 0;
    for (auto [lo, hi] : parts) m |= Mask{1} << lo;
    return m;
  }
  Mask right() const {
    Mask m = 0;
    for (auto [lo, hi] : parts) {
      if (hi >= 0) m |= Mask{1} << hi;
    }
    return m;
  }
  bool unbounded() const { return !parts.empty() && parts.back().second < 0; }
  // Grid points covered.
  Mask covers(int n) const {
    Mask m = 0;
    for (auto [lo, hi] : parts) {
      const int top = hi < 0 ? n - 1 : hi;
      for (int i = lo; i <= top; ++i) m |= Mask{1} << i;
    }
    return m;
  }
};

void enumerate_unions(int n, int from, RefUnion& cur, std::vector<RefUnion>& out) {
  out.push_back(cur);
  for (int lo = from; lo < n; ++lo) {
    for (int hi = lo; hi <= n; ++hi) {
      const bool end = hi == n;
      cur.parts.push_back({lo, end ? -1 : hi});
      if (end) {
        out.push_back(cur);
      } else {
        enumerate_unions(n, hi + 1, cur, out);
      }
      cur.parts.pop_back();
    }
  }
}

std::vector<RefUnion> all_unions(int n) {
  std::vector<RefUnion> out;
  RefUnion cur;
  enumerate_unions(n, 0, cur, out);
  return out;
}

IntervalUnion to_interval_union(const RefUnion& u, const std::vector<Rat>& grid) {
  std::vector<Interval> raw;
  for (auto [lo, hi] : u.parts) {
    raw.push_back({grid[static_cast<std::size_t>(lo)],
                   hi < 0 ? std::optional<Rat>{} : std::optional<Rat>{grid[static_cast<std::size_t>(hi)]}});
  }
  return IntervalUnion::normalize(std::move(raw));
}

// Membership of a rational in a union given by grid indices.
bool ref_member(const RefUnion& u, const std::vector<Rat>& grid, const Rat& p) {
  for (auto [lo, hi] : u.parts) {
    const Rat& a = grid[static_cast<std::size_t>(lo)];
    if (p < a) continue;
    if (hi < 0 || p <= grid[static_cast<std::size_t>(hi)]) return true;
  }
  return false;
}

bool ref_subset(const RefUnion& u, const RefUnion& v) {
  for (auto [lo, hi] : u.parts) {
    bool inside = false;
    for (auto [vlo, vhi] : v.parts) {
      const bool top_ok = vhi < 0 || (hi >= 0 && hi <= vhi);
      if (vlo <= lo && top_ok) inside = true;
    }
    if (!inside) return false;
  }
  return true;
}

std::vector<Rat> chain(int count, int denominator, int step = 1) {
  std::vector<Rat> out;
  for (int j = 0; j < count; ++j) out.emplace_back(j * step, denominator);
  return out;
}

std::string mask_string(Mask m, const std::vector<Rat>& c) { return to_string(points_of(c, m)); }

// ---------------------------------------------------------------- criteria

Outcome criterion1() {
  const auto pool = chain(6, 6);
  const models::WsoGrid grid{FinSet(pool)};
  const Term a = syntax::var("A");
  const Term z = syntax::zero();
  const Formula rhs = syntax::lor(syntax::eq(a, z), syntax::subset_eq(z, syntax::sinv(syntax::unite(a, z), a)));
  std::size_t bad = 0, library_bad = 0;
  for (Mask m = 0; m < 64; ++m) {
    const bool lhs = m != 0;
    const bool ref = m == 1 || (ref_sinv(m | 1, m) & 1) != 0;
    if (lhs != ref) ++bad;
    if (lhs != eval::eval_in(grid, rhs, {{"A", m}})) ++library_bad;
  }
  std::ostringstream d;
  d << "64 subsets of a 6-point pool; reference mismatches " << bad << ", evaluator mismatches " << library_bad;
  return {bad == 0 && library_bad == 0, d.str()};
}

Outcome criterion2() {
  // Pool: even points of an 11-point grid; D ranges over all interval unions
  // with endpoints on the grid, END included.
  const auto grid = chain(11, 11);
  Mask pool = 0;
  for (int i = 0; i < 11; i += 2) {
    if (i < 10) pool |= Mask{1} << i;
  }
  const auto ds = all_unions(11);

  // (l, r) -> candidates, split by boundedness.
  struct Candidates {
    std::vector<Mask> bounded, unbounded;
  };
  std::map<std::pair<Mask, Mask>, Candidates> by_code;
  for (const auto& d : ds) {
    auto& c = by_code[{d.left(), d.right()}];
    (d.unbounded() ? c.unbounded : c.bounded).push_back(d.covers(11));
  }
  auto exists_d = [&](Mask l, Mask r, Mask a, bool need_unbounded) {
    auto it = by_code.find({l, r});
    if (it == by_code.end()) return false;
    auto covers = [&](const std::vector<Mask>& v) {
      return std::any_of(v.begin(), v.end(), [&](Mask cov) { return (a & ~cov) == 0; });
    };
    return covers(it->second.unbounded) || (!need_unbounded && covers(it->second.bounded));
  };

  std::size_t triples = 0, literal_bad = 0, corrected_bad = 0, formula_bad = 0;
  std::string example;
  const models::LciGrid lg{FinSet(grid)};
  const Formula f = rewriting::sinv_characterization(syntax::var("A"), syntax::var("B"), syntax::var("C"), {});
  auto enc = [&](Mask m) { return lg.encode(IntervalUnion::from_finset(points_of(grid, m))); };

  for (Mask a = pool;; a = (a - 1) & pool) {
    for (Mask b = a;; b = (b - 1) & a) {
      for (Mask c = a;; c = (c - 1) & a) {
        ++triples;
        const bool want = ref_sinv(a, b) == c;
        bool literal = false, corrected = false;
        if (b == 0) {
          literal = corrected = c == 0;
        } else {
          const Mask zero = 1;
          const bool case1 = (ref_min(a) & b) != 0;
          const Mask l = case1 ? ((b & ~ref_min(b)) | zero) : (b | zero);
          literal = exists_d(l, c, a, false);
          corrected = exists_d(l, c, a, true);
        }
        if (literal != want) {
          if (literal_bad++ == 0) {
            example = "A=" + mask_string(a, grid) + " B=" + mask_string(b, grid) + " C=" + mask_string(c, grid);
          }
        }
        if (corrected != want) ++corrected_bad;
        if (eval::eval_in(lg, f, {{"A", enc(a)}, {"B", enc(b)}, {"C", enc(c)}}) != want) ++formula_bad;
        if (c == 0) break;
      }
      if (b == 0) break;
    }
    if (a == 0) break;
  }
  std::ostringstream d;
  d << triples << " triples (B, C subsets of A, A in a 5-point pool), " << ds.size()
    << " candidate D; literal statement mismatches " << literal_bad;
  if (!example.empty()) d << " (first: " << example << ")";
  d << "; with D unbounded mismatches " << corrected_bad << "; library formula mismatches " << formula_bad;
  return {literal_bad == 0 && corrected_bad == 0 && formula_bad == 0, d.str()};
}

Outcome criterion3() {
  const auto pool = chain(4, 4);
  std::set<std::pair<Mask, Mask>> realizable;
  for (const auto& u : all_unions(4)) {
    if (!u.parts.empty()) realizable.insert({u.left(), u.right()});
  }
  const models::WsoGrid g{FinSet(pool)};
  const Formula f = rewriting::code_domain_formula(syntax::var("B"), syntax::var("C"));
  std::size_t bad = 0, formula_bad = 0;
  for (Mask b = 0; b < 16; ++b) {
    for (Mask c = 0; c < 16; ++c) {
      const bool want = realizable.contains({b, c});
      if (rewriting::code_domain(points_of(pool, b), points_of(pool, c)) != want) ++bad;
      if (eval::eval_in(g, f, {{"B", b}, {"C", c}}) != want) ++formula_bad;
    }
  }
  std::ostringstream d;
  d << "256 pairs over a 4-point pool, " << realizable.size() << " realizable; code_domain mismatches " << bad
    << ", formula mismatches " << formula_bad;
  return {bad == 0 && formula_bad == 0, d.str()};
}

Outcome criterion4() {
  const auto pool = chain(4, 4);
  // Pool points, a point inside each gap, and one above the pool.
  const auto fine = chain(8, 8);
  const models::WsoGrid g{FinSet(fine)};
  const auto unions = all_unions(4);
  const Term l = syntax::var("L"), r = syntax::var("R");
  const Formula mem = rewriting::membership_code(l, r, syntax::var("Z"));
  const Formula inc = rewriting::inclusion_code(l, r, syntax::var("M"), syntax::var("S"), {"L", "R", "M", "S"});
  auto encode = [&](Mask pool_mask) { return g.encode(points_of(pool, pool_mask)); };
  std::size_t mem_cases = 0, inc_cases = 0, mem_bad = 0, inc_bad = 0, cross_bad = 0;
  for (const auto& u : unions) {
    const IntervalUnion iu = to_interval_union(u, pool);
    for (std::size_t i = 0; i < fine.size(); ++i) {
      const bool want = ref_member(u, pool, fine[i]);
      if (want != iu_member(iu, fine[i])) ++cross_bad;
      const bool got = eval::eval_in(g, mem, {{"L", encode(u.left())}, {"R", encode(u.right())}, {"Z", Mask{1} << i}});
      ++mem_cases;
      if (got != want) ++mem_bad;
    }
    for (const auto& v : unions) {
      const bool want = ref_subset(u, v);
      if (want != iu_subset(iu, to_interval_union(v, pool))) ++cross_bad;
      const bool got = eval::eval_in(g, inc, {{"L", encode(u.left())}, {"R", encode(u.right())},
                                              {"M", encode(v.left())}, {"S", encode(v.right())}});
      ++inc_cases;
      if (got != want) ++inc_bad;
    }
  }
  std::ostringstream d;
  d << unions.size() << " interval unions on a 4-point pool; membership " << mem_bad << "/" << mem_cases
    << " mismatches, inclusion " << inc_bad << "/" << inc_cases << ", iu_member/iu_subset vs reference "
    << cross_bad;
  return {mem_bad == 0 && inc_bad == 0 && cross_bad == 0, d.str()};
}

// Unnested atomic formulas over X, Y.
std::vector<Formula> atomic_clauses(Signature sig) {
  std::vector<Term> base{syntax::var("X"), syntax::var("Y")};
  for (Const c : {Const::bot, Const::zero, Const::zerostar, Const::top}) {
    if (syntax::allows(sig, c)) base.push_back(Term::constant(c));
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
  for (Fn f : {Fn::union_, Fn::inter, Fn::setminus, Fn::succ_inv, Fn::sinv, Fn::min, Fn::max}) {
    if (!syntax::allows(sig, f)) continue;
    for (const auto& a : base) {
      std::vector<Term> apps;
      if (syntax::arity(f) == 1) {
        apps.push_back(Term::apply(f, {a}));
      } else {
        for (const auto& b : base) apps.push_back(Term::apply(f, {a, b}));
      }
      for (const auto& t : apps) {
        out.push_back(syntax::eq(syntax::var("X"), t));
        out.push_back(syntax::eq(t, syntax::var("Y")));
      }
    }
  }
  return out;
}

Outcome criterion5() {
  std::size_t cases = 0, bad = 0;
  std::string first;
  auto run = [&](const std::vector<Formula>& clauses, Signature from, Signature to, int n,
                 const models::SetAlgebra& alg) {
    const RefChain ref{n};
    for (const auto& f : clauses) {
      const Formula g = rewriting::defeq_translate(f, from, to);
      for (Mask x = 0; x <= ref.full(); ++x) {
        for (Mask y = 0; y <= ref.full(); ++y) {
          std::map<std::string, Mask> a{{"X", x}, {"Y", y}};
          ++cases;
          if (ref.holds(f, a) != eval::eval_in(alg, g, {{"X", x}, {"Y", y}})) {
            if (bad++ == 0) first = syntax::print(f);
          }
        }
      }
    }
  };
  const auto mo = atomic_clauses(Signature::mo());
  const auto fin = atomic_clauses(Signature::msofin());
  for (int n = 0; n <= 4; ++n) {
    const models::PointAlgebra alg(static_cast<std::size_t>(n), models::PointAlgebra::Mode::mso);
    run(mo, Signature::mo(), Signature::msofin(), n, alg);
    run(fin, Signature::msofin(), Signature::mo(), n, alg);
  }
  const models::WsoGrid w{FinSet(chain(4, 4))};
  const Signature wext = Signature::wso().with_extensions();
  run(mo, Signature::mo(), Signature::wso(), 4, w);
  run(atomic_clauses(wext), wext, Signature::mo(), 4, w);
  std::ostringstream d;
  d << cases << " clause instances in MSO(0..4) and W(I) on a 4-point pool; mismatches " << bad;
  if (!first.empty()) d << " (first: " << first << ")";
  return {bad == 0, d.str()};
}

// The power MSO(2)^2: an element is one 2-bit mask per index point.
struct RefPower {
  using Element = std::array<Mask, 2>;
  static constexpr int kIndex = 2;

  Element value(const Term& t, const std::map<std::string, Element>& a) const {
    if (t.is_var()) return a.at(t.name());
    if (t.constant_value() == Const::bot) return {0, 0};
    return {1, 0};  // zero: the factor's 0 at the first index point, bot elsewhere
  }

  bool atom(const Formula& f, const std::map<std::string, Element>& a) const {
    const Element x = value(f.term(0), a);
    switch (f.kind()) {
      case K::atom: {
        int atoms = 0, empty = 0;
        for (int i = 0; i < kIndex; ++i) {
          atoms += ref_atom(x[i]) ? 1 : 0;
          empty += x[i] == 0 ? 1 : 0;
        }
        return atoms == 1 && atoms + empty == kIndex;
      }
      default: break;
    }
    const Element y = value(f.term(1), a);
    switch (f.kind()) {
      case K::eq: return x == y;
      case K::subset: return (x[0] & ~y[0]) == 0 && (x[1] & ~y[1]) == 0;
      case K::lt_exists: {
        Mask both = 0, xs = 0, ys = 0;
        for (int i = 0; i < kIndex; ++i) {
          if (ref_lt_exists(x[i], y[i])) both |= Mask{1} << i;
          if (x[i] != 0) xs |= Mask{1} << i;
          if (y[i] != 0) ys |= Mask{1} << i;
        }
        return both != 0 || ref_lt_exists(xs, ys);
      }
      default: return f.kind() == K::truth;
    }
  }

  bool holds(const Formula& f, std::map<std::string, Element>& a) const {
    switch (f.kind()) {
      case K::not_: return !holds(f.child(), a);
      case K::and_: return holds(f.child(0), a) && holds(f.child(1), a);
      case K::or_: return holds(f.child(0), a) || holds(f.child(1), a);
      case K::implies: return !holds(f.child(0), a) || holds(f.child(1), a);
      case K::iff: return holds(f.child(0), a) == holds(f.child(1), a);
      case K::exists:
      case K::forall: {
        const bool ex = f.kind() == K::exists;
        const std::string& v = f.bound_var();
        const auto it = a.find(v);
        const std::optional<Element> saved = it == a.end() ? std::nullopt : std::optional<Element>(it->second);
        bool result = !ex;
        for (Mask m0 = 0; m0 < 4 && result != ex; ++m0) {
          for (Mask m1 = 0; m1 < 4; ++m1) {
            a[v] = {m0, m1};
            if (holds(f.child(), a) == ex) {
              result = ex;
              break;
            }
          }
        }
        if (saved) {
          a[v] = *saved;
        } else {
          a.erase(v);
        }
        return result;
      }
      case K::falsity: return false;
      default: return atom(f, a);
    }
  }
};

Outcome criterion6() {
  generators::Rng rng(20240601);
  const auto o = generators::power_options();
  const models::PointAlgebra factor(2, models::PointAlgebra::Mode::mso);
  const fefvau::FinitePower power(factor, 2);
  const RefPower ref;
  std::size_t bad = 0, largest = 0;
  std::string first;
  for (int i = 0; i < 30; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const auto z = fefvau::fv_reduce(fefvau::to_power(f));
    largest = std::max(largest, z.size());
    for (Mask m0 = 0; m0 < 4; ++m0) {
      for (Mask m1 = 0; m1 < 4; ++m1) {
        std::map<std::string, RefPower::Element> a{{"Y", {m0, m1}}};
        const bool want = ref.holds(f, a);
        const bool got = power.holds(z, {{"Y", {m0, m1}}});
        if (want != got && bad++ == 0) first = syntax::print(f);
      }
    }
  }
  std::ostringstream d;
  d << "30 random formulas of depth <= 2, 16 power elements each; mismatches " << bad
    << ", largest reduction " << largest << " components";
  if (!first.empty()) d << " (first: " << first << ")";
  return {bad <= kAllowedMismatches, d.str()};
}

const std::vector<std::string>& parameter_corpus() {
  static const std::vector<std::string> corpus{
      "(= X bot)",
      "(= X X)",
      "(at X)",
      "(subset X Y)",
      "(ltE X Y)",
      "(= X zero)",
      "(not (= X Y))",
      "(or (at X) (= X bot))",
      "(and (ltE X Y) (not (at Y)))",
      "(exists Z (and (at Z) (ltE Z X)))",
      "(exists Z (and (at Z) (ltE X Z)))",
      "(exists Z (and (subset Z X) (not (= Z X))))",
      "(exists Y (and (subset X Y) (not (= X Y))))",
      "(forall Z (implies (at Z) (subset Z X)))",
      "(exists Z (and (ltE X Z) (ltE Z Y)))",
      "(exists Z (and (at Z) (and (ltE X Z) (not (subset Z Y)))))",
      "(forall Z (or (subset Z X) (not (subset Z Y))))",
      "(forall Z (exists W (and (subset Z W) (subset X W))))",
      "(forall Z (exists W (and (subset Z W) (subset X W))))",
      "(exists Z (forall W (implies (subset W X) (subset W Z))))",
  };
  return corpus;
}

Outcome criterion7() {
  const Signature sig = Signature::mo().with_extensions();
  const auto oracle = fefvau::grid_oracle();
  const std::vector<Rat> pool{Rat(0), Rat(1, 3), Rat(2, 3)};
  std::size_t instances = 0, stabilized = 0, bad = 0, route_bad = 0;
  std::string first;
  for (const auto& text : parameter_corpus()) {
    const Formula f = syntax::parse_formula(text, sig);
    std::vector<std::string> params;
    for (const auto& v : syntax::free_vars(f)) params.push_back(v);
    const auto t = fefvau::translate_with_parameters(f, params, oracle);
    const std::size_t tuples = std::size_t{1} << (3 * params.size());
    for (std::size_t code = 0; code < tuples; ++code) {
      std::vector<FinSet> values;
      models::Assignment<FinSet> direct;
      for (std::size_t i = 0; i < params.size(); ++i) {
        values.push_back(points_of(pool, (code >> (3 * i)) & 7));
        direct[params[i]] = values.back();
      }
      // <A> = {0} u entries, at most 3 points from this pool.
      FinSet index{Rat(0)};
      for (const auto& v : values) index = set_union(index, v);
      if (index.size() > 3) continue;
      ++instances;
      const auto report = eval::stabilize(f, direct, 4);
      if (!report.stabilized || !t.stabilized) continue;
      ++stabilized;
      // psi read in MSO(|<A>|) through the order isomorphism.
      models::Assignment<models::Mask> iso;
      for (std::size_t i = 0; i < params.size(); ++i) {
        models::Mask m = 0;
        for (const auto& p : values[i].points()) m |= models::Mask{1} << *index.index_of(p);
        iso[params[i]] = m;
      }
      const bool psi = eval::bruteforce_eval(index.size(), t.psi, iso);
      if (psi != fefvau::eval_translation(t, values)) ++route_bad;
      if (psi != report.verdict && bad++ == 0) first = text;
    }
  }
  const double ratio = instances == 0 ? 0.0 : static_cast<double>(stabilized) / static_cast<double>(instances);
  std::ostringstream d;
  d << parameter_corpus().size() << " formulas, " << instances << " parameter tuples; stabilized " << stabilized
    << " (" << static_cast<int>(ratio * 100 + 0.5) << "%, target " << static_cast<int>(kStabilizedTarget * 100)
    << "%); mismatches " << bad << ", route mismatches " << route_bad;
  if (!first.empty()) d << " (first: " << first << ")";
  return {bad == 0 && route_bad == 0 && ratio >= kStabilizedTarget, d.str()};
}

bool positive_shape(const Formula& f) {
  switch (f.kind()) {
    case K::not_:
    case K::forall:
    case K::implies:
    case K::iff: return false;
    case K::and_:
    case K::or_: return positive_shape(f.child(0)) && positive_shape(f.child(1));
    case K::exists: return positive_shape(f.child());
    default: break;
  }
  std::function<bool(const Term&)> clean = [&](const Term& t) {
    if (!t.is_apply()) return true;
    if (t.fn() == Fn::setminus) return false;
    return std::all_of(t.args().begin(), t.args().end(), clean);
  };
  return std::all_of(f.terms().begin(), f.terms().end(), clean);
}

Outcome criterion8() {
  generators::Rng rng(8);
  const auto o = generators::qf_wso_options();
  const RefChain ref{4};
  const models::WsoGrid g{FinSet(chain(4, 4))};
  std::size_t shape_bad = 0, bad = 0;
  std::string first;
  for (int i = 0; i < 100; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const Formula r = rewriting::qf_positive_rewrite(f);
    if (!positive_shape(r) || !syntax::is_positive_existential(r)) ++shape_bad;
    for (Mask a = 0; a < 16; ++a) {
      for (Mask b = 0; b < 16; ++b) {
        std::map<std::string, Mask> as{{"A", a}, {"B", b}};
        if (ref.holds(f, as) != eval::eval_in(g, r, {{"A", a}, {"B", b}}) && bad++ == 0) first = syntax::print(f);
      }
    }
  }
  std::ostringstream d;
  d << "100 random quantifier-free formulas, 256 assignments each; not positive " << shape_bad << ", mismatches "
    << bad;
  if (!first.empty()) d << " (first: " << first << ")";
  return {shape_bad == 0 && bad == 0, d.str()};
}

const std::vector<std::string>& finite_truths() {
  static const std::vector<std::string> corpus{
      "(exists X (forall Z (subset Z X)))",
      "(exists X (forall Z (subset X Z)))",
      "(forall X (forall Y (exists Z (and (subset X Z) (and (subset Y Z) (forall W (implies (and (subset X W) "
      "(subset Y W)) (subset Z W))))))))",
      "(forall X (or (forall Z (subset X Z)) (exists Z (and (at Z) (subset Z X)))))",
      "(forall X (forall Y (implies (ltE X Y) (exists Z (and (at Z) (subset Z X))))))",
      "(forall X (forall Y (implies (and (at X) (and (at Y) (not (= X Y)))) (or (ltE X Y) (ltE Y X)))))",
      "(forall X (not (and (at X) (ltE X X))))",
      "(forall X (forall Y (forall Z (implies (and (at X) (and (at Y) (and (at Z) (and (ltE X Y) (ltE Y Z))))) "
      "(ltE X Z)))))",
      "(forall X (implies (exists Z (and (at Z) (subset Z X))) (exists Z (and (at Z) (and (subset Z X) (not "
      "(exists W (and (at W) (and (subset W X) (ltE W Z))))))))))",
      "(forall X (implies (exists Z (and (at Z) (subset Z X))) (exists Z (and (at Z) (and (subset Z X) (not "
      "(exists W (and (at W) (and (subset W X) (ltE Z W))))))))))",
  };
  return corpus;
}

Outcome criterion9() {
  const Signature sig = Signature::mo();
  std::size_t not_finite = 0, failed = 0;
  std::string first;
  for (const auto& text : finite_truths()) {
    const Formula phi = syntax::parse_formula(text, sig);
    for (int n = 0; n <= 4; ++n) {
      std::map<std::string, Mask> a;
      if (!RefChain{n}.holds(phi, a)) ++not_finite;
    }
    const Formula rel = syntax::forall("Y", eval::relativize_element(phi, "Y"));
    if (!eval::grid_eval(rel, models::Assignment<FinSet>{}, 2).verdict && failed++ == 0) first = text;
  }
  std::ostringstream d;
  d << finite_truths().size() << " sentences; false in some MSO(n<=4): " << not_finite
    << "; relativized universal false at k=2: " << failed;
  if (!first.empty()) d << " (first: " << first << ")";
  return {not_finite == 0 && failed == 0, d.str()};
}

Outcome criterion10() {
  std::ifstream in(MCDLO_README_PATH);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text;
  for (char c : ss.str()) {
    const bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!space) {
      text += c;
    } else if (!text.empty() && text.back() != ' ') {
      text += ' ';
    }
  }
  const bool documented = text.find("model-complete") != std::string::npos &&
                          text.find("not directly reproducible") != std::string::npos;
  return {documented, documented ? "limitation documented in README (model-completeness is covered by criteria 5-8)"
                                 : "README does not document the model-completeness limitation"};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    double limit;
    Outcome (*run)();
  };
  const std::vector<Entry> entries{
      {1, "nonempty elimination", kLimit1, criterion1},
      {2, "msinv D-witness", kLimit2, criterion2},
      {3, "endpoint-pair lemma", kLimit3, criterion3},
      {4, "membership and inclusion on codes", kLimit4, criterion4},
      {5, "definitional equivalences", kLimit5, criterion5},
      {6, "generalised power reduction", kLimit6, criterion6},
      {7, "parameter translation pipeline", kLimit7, criterion7},
      {8, "positive existential rewriting", kLimit8, criterion8},
      {9, "relativisation soundness", kLimit9, criterion9},
      {10, "model-completeness limitation", 1.0, criterion10},
  };
  int unexpected = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= e.limit;
    const bool pass = o.pass && in_time;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << e.id << " (" << e.name << "): " << o.detail;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "; " << secs << " s of " << e.limit << " s";
    if (!pass && kKnownFindings.contains(e.id)) line << " [known finding]";
    std::cout << line.str() << std::endl;
    if (!pass && !kKnownFindings.contains(e.id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
