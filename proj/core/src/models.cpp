#include "mcdlo/models.hpp"

#include <bit>

#include "mcdlo/error.hpp"

namespace mcdlo::models {

using syntax::Const;
using syntax::Fn;
using syntax::Formula;
using syntax::Term;

namespace {

int lowest(Mask m) { return std::countr_zero(m); }
int highest(Mask m) { return 63 - std::countl_zero(m); }
Mask bit(std::size_t i) { return Mask{1} << i; }

[[noreturn]] void uninterpreted(std::string_view what, const std::string& where) {
  throw EvalError("'" + std::string(what) + "' is not interpreted in " + where);
}

template <class Value>
const Value& lookup(const Assignment<Value>& a, const std::string& name) {
  auto it = a.find(name);
  if (it == a.end()) throw EvalError("unbound variable '" + name + "'");
  return it->second;
}

// Successor-preimage on a chain of masked points: keep i in a when the next
// member of a after i lies in b.
Mask mask_sinv(Mask a, Mask b) {
  Mask out = 0;
  Mask rest = a;
  while (rest) {
    const int i = lowest(rest);
    rest &= rest - 1;
    if (rest && (b & bit(lowest(rest)))) out |= bit(i);
  }
  return out;
}

// Shared atomic semantics; the callbacks supply the structure.
template <class Value, class EvalTerm, class Subset, class LtE, class IsAtom>
bool atomic_with(const Formula& f, EvalTerm eval, Subset subset, LtE lt, IsAtom is_atom) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::truth: return true;
    case K::falsity: return false;
    case K::eq: return eval(f.term(0)) == eval(f.term(1));
    case K::subset: return subset(eval(f.term(0)), eval(f.term(1)));
    case K::lt_exists: return lt(eval(f.term(0)), eval(f.term(1)));
    case K::atom: return is_atom(eval(f.term(0)));
    default: throw EvalError("not an atomic formula: " + syntax::print(f));
  }
}

// W(I)-style term semantics, parametrised by the values of the constants and
// by the region used for the unary successor preimage.
struct WContext {
  std::string name;
  FinSet zero;
  std::optional<FinSet> zerostar;
  std::optional<FinSet> top;
  std::optional<FinSet> chain;  // enables unary sinv
};

FinSet w_eval(const WContext& ctx, const Term& t, const Assignment<FinSet>& a) {
  switch (t.kind()) {
    case Term::Kind::var: return lookup(a, t.name());
    case Term::Kind::constant:
      switch (t.constant_value()) {
        case Const::bot: return {};
        case Const::zero: return ctx.zero;
        case Const::zerostar:
          if (!ctx.zerostar) uninterpreted("zerostar", ctx.name);
          return *ctx.zerostar;
        case Const::top:
          if (!ctx.top) uninterpreted("top", ctx.name);
          return *ctx.top;
      }
      break;
    case Term::Kind::apply: {
      const FinSet x = w_eval(ctx, t.args()[0], a);
      switch (t.fn()) {
        case Fn::union_: return set_union(x, w_eval(ctx, t.args()[1], a));
        case Fn::inter: return set_intersection(x, w_eval(ctx, t.args()[1], a));
        case Fn::setminus: return set_difference(x, w_eval(ctx, t.args()[1], a));
        case Fn::sinv: return sinv(x, w_eval(ctx, t.args()[1], a));
        case Fn::min: return min_of(x);
        case Fn::max: return max_of(x);
        case Fn::succ_inv:
          if (!ctx.chain) uninterpreted("sinv", ctx.name);
          return sinv(*ctx.chain, x);
        case Fn::left:
        case Fn::right:
          uninterpreted(syntax::keyword(t.fn()), ctx.name);
      }
    }
  }
  throw EvalError("malformed term");
}

bool finset_lt(const FinSet& a, const FinSet& b) {
  return !a.empty() && !b.empty() && *a.min() < *b.max();
}

bool w_atomic(const WContext& ctx, const Formula& f, const Assignment<FinSet>& a) {
  return atomic_with<FinSet>(
      f, [&](const Term& t) { return w_eval(ctx, t, a); }, is_subset, finset_lt,
      [](const FinSet& s) { return s.size() == 1; });
}

}  // namespace

// ---------------------------------------------------------------- algebras

bool SetAlgebra::lt_exists(Mask a, Mask b) const {
  return a != 0 && b != 0 && lowest(a) < highest(b);
}

bool SetAlgebra::is_atom(Mask a) const { return std::has_single_bit(a); }

Mask eval_term(const SetAlgebra& alg, const Term& t, const Assignment<Mask>& a) {
  switch (t.kind()) {
    case Term::Kind::var: return lookup(a, t.name());
    case Term::Kind::constant: return alg.constant(t.constant_value());
    case Term::Kind::apply: {
      const Mask x = eval_term(alg, t.args()[0], a);
      const Mask y = t.args().size() > 1 ? eval_term(alg, t.args()[1], a) : 0;
      return alg.apply(t.fn(), x, y);
    }
  }
  throw EvalError("malformed term");
}

bool eval_atomic(const SetAlgebra& alg, const Formula& f, const Assignment<Mask>& a) {
  return atomic_with<Mask>(
      f, [&](const Term& t) { return eval_term(alg, t, a); },
      [&](Mask x, Mask y) { return alg.subset(x, y); },
      [&](Mask x, Mask y) { return alg.lt_exists(x, y); },
      [&](Mask x) { return alg.is_atom(x); });
}

PointAlgebra::PointAlgebra(std::size_t points, Mode mode)
    : points_(points), mode_(mode), full_(points >= 64 ? ~Mask{0} : bit(points) - 1) {
  if (points > 64) throw DomainError("at most 64 points fit in a mask");
  for (std::size_t i = 0; i < points; ++i) atoms_.push_back(bit(i));
  if (points <= kUniverseCap) {
    universe_.reserve(std::size_t{1} << points);
    for (Mask m = 0; m <= full_; ++m) universe_.push_back(m);
  }
}

const std::vector<Mask>& PointAlgebra::universe() const {
  if (points_ > kUniverseCap) {
    throw EvalError("universe of " + std::to_string(points_) + " points is too large to enumerate");
  }
  return universe_;
}

Mask PointAlgebra::constant(Const c) const {
  const bool mso = mode_ == Mode::mso;
  switch (c) {
    case Const::bot: return 0;
    case Const::zero: return points_ == 0 ? 0 : 1;
    case Const::zerostar:
      if (!mso) uninterpreted("zerostar", name());
      return points_ == 0 ? 0 : bit(points_ - 1);
    case Const::top:
      if (!mso) uninterpreted("top", name());
      return full_;
  }
  return 0;
}

Mask PointAlgebra::apply(Fn fn, Mask a, Mask b) const {
  switch (fn) {
    case Fn::union_: return a | b;
    case Fn::inter: return a & b;
    case Fn::setminus: return a & ~b;
    case Fn::sinv: return mask_sinv(a, b);
    case Fn::min: return a ? bit(lowest(a)) : 0;
    case Fn::max: return a ? bit(highest(a)) : 0;
    case Fn::left:
    case Fn::right: return a;
    case Fn::succ_inv:
      if (mode_ != Mode::mso) uninterpreted("sinv", name());
      return (a >> 1) & full_;
  }
  return 0;
}

std::string PointAlgebra::name() const {
  return (mode_ == Mode::mso ? "MSO(" : "W-grid(") + std::to_string(points_) + ")";
}

MsoFin::MsoFin(std::size_t n, std::size_t cap) : n_(n), algebra_(n, PointAlgebra::Mode::mso) {
  if (n > cap) {
    throw DomainError("MSO(" + std::to_string(n) + ") exceeds the size cap " + std::to_string(cap));
  }
}

Mask MsoFin::eval_term(const Term& t, const Assignment<Mask>& a) const {
  for (const auto& [name, m] : a) {
    if (m & ~algebra_.full()) throw DomainError("value of '" + name + "' leaves MSO(" + std::to_string(n_) + ")");
  }
  return models::eval_term(algebra_, t, a);
}

bool MsoFin::eval_atomic(const Formula& f, const Assignment<Mask>& a) const {
  return models::eval_atomic(algebra_, f, a);
}

Mask MsoFin::from_indices(std::initializer_list<int> idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(static_cast<std::size_t>(i));
  return m;
}

// ---------------------------------------------------------------- exact W(I), L(I)

FinSet WsoStructure::eval_term(const Term& t, const Assignment<FinSet>& a) const {
  static const WContext ctx{"W(I)", FinSet{Rat(0)}, std::nullopt, std::nullopt, std::nullopt};
  return w_eval(ctx, t, a);
}

bool WsoStructure::eval_atomic(const Formula& f, const Assignment<FinSet>& a) const {
  static const WContext ctx{"W(I)", FinSet{Rat(0)}, std::nullopt, std::nullopt, std::nullopt};
  return w_atomic(ctx, f, a);
}

IntervalUnion LciStructure::eval_term(const Term& t, const Assignment<IntervalUnion>& a) const {
  switch (t.kind()) {
    case Term::Kind::var: return lookup(a, t.name());
    case Term::Kind::constant:
      switch (t.constant_value()) {
        case Const::bot: return {};
        case Const::zero: return IntervalUnion::normalize({{Rat(0), Rat(0)}});
        default: uninterpreted(syntax::keyword(t.constant_value()), "L(I)");
      }
    case Term::Kind::apply: {
      const IntervalUnion x = eval_term(t.args()[0], a);
      switch (t.fn()) {
        case Fn::union_: return iu_union(x, eval_term(t.args()[1], a));
        case Fn::inter: return iu_intersection(x, eval_term(t.args()[1], a));
        case Fn::min: return iu_minmax(x, Extreme::min);
        case Fn::max: return iu_minmax(x, Extreme::max);
        case Fn::left: return IntervalUnion::from_finset(endpoints(x, Side::left));
        case Fn::right: return IntervalUnion::from_finset(endpoints(x, Side::right));
        default: uninterpreted(syntax::keyword(t.fn()), "L(I)");
      }
    }
  }
  throw EvalError("malformed term");
}

bool LciStructure::eval_atomic(const Formula& f, const Assignment<IntervalUnion>& a) const {
  auto lt = [](const IntervalUnion& x, const IntervalUnion& y) {
    if (x.empty() || y.empty()) return false;
    const auto& last = y.intervals().back();
    return !last.right || x.intervals().front().left < *last.right;
  };
  auto is_atom = [](const IntervalUnion& x) {
    return x.intervals().size() == 1 && x.intervals()[0].right == x.intervals()[0].left;
  };
  return atomic_with<IntervalUnion>(
      f, [&](const Term& t) { return eval_term(t, a); }, iu_subset, lt, is_atom);
}

// ---------------------------------------------------------------- grids

WsoGrid::WsoGrid(FinSet grid) : PointAlgebra(grid.size(), Mode::wso), grid_(std::move(grid)) {
  if (!grid_.contains(Rat(0))) throw DomainError("a W(I) grid must contain 0");
}

Mask WsoGrid::encode(const FinSet& s) const {
  Mask m = 0;
  for (const auto& p : s.points()) {
    auto idx = grid_.index_of(p);
    if (!idx) throw EvalError("point " + format_rat(p) + " is not on the grid");
    m |= bit(*idx);
  }
  return m;
}

FinSet WsoGrid::decode(Mask m) const {
  std::vector<Rat> pts;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (m & bit(i)) pts.push_back(grid_.points()[i]);
  }
  return FinSet(std::move(pts));
}

LciGrid::LciGrid(FinSet grid) : grid_(std::move(grid)), cells_(2 * grid_.size()) {
  if (!grid_.contains(Rat(0))) throw DomainError("an L(I) grid must contain 0");
  if (cells_ > 64) throw DomainError("at most 32 grid points fit in a mask");
  for (std::size_t t = 0; t < grid_.size(); ++t) atoms_.push_back(bit(2 * t));
  if (grid_.size() > kUniverseCap) return;

  // Depth-first over points; a gap is only chosen when its lower point is in
  // and, for inner gaps, the upper point is forced in as well.
  std::vector<Mask> out;
  const std::size_t g = grid_.size();
  auto rec = [&](auto&& self, std::size_t t, Mask acc, bool forced) -> void {
    if (t == g) {
      out.push_back(acc);
      return;
    }
    if (!forced) self(self, t + 1, acc, false);
    const Mask with_point = acc | bit(2 * t);
    self(self, t + 1, with_point, false);
    if (t + 1 < g) {
      self(self, t + 1, with_point | bit(2 * t + 1), true);
    } else {
      out.push_back(with_point | bit(2 * t + 1));
    }
  };
  if (g > 0) rec(rec, 0, 0, false);
  else out.push_back(0);
  std::sort(out.begin(), out.end());
  universe_ = std::move(out);
}

const std::vector<Mask>& LciGrid::universe() const {
  if (grid_.size() > kUniverseCap) {
    throw EvalError("universe over " + std::to_string(grid_.size()) + " grid points is too large to enumerate");
  }
  return universe_;
}

bool LciGrid::valid(Mask m) const {
  if (cells_ < 64 && (m >> cells_) != 0) return false;
  const std::size_t g = grid_.size();
  for (std::size_t t = 0; t < g; ++t) {
    if (!(m & bit(2 * t + 1))) continue;
    if (!(m & bit(2 * t))) return false;
    if (t + 1 < g && !(m & bit(2 * t + 2))) return false;
  }
  return true;
}

Mask LciGrid::constant(Const c) const {
  switch (c) {
    case Const::bot: return 0;
    case Const::zero: return 1;
    default: uninterpreted(syntax::keyword(c), name());
  }
}

Mask LciGrid::apply(Fn fn, Mask a, Mask b) const {
  const std::size_t g = grid_.size();
  switch (fn) {
    case Fn::union_: return a | b;
    case Fn::inter: return a & b;
    case Fn::min: return a ? bit(lowest(a)) : 0;
    case Fn::max: {
      if (!a) return 0;
      const int h = highest(a);
      return h % 2 == 0 ? bit(h) : 0;
    }
    case Fn::left:
    case Fn::right: {
      Mask out = 0;
      for (std::size_t t = 0; t < g; ++t) {
        if (!(a & bit(2 * t))) continue;
        const bool joined = fn == Fn::left ? (t > 0 && (a & bit(2 * t - 1))) : (a & bit(2 * t + 1)) != 0;
        if (!joined) out |= bit(2 * t);
      }
      return out;
    }
    default: uninterpreted(syntax::keyword(fn), name());
  }
}

bool LciGrid::is_atom(Mask a) const { return std::has_single_bit(a) && lowest(a) % 2 == 0; }

std::string LciGrid::name() const { return "L-grid(" + std::to_string(grid_.size()) + ")"; }

Mask LciGrid::encode(const IntervalUnion& u) const {
  auto index = [&](const Rat& p) {
    auto idx = grid_.index_of(p);
    if (!idx) throw EvalError("endpoint " + format_rat(p) + " is not on the grid");
    return *idx;
  };
  Mask m = 0;
  for (const auto& iv : u.intervals()) {
    const std::size_t from = index(iv.left);
    const std::size_t to = iv.right ? index(*iv.right) : grid_.size() - 1;
    for (std::size_t t = from; t <= to; ++t) {
      m |= bit(2 * t);
      if (t < to) m |= bit(2 * t + 1);
    }
    if (!iv.right) m |= bit(2 * to + 1);
  }
  return m;
}

IntervalUnion LciGrid::decode(Mask m) const {
  const auto& p = grid_.points();
  std::vector<Interval> raw;
  for (std::size_t t = 0; t < grid_.size(); ++t) {
    if (m & bit(2 * t)) raw.push_back({p[t], p[t]});
    if (m & bit(2 * t + 1)) {
      if (t + 1 < grid_.size()) raw.push_back({p[t], p[t + 1]});
      else raw.push_back({p[t], std::nullopt});
    }
  }
  return IntervalUnion::normalize(std::move(raw));
}

// ---------------------------------------------------------------- restrictions

ElementRestriction::ElementRestriction(FinSet region) : region_(std::move(region)) {
  if (region_.size() > 64) throw DomainError("region too large for a mask");
}

Mask ElementRestriction::to_mso(const FinSet& b) const {
  Mask m = 0;
  for (const auto& p : b.points()) {
    auto idx = region_.index_of(p);
    if (!idx) throw DomainError("point " + format_rat(p) + " lies outside the region");
    m |= bit(*idx);
  }
  return m;
}

FinSet ElementRestriction::from_mso(Mask m) const {
  std::vector<Rat> pts;
  for (std::size_t i = 0; i < region_.size(); ++i) {
    if (m & bit(i)) pts.push_back(region_.points()[i]);
  }
  if (region_.size() < 64 && (m >> region_.size()) != 0) {
    throw DomainError("mask has bits beyond the region");
  }
  return FinSet(std::move(pts));
}

FinSet ElementRestriction::eval_term(const Term& t, const Assignment<FinSet>& a) const {
  const WContext ctx{"W(I) restricted to " + to_string(region_), min_of(region_), max_of(region_),
                     region_, region_};
  return w_eval(ctx, t, a);
}

bool ElementRestriction::eval_atomic(const Formula& f, const Assignment<FinSet>& a) const {
  const WContext ctx{"W(I) restricted to " + to_string(region_), min_of(region_), max_of(region_),
                     region_, region_};
  return w_atomic(ctx, f, a);
}

IntervalRestriction::IntervalRestriction(Rat lo, std::optional<Rat> hi) : lo_(lo), hi_(hi) {
  if (!in_unit_interval(lo_)) throw DomainError("interval start outside [0,1)");
  if (hi_ && (*hi_ <= lo_ || *hi_ > Rat(1))) {
    throw DomainError("empty or ill-formed interval [" + format_rat(lo_) + ", " + format_rat(*hi_) + ")");
  }
}

bool IntervalRestriction::contains(const Rat& p) const { return lo_ <= p && p < hi_or_one(); }

bool IntervalRestriction::contains(const FinSet& s) const {
  return std::all_of(s.points().begin(), s.points().end(), [&](const Rat& p) { return contains(p); });
}

Rat IntervalRestriction::embed(const Rat& x) const { return lo_ + (hi_or_one() - lo_) * x; }

Rat IntervalRestriction::project(const Rat& y) const { return (y - lo_) / (hi_or_one() - lo_); }

FinSet IntervalRestriction::embed(const FinSet& s) const {
  std::vector<Rat> pts;
  for (const auto& p : s.points()) pts.push_back(embed(p));
  return FinSet(std::move(pts));
}

FinSet IntervalRestriction::project(const FinSet& s) const {
  if (!contains(s)) throw DomainError(to_string(s) + " leaves the interval");
  std::vector<Rat> pts;
  for (const auto& p : s.points()) pts.push_back(project(p));
  return FinSet(std::move(pts));
}

IntervalRestriction IntervalRestriction::restrict(const Rat& lo2, const std::optional<Rat>& hi2) const {
  if (!in_unit_interval(lo2)) throw DomainError("interval start outside [0,1)");
  return IntervalRestriction(embed(lo2), hi2 ? std::optional<Rat>(embed(*hi2)) : hi_);
}

FinSet IntervalRestriction::eval_term(const Term& t, const Assignment<FinSet>& a) const {
  for (const auto& [name, v] : a) {
    if (!contains(v)) throw DomainError("value of '" + name + "' leaves the interval");
  }
  const WContext ctx{"W(I) restricted to an interval", FinSet{lo_}, std::nullopt, std::nullopt,
                     std::nullopt};
  return w_eval(ctx, t, a);
}

bool IntervalRestriction::eval_atomic(const Formula& f, const Assignment<FinSet>& a) const {
  for (const auto& [name, v] : a) {
    if (!contains(v)) throw DomainError("value of '" + name + "' leaves the interval");
  }
  const WContext ctx{"W(I) restricted to an interval", FinSet{lo_}, std::nullopt, std::nullopt,
                     std::nullopt};
  return w_atomic(ctx, f, a);
}

ElementRestriction restrict(const WsoStructure&, FinSet region) { return ElementRestriction(std::move(region)); }

IntervalRestriction restrict(const WsoStructure&, const Rat& lo, const std::optional<Rat>& hi) {
  return IntervalRestriction(lo, hi);
}

}  // namespace mcdlo::models
