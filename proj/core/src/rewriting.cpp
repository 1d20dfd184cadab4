#include "mcdlo/rewriting.hpp"

#include <algorithm>
#include <functional>

#include "mcdlo/error.hpp"
#include "mcdlo/json_io.hpp"
#include "mcdlo/macros.hpp"
#include "mcdlo/transform.hpp"

namespace mcdlo::rewriting {

using syntax::Const;
using syntax::Fn;
using syntax::SigTag;
using K = Formula::Kind;
using namespace syntax;

namespace {

class Fresh {
 public:
  explicit Fresh(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}
  std::string operator()(const std::string& base) {
    auto n = fresh_name(base, avoid_);
    avoid_.insert(n);
    return n;
  }
  void reserve(const std::set<std::string>& names) { avoid_.insert(names.begin(), names.end()); }
  const std::set<std::string>& names() const { return avoid_; }

 private:
  std::set<std::string> avoid_;
};

Formula sub_eq(const Term& a, const Term& b) { return subset_eq(a, b); }

// Rebuilds f with every atomic subformula replaced by fn(atom).
Formula map_atoms(const Formula& f, const std::function<Formula(const Formula&)>& fn) {
  if (f.is_atomic()) return fn(f);
  switch (f.kind()) {
    case K::not_: return lnot(map_atoms(f.child(), fn));
    case K::exists:
    case K::forall: return Formula::quantifier(f.kind(), f.bound_var(), map_atoms(f.child(), fn));
    default: return Formula::binary(f.kind(), map_atoms(f.child(0), fn), map_atoms(f.child(1), fn));
  }
}

// Maps quantifiers through a callback while recursing.
Formula map_structure(const Formula& f, const std::function<Formula(const Formula&)>& atom,
                      const std::function<Formula(K, const std::string&, Formula)>& quant) {
  if (f.is_atomic()) return atom(f);
  switch (f.kind()) {
    case K::not_: return lnot(map_structure(f.child(), atom, quant));
    case K::exists:
    case K::forall: return quant(f.kind(), f.bound_var(), map_structure(f.child(), atom, quant));
    default:
      return Formula::binary(f.kind(), map_structure(f.child(0), atom, quant),
                             map_structure(f.child(1), atom, quant));
  }
}

std::optional<Term> find_setminus(const Term& t) {
  if (!t.is_apply()) return std::nullopt;
  for (const auto& a : t.args()) {
    if (auto inner = find_setminus(a)) return inner;
  }
  if (t.fn() == Fn::setminus) return t;
  return std::nullopt;
}

Term replace_subterm(const Term& t, const Term& target, const Term& with) {
  if (t == target) return with;
  if (!t.is_apply()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(replace_subterm(a, target, with));
  return Term::apply(t.fn(), std::move(args));
}

Formula rebuild_atom(const Formula& f, std::vector<Term> terms) {
  switch (f.kind()) {
    case K::eq: return eq(terms[0], terms[1]);
    case K::subset: return subset(terms[0], terms[1]);
    case K::lt_exists: return lt_exists(terms[0], terms[1]);
    case K::atom: return at(terms[0]);
    default: return f;
  }
}

Formula eliminate_in_atom(const Formula& f, Fresh& fresh) {
  for (const auto& t : f.terms()) {
    auto target = find_setminus(t);
    if (!target) continue;
    const Term a = target->args()[0];
    const Term b = target->args()[1];
    const std::string c = fresh("C");
    std::vector<Term> terms;
    for (const auto& s : f.terms()) terms.push_back(replace_subterm(s, *target, var(c)));
    const Formula rest = eliminate_in_atom(rebuild_atom(f, std::move(terms)), fresh);
    return exists(c, conjunction({eq(unite(meet(a, b), var(c)), a), eq(meet(b, var(c)), bot()), rest}));
  }
  return f;
}

Formula eliminate_setminus_with(const Formula& f, Fresh& fresh) {
  return map_atoms(f, [&](const Formula& a) { return eliminate_in_atom(a, fresh); });
}

Formula nnf(const Formula& f, bool neg) {
  switch (f.kind()) {
    case K::truth: return neg ? Formula::falsity() : f;
    case K::falsity: return neg ? Formula::truth() : f;
    case K::not_: return nnf(f.child(), !neg);
    case K::and_:
      return neg ? lor(nnf(f.child(0), true), nnf(f.child(1), true))
                 : land(nnf(f.child(0), false), nnf(f.child(1), false));
    case K::or_:
      return neg ? land(nnf(f.child(0), true), nnf(f.child(1), true))
                 : lor(nnf(f.child(0), false), nnf(f.child(1), false));
    case K::implies: return nnf(lor(lnot(f.child(0)), f.child(1)), neg);
    case K::iff: {
      const auto& a = f.child(0);
      const auto& b = f.child(1);
      if (neg) return lor(land(nnf(a, false), nnf(b, true)), land(nnf(a, true), nnf(b, false)));
      return lor(land(nnf(a, false), nnf(b, false)), land(nnf(a, true), nnf(b, true)));
    }
    case K::exists:
      return neg ? forall(f.bound_var(), nnf(f.child(), true)) : exists(f.bound_var(), nnf(f.child(), false));
    case K::forall:
      return neg ? exists(f.bound_var(), nnf(f.child(), true)) : forall(f.bound_var(), nnf(f.child(), false));
    default: return neg ? lnot(f) : f;
  }
}

// ---------------------------------------------------------------- MO definitions of the function graphs

Formula member(const Term& w, const Term& t) { return subset(w, t); }

// Some atom of `within` lies strictly between the atoms w and v.
Formula between(const Term& w, const Term& v, const std::optional<Term>& within, Fresh& fresh) {
  const std::string u = fresh("U");
  std::vector<Formula> parts{at(var(u))};
  if (within) parts.push_back(member(var(u), *within));
  parts.push_back(lt_exists(w, var(u)));
  parts.push_back(lt_exists(var(u), v));
  return exists(u, conjunction(std::move(parts)));
}

// Z = fn(A[, B]) as an MO formula, by the atoms below Z.
Formula graph_in_mo(Fn fn, const Term& z, const Term& a, const std::optional<Term>& b, Fresh& fresh) {
  const std::string w = fresh("W");
  const Term wt = var(w);
  Formula rhs = Formula::truth();
  switch (fn) {
    case Fn::union_: rhs = lor(member(wt, a), member(wt, *b)); break;
    case Fn::inter: rhs = land(member(wt, a), member(wt, *b)); break;
    case Fn::setminus: rhs = land(member(wt, a), lnot(member(wt, *b))); break;
    case Fn::succ_inv: {
      const std::string v = fresh("V");
      rhs = exists(v, conjunction({at(var(v)), member(var(v), a), lt_exists(wt, var(v)),
                                   lnot(between(wt, var(v), std::nullopt, fresh))}));
      break;
    }
    case Fn::sinv: {
      const std::string v = fresh("V");
      rhs = land(member(wt, a),
                 exists(v, conjunction({at(var(v)), member(var(v), a), member(var(v), *b), lt_exists(wt, var(v)),
                                        lnot(between(wt, var(v), a, fresh))})));
      break;
    }
    case Fn::min:
    case Fn::max: {
      const std::string u = fresh("U");
      const Formula below = fn == Fn::min ? lt_exists(var(u), wt) : lt_exists(wt, var(u));
      rhs = land(member(wt, a), lnot(exists(u, conjunction({at(var(u)), member(var(u), a), below}))));
      break;
    }
    default:
      throw Error("no MO definition for '" + std::string(keyword(fn)) + "'");
  }
  return forall(w, implies(at(wt), iff(member(wt, z), rhs)));
}

Formula constant_in_mo(Const c, const Term& k, Fresh& fresh) {
  const std::string w = fresh("W");
  const Term wt = var(w);
  const Formula is_empty = forall(w, subset(k, wt));
  auto no_atoms = [&] {
    const std::string u = fresh("U");
    return lnot(exists(u, at(var(u))));
  };
  switch (c) {
    case Const::bot: return is_empty;
    case Const::top: return forall(w, subset(wt, k));
    case Const::zero:
    case Const::zerostar: {
      const std::string u = fresh("U");
      const Formula beyond = c == Const::zero ? lt_exists(var(u), k) : lt_exists(k, var(u));
      const Formula extreme = land(at(k), lnot(exists(u, land(at(var(u)), beyond))));
      return lor(extreme, land(is_empty, no_atoms()));
    }
  }
  return Formula::falsity();
}

Formula atom_to_mo(const Formula& f, Fresh& fresh) {
  if (f.kind() == K::truth || f.kind() == K::falsity) return f;
  // Name constants first.
  std::vector<std::string> names;
  std::vector<Formula> defs;
  std::function<Term(const Term&)> name_constants = [&](const Term& t) -> Term {
    if (t.is_constant()) {
      const std::string k = fresh("K");
      names.push_back(k);
      defs.push_back(constant_in_mo(t.constant_value(), var(k), fresh));
      return var(k);
    }
    if (!t.is_apply()) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(name_constants(a));
    return Term::apply(t.fn(), std::move(args));
  };
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back(name_constants(t));

  Formula body = Formula::truth();
  switch (f.kind()) {
    case K::atom: body = atom_expansion(terms[0], Signature::mo()); break;
    case K::subset: body = subset(terms[0], terms[1]); break;
    case K::lt_exists: body = lt_exists(terms[0], terms[1]); break;
    case K::eq: {
      Term lhs = terms[0];
      Term rhs = terms[1];
      if (lhs.is_apply()) std::swap(lhs, rhs);
      if (!rhs.is_apply()) {
        body = eq(lhs, rhs);
      } else {
        std::optional<Term> b;
        if (rhs.args().size() > 1) b = rhs.args()[1];
        body = graph_in_mo(rhs.fn(), lhs, rhs.args()[0], b, fresh);
      }
      break;
    }
    default: break;
  }
  defs.push_back(body);
  return exists_all(names, conjunction(std::move(defs)));
}

}  // namespace

// ---------------------------------------------------------------- definitional equivalence

Formula defeq_translate(const Formula& f, Signature from, Signature to) {
  check_signature(f, from);
  const bool mo_from = from.tag == SigTag::mo;
  if (mo_from && (to.tag == SigTag::msofin || to.tag == SigTag::wso)) {
    const Signature target{to.tag, from.extended || to.extended};
    return map_atoms(f, [&](const Formula& a) -> Formula {
      switch (a.kind()) {
        case K::subset: return sub_eq(a.term(0), a.term(1));
        case K::lt_exists: return lt_exists_expansion(a.term(0), a.term(1), target);
        case K::atom: return atom_expansion(a.term(0), target);
        default: return a;
      }
    });
  }
  if ((from.tag == SigTag::msofin || from.tag == SigTag::wso) && to.tag == SigTag::mo) {
    const Formula g = unnest(f);
    Fresh fresh(all_vars(g));
    return map_atoms(g, [&](const Formula& a) { return atom_to_mo(a, fresh); });
  }
  throw Error("no definitional translation from " + std::string(to_string(from.tag)) + " to " +
              std::string(to_string(to.tag)));
}

// ---------------------------------------------------------------- positive existential W(I)

Formula negation_normal_form(const Formula& f) { return nnf(f, false); }

Formula eliminate_setminus(const Formula& f) {
  Fresh fresh(all_vars(f));
  return eliminate_setminus_with(f, fresh);
}

Formula qf_positive_rewrite(const Formula& f) {
  if (!is_quantifier_free(f)) throw Error("qf_positive_rewrite expects a quantifier-free formula");
  check_signature(f, Signature::wso().with_extensions());
  const Signature w = Signature::wso();
  const Formula expanded = map_atoms(f, [&](const Formula& a) -> Formula {
    switch (a.kind()) {
      case K::atom: return atom_expansion(a.term(0), w);
      case K::lt_exists: return lt_exists_expansion(a.term(0), a.term(1), w);
      case K::subset: return sub_eq(a.term(0), a.term(1));
      default: return a;
    }
  });
  const Formula n = nnf(expanded, false);
  Fresh fresh(all_vars(n));

  // A literal not(q1 = q2) holds iff some nonempty Y lies inside the symmetric
  // difference; Y is nonempty iff Y = 0 or 0 is below msinv(Y u 0, Y).
  std::function<Formula(const Formula&)> walk = [&](const Formula& g) -> Formula {
    if (g.kind() == K::not_) {
      const Formula& a = g.child();
      if (a.kind() == K::truth) return Formula::falsity();
      if (a.kind() == K::falsity) return Formula::truth();
      const std::string y = fresh("Y");
      const Term yt = var(y);
      const Formula nonempty = lor(eq(yt, zero()), sub_eq(zero(), sinv(unite(yt, zero()), yt)));
      return exists(y, land(nonempty, sub_eq(yt, delta(a.term(0), a.term(1)))));
    }
    if (g.is_atomic()) return g;
    return Formula::binary(g.kind(), walk(g.child(0)), walk(g.child(1)));
  };
  return eliminate_setminus_with(walk(n), fresh);
}

// ---------------------------------------------------------------- W(I) inside L(I)

Formula sinv_characterization(const Term& a, const Term& b, const Term& c, std::set<std::string> avoid) {
  for (const auto& t : {a, b, c}) {
    if (t.is_apply()) throw Error("sinv_characterization expects variables or constants");
    auto fv = free_vars(t);
    avoid.insert(fv.begin(), fv.end());
  }
  Fresh fresh(std::move(avoid));
  const Term e = var(fresh("E"));
  const Term d = var(fresh("D"));
  const Term min_a = min_term(a);
  const Term min_e = min_term(e);
  const Term ld = left_ends(d);
  // D must be unbounded: otherwise a final interval closing at c in C would
  // make c a right endpoint with no successor in B.
  const Formula frame = conjunction({eq(right_ends(d), c), sub_eq(c, a), sub_eq(a, d), eq(max_term(d), bot())});

  // l(D) = (E \ min E) u 0, without relative complement.
  const Formula drop_min = conjunction({eq(unite(ld, min_e), unite(e, zero())), sub_eq(zero(), ld),
                                        lor(eq(meet(ld, min_e), bot()), eq(min_e, zero()))});
  const Formula case1 = land(sub_eq(min_a, e), land(drop_min, frame));
  const Formula case2 = land(lnot(sub_eq(min_a, e)), land(eq(ld, unite(e, zero())), frame));

  const Formula reduced =
      exists(e.name(), land(eq(e, meet(b, a)), lor(land(eq(e, bot()), eq(c, bot())),
                                                   land(neq(e, bot()), exists(d.name(), lor(case1, case2))))));
  return disjunction({land(eq(a, bot()), eq(c, bot())), land(eq(b, bot()), eq(c, bot())),
                      conjunction({neq(a, bot()), neq(b, bot()), reduced})});
}

Formula w_in_l_translate(const Formula& f) {
  check_signature(f, Signature::wso().with_extensions());
  const Formula g = unnest(eliminate_setminus(f));
  const auto avoid = all_vars(g);
  auto finite = [](const std::string& x) { return eq(left_ends(var(x)), right_ends(var(x))); };
  return map_structure(
      g,
      [&](const Formula& a) -> Formula {
        if (a.kind() != K::eq) return a;
        Term lhs = a.term(0);
        Term rhs = a.term(1);
        if (lhs.is_apply()) std::swap(lhs, rhs);
        if (!rhs.is_apply() || rhs.fn() != Fn::sinv) return a;
        return sinv_characterization(rhs.args()[0], rhs.args()[1], lhs, avoid);
      },
      [&](K kind, const std::string& x, Formula body) {
        if (kind == K::exists) return exists(x, land(finite(x), body));
        return forall(x, implies(finite(x), body));
      });
}

// ---------------------------------------------------------------- L(I) inside W(I)

CodePair code_of(const IntervalUnion& u) { return {endpoints(u, Side::left), endpoints(u, Side::right)}; }

IntervalUnion decode(const CodePair& p) {
  if (p.l.empty() && p.r.empty()) return {};
  if (!code_domain(p.l, p.r)) throw DomainError("not the code of an element of L(I)");
  std::vector<Interval> raw;
  std::optional<Rat> open;
  const FinSet all = set_union(p.l, p.r);
  for (const auto& x : all.points()) {
    const bool left = p.l.contains(x);
    const bool right = p.r.contains(x);
    if (left && right) {
      raw.push_back({x, x});
    } else if (left) {
      open = x;
    } else {
      raw.push_back({*open, x});
      open.reset();
    }
  }
  if (open) raw.push_back({*open, std::nullopt});
  return IntervalUnion::normalize(std::move(raw));
}

nlohmann::json to_json(const CodePair& p) { return {{"l", finset_to_json(p.l)}, {"r", finset_to_json(p.r)}}; }

CodePair code_pair_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("l") || !j.contains("r")) throw ParseError("code pair needs 'l' and 'r'", 0);
  return {finset_from_json(j.at("l")), finset_from_json(j.at("r"))};
}

bool code_domain(const FinSet& b, const FinSet& c) {
  if (b.empty()) return false;
  const FinSet u = set_union(b, c);
  if (!b.contains(*u.min())) return false;
  const Rat top = *u.max();
  const FinSet b_only = set_difference(b, c);
  const FinSet steps = sinv(u, set_difference(c, b));
  if (c.contains(top)) return steps == b_only;
  return b_only.contains(top) && set_union(steps, FinSet{top}) == b_only;
}

Formula code_domain_formula(const Term& b, const Term& c) {
  const Term u = unite(b, c);
  const Term steps = sinv(u, setminus(c, b));
  const Term b_only = setminus(b, c);
  const Formula ends_right = land(sub_eq(max_term(u), c), eq(steps, b_only));
  const Formula ends_open = land(sub_eq(max_term(u), b_only), eq(unite(steps, max_term(u)), b_only));
  return conjunction({neq(b, bot()), sub_eq(min_term(u), b), lor(ends_right, ends_open)});
}

Formula code_or_empty(const Term& b, const Term& c) {
  return lor(land(eq(b, bot()), eq(c, bot())), code_domain_formula(b, c));
}

std::pair<std::string, std::string> code_names(const std::string& x) { return {x + "_l", x + "_r"}; }

Formula bounded_code(const Term& xl, const Term& xr) {
  const Term top = max_term(unite(xl, xr));
  return lor(eq(xl, bot()), sub_eq(top, xr));
}

Formula membership_code(const Term& xl, const Term& xr, const Term& z) {
  const Term boundary = unite(xl, xr);
  const Term with_z = unite(boundary, z);
  const Term pred = sinv(with_z, z);
  // The predecessor of z is a left endpoint only; the successor a right one only.
  const Formula after_left = land(sub_eq(pred, xl), eq(meet(pred, xr), bot()));
  const Formula before_right = land(neq(meet(sinv(with_z, xr), z), bot()), eq(meet(sinv(with_z, xl), z), bot()));
  const Formula inside = land(after_left, before_right);
  const Formula bdd = bounded_code(xl, xr);
  const Formula tail = lor(inside, eq(z, max_term(with_z)));
  return land(neq(boundary, bot()), disjunction({sub_eq(z, boundary), land(bdd, inside), land(lnot(bdd), tail)}));
}

Formula inclusion_code(const Term& xl, const Term& xr, const Term& yl, const Term& yr, std::set<std::string> avoid) {
  for (const auto& t : {xl, xr, yl, yr}) {
    auto fv = free_vars(t);
    avoid.insert(fv.begin(), fv.end());
  }
  const std::string z = fresh_name("Z", avoid);
  const Term zt = var(z);
  return forall(z, implies(at(zt), implies(membership_code(xl, xr, zt), membership_code(yl, yr, zt))));
}

Formula l_in_w_translate(const Formula& f) {
  check_signature(f, Signature::lci());
  const Formula g = unnest(f);
  std::set<std::string> avoid;
  for (const auto& v : all_vars(g)) {
    avoid.insert(v);
    auto [l, r] = code_names(v);
    avoid.insert(l);
    avoid.insert(r);
  }
  Fresh fresh(avoid);

  auto code = [](const Term& t) -> std::pair<Term, Term> {
    if (t.is_var()) {
      auto [l, r] = code_names(t.name());
      return {var(l), var(r)};
    }
    if (t.is_constant() && t.constant_value() == Const::bot) return {bot(), bot()};
    if (t.is_constant() && t.constant_value() == Const::zero) return {zero(), zero()};
    throw Error("cannot code term " + print(t));
  };
  auto same = [](const std::pair<Term, Term>& v, const Term& l, const Term& r) {
    return land(eq(v.first, l), eq(v.second, r));
  };

  auto atom = [&](const Formula& a) -> Formula {
    switch (a.kind()) {
      case K::truth:
      case K::falsity: return a;
      case K::atom: {
        const auto x = code(a.term(0));
        return land(eq(x.first, x.second), at(x.first));
      }
      case K::eq: break;
      default: throw Error("unexpected atom " + print(a));
    }
    Term lhs = a.term(0);
    Term rhs = a.term(1);
    if (lhs.is_apply()) std::swap(lhs, rhs);
    const auto v = code(lhs);
    if (!rhs.is_apply()) {
      const auto w = code(rhs);
      return same(v, w.first, w.second);
    }
    const auto x = code(rhs.args()[0]);
    switch (rhs.fn()) {
      case Fn::left: return same(v, x.first, x.first);
      case Fn::right: return same(v, x.second, x.second);
      case Fn::min: return same(v, min_term(x.first), min_term(x.first));
      case Fn::max: {
        const Term top = max_term(unite(x.first, x.second));
        const Formula bdd = bounded_code(x.first, x.second);
        return lor(land(bdd, same(v, top, top)), land(lnot(bdd), same(v, bot(), bot())));
      }
      case Fn::union_:
      case Fn::inter: {
        const auto y = code(rhs.args()[1]);
        const std::string z = fresh("Z");
        const Term zt = var(z);
        const Formula mx = membership_code(x.first, x.second, zt);
        const Formula my = membership_code(y.first, y.second, zt);
        const Formula rhs_mem = rhs.fn() == Fn::union_ ? lor(mx, my) : land(mx, my);
        return forall(z, implies(at(zt), iff(membership_code(v.first, v.second, zt), rhs_mem)));
      }
      default: throw Error("unexpected function in " + print(a));
    }
  };

  auto quant = [&](K kind, const std::string& x, Formula body) {
    auto [l, r] = code_names(x);
    const Formula dom = code_or_empty(var(l), var(r));
    if (kind == K::exists) return exists(l, exists(r, land(dom, body)));
    return forall(l, forall(r, implies(dom, body)));
  };
  return map_structure(g, atom, quant);
}

// ---------------------------------------------------------------- existential L(I)

Formula lci_existential_rewrite(const Formula& f) {
  if (!is_quantifier_free(f)) throw Error("lci_existential_rewrite expects a quantifier-free formula");
  check_signature(f, Signature::lci());
  const Formula expanded = map_atoms(f, [](const Formula& a) -> Formula {
    if (a.kind() == K::atom) return atom_expansion(a.term(0), Signature::lci());
    return a;
  });
  const Formula n = nnf(expanded, false);

  // Distinct elements have distinct codes, and a difference of finite code
  // sets is positive existential in W(I), hence existential in L(I).
  const Term ul = var("P1"), ur = var("P2"), vl = var("P3"), vr = var("P4");
  const Formula differ = w_in_l_translate(qf_positive_rewrite(lor(neq(ul, vl), neq(ur, vr))));

  std::function<Formula(const Formula&)> walk = [&](const Formula& g) -> Formula {
    if (g.kind() == K::not_) {
      const Formula& a = g.child();
      if (a.kind() == K::truth) return Formula::falsity();
      if (a.kind() == K::falsity) return Formula::truth();
      const Term& s = a.term(0);
      const Term& t = a.term(1);
      return substitute(differ, {{"P1", left_ends(s)}, {"P2", right_ends(s)}, {"P3", left_ends(t)},
                                 {"P4", right_ends(t)}});
    }
    if (g.is_atomic()) return g;
    return Formula::binary(g.kind(), walk(g.child(0)), walk(g.child(1)));
  };
  return walk(n);
}

}  // namespace mcdlo::rewriting
