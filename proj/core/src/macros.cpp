#include "mcdlo/macros.hpp"

#include "mcdlo/transform.hpp"

namespace mcdlo::syntax {

namespace {

std::set<std::string> vars_of(std::initializer_list<Term> ts) {
  std::set<std::string> out;
  for (const auto& t : ts) {
    auto vs = free_vars(t);
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

}  // namespace

Formula is_bot(const Term& t, Signature sig) {
  if (sig.tag == SigTag::mo && !sig.extended) {
    const auto w = fresh_name("W", vars_of({t}));
    return lnot(exists(w, land(at(var(w)), subset(var(w), t))));
  }
  return eq(t, bot());
}

Formula is_nonempty(const Term& t, Signature sig) {
  if (sig.tag == SigTag::mo && !sig.extended) {
    const auto w = fresh_name("W", vars_of({t}));
    return exists(w, land(at(var(w)), subset(var(w), t)));
  }
  return neq(t, bot());
}

Formula is_top(const Term& t) {
  const auto w = fresh_name("W", vars_of({t}));
  return forall(w, implies(at(var(w)), subset(var(w), t)));
}

Formula subset_eq(const Term& a, const Term& b) { return eq(meet(a, b), a); }

Formula atom_expansion(const Term& t, Signature sig) {
  const auto avoid = vars_of({t});
  switch (sig.tag) {
    case SigTag::mo: {
      const auto v = fresh_name("V", avoid);
      const auto w = fresh_name("W", avoid);
      auto nonempty = exists(w, lnot(subset(t, var(w))));
      auto v_is_bot = forall(w, subset(var(v), var(w)));
      return land(nonempty, forall(v, implies(subset(var(v), t), lor(eq(var(v), t), v_is_bot))));
    }
    case SigTag::msofin: {
      const auto v = fresh_name("V", avoid);
      return land(neq(t, bot()),
                  forall(v, implies(subset_eq(var(v), t), lor(eq(var(v), t), eq(var(v), bot())))));
    }
    case SigTag::wso:
    case SigTag::lci:
      return land(neq(t, bot()), eq(t, min_term(t)));
  }
  return Formula::falsity();
}

Formula expand_atoms(const Formula& f, Signature sig) {
  using K = Formula::Kind;
  if (f.kind() == K::atom) return atom_expansion(f.term(), sig);
  if (f.is_atomic()) return f;
  std::vector<Formula> kids;
  for (const auto& c : f.children()) kids.push_back(expand_atoms(c, sig));
  switch (f.kind()) {
    case K::not_: return lnot(kids[0]);
    case K::exists:
    case K::forall: return Formula::quantifier(f.kind(), f.bound_var(), kids[0]);
    default: return Formula::binary(f.kind(), kids[0], kids[1]);
  }
}

Formula initial_segment(const Term& a) {
  return lor(eq(a, bot()), land(subset_eq(zero(), a), subset_eq(succ_inv(a), a)));
}

Formula complementary(const Term& a, const Term& b) {
  const Term both = unite(a, b);
  return land(eq(meet(a, b), bot()), eq(unite(succ_inv(both), zerostar()), both));
}

Formula lt_exists_expansion(const Term& a, const Term& b, Signature sig) {
  switch (sig.tag) {
    case SigTag::mo:
      return lt_exists(a, b);
    case SigTag::wso:
      return conjunction({neq(a, bot()), neq(b, bot()), neq(min_term(a), max_term(b)),
                          eq(min_term(unite(min_term(a), max_term(b))), min_term(a))});
    case SigTag::lci: {
      auto ordered = land(neq(min_term(a), max_term(b)),
                          eq(min_term(unite(min_term(a), max_term(b))), min_term(a)));
      return conjunction({neq(a, bot()), neq(b, bot()), lor(eq(max_term(b), bot()), ordered)});
    }
    case SigTag::msofin: {
      const auto avoid = vars_of({a, b});
      const auto i = fresh_name("A", avoid);
      const auto f = fresh_name("B", avoid);
      auto upper = exists(f, land(complementary(var(i), var(f)), neq(meet(b, var(f)), bot())));
      return exists(i, conjunction({initial_segment(var(i)), neq(meet(a, var(i)), bot()), upper}));
    }
  }
  return Formula::falsity();
}

}  // namespace mcdlo::syntax
