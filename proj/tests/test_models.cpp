#include <doctest.h>

#include "mcdlo/error.hpp"
#include "mcdlo/models.hpp"
#include "mcdlo/parser.hpp"

using namespace mcdlo;
using namespace mcdlo::models;
using syntax::Signature;

namespace {
Rat q(int64_t n, int64_t d = 1) { return Rat(n, d); }
FinSet S(std::initializer_list<Rat> xs) { return FinSet(std::vector<Rat>(xs)); }
}  // namespace

TEST_CASE("term evaluation in the three kinds of model") {
  const MsoFin m(3);
  const auto t = syntax::parse_term("(sinv X)", Signature::msofin());
  CHECK(m.eval_term(t, {{"X", MsoFin::from_indices({1, 2})}}) == MsoFin::from_indices({0, 1}));

  const WsoStructure w;
  CHECK(w.eval_term(syntax::parse_term("(max X)", Signature::wso()), {{"X", S({q(1, 4), q(1, 2)})}}) ==
        S({q(1, 2)}));

  const LciStructure l;
  const IntervalUnion u = IntervalUnion::normalize({{q(1, 4), q(1, 2)}, {q(3, 4), std::nullopt}});
  CHECK(l.eval_term(syntax::parse_term("(l X)", Signature::lci()), {{"X", u}}) ==
        IntervalUnion::from_finset(S({q(1, 4), q(3, 4)})));
}

TEST_CASE("the existential order") {
  const WsoStructure w;
  const auto f = syntax::parse_formula("(ltE X Y)", Signature::mo());
  CHECK(w.eval_atomic(f, {{"X", S({q(0)})}, {"Y", S({q(1, 2)})}}));
  CHECK_FALSE(w.eval_atomic(f, {{"X", S({q(1, 2)})}, {"Y", S({q(1, 2)})}}));
  CHECK(w.eval_atomic(f, {{"X", S({q(0), q(3, 4)})}, {"Y", S({q(1, 2)})}}));
}

TEST_CASE("element restriction is a copy of MSO(n)") {
  const ElementRestriction r = restrict(WsoStructure{}, S({q(1, 4), q(1, 2)}));
  CHECK(r.size() == 2);
  CHECK(r.eval_term(syntax::zero(), {}) == S({q(1, 4)}));
  CHECK(r.eval_term(syntax::zerostar(), {}) == S({q(1, 2)}));
  CHECK(r.to_mso(S({q(1, 2)})) == 0b10);
  CHECK_THROWS_AS(r.to_mso(S({q(3, 4)})), DomainError);
  const ElementRestriction e = restrict(WsoStructure{}, FinSet{});
  CHECK(e.size() == 0);
}

TEST_CASE("interval restriction uses the affine map") {
  const IntervalRestriction r(q(1, 2), std::nullopt);
  CHECK(r.embed(q(1, 2)) == q(3, 4));
  CHECK(r.project(q(3, 4)) == q(1, 2));
  CHECK(r.eval_term(syntax::zero(), {}) == S({q(1, 2)}));
  CHECK_THROWS_AS(IntervalRestriction(q(1, 2), q(1, 2)), DomainError);
  const IntervalRestriction inner = r.restrict(q(0), q(1, 2));
  CHECK(inner.lo() == q(1, 2));
  CHECK(inner.hi() == q(3, 4));
}

TEST_CASE("point algebra in MSO mode") {
  const PointAlgebra a(3, PointAlgebra::Mode::mso);
  CHECK(a.universe().size() == 8);
  CHECK(a.atoms().size() == 3);
  CHECK(a.constant(syntax::Const::zero) == 0b001);
  CHECK(a.constant(syntax::Const::zerostar) == 0b100);
  CHECK(a.apply(syntax::Fn::succ_inv, 0b111, 0) == 0b011);
  CHECK(a.lt_exists(0b001, 0b100));
  CHECK_FALSE(a.lt_exists(0b100, 0b001));
}

TEST_CASE("LCI grid cells round-trip") {
  const LciGrid g(S({q(0), q(1, 2)}));
  for (Mask m : g.universe()) CHECK(g.encode(g.decode(m)) == m);
  const IntervalUnion tail = IntervalUnion::normalize({{q(1, 2), std::nullopt}});
  CHECK(g.decode(g.encode(tail)) == tail);
  CHECK(g.is_atom(g.encode(IntervalUnion::from_finset(S({q(0)})))));
  CHECK_FALSE(g.is_atom(g.encode(tail)));
}
