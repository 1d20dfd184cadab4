#include <doctest.h>

#include "mcdlo/error.hpp"
#include "mcdlo/eval.hpp"
#include "mcdlo/parser.hpp"
#include "mcdlo/rewriting.hpp"
#include "mcdlo/transform.hpp"

using namespace mcdlo;
using namespace mcdlo::rewriting;
using syntax::Signature;

namespace {
Rat q(int64_t n, int64_t d = 1) { return Rat(n, d); }
FinSet pool4() { return FinSet{q(0), q(1, 4), q(1, 2), q(3, 4)}; }
}  // namespace

TEST_CASE("inclusion becomes a lattice equation") {
  const auto f = syntax::parse_formula("(subset X Y)", Signature::mo());
  const auto g = defeq_translate(f, Signature::mo(), Signature::msofin());
  CHECK(syntax::print(g) == "(= (inter X Y) X)");
}

TEST_CASE("unsupported translation pairs are rejected") {
  const auto f = syntax::parse_formula("(= X Y)", Signature::lci());
  CHECK_THROWS_AS(defeq_translate(f, Signature::lci(), Signature::mo()), Error);
}

TEST_CASE("existential order in W(I) agrees with the direct relation") {
  const models::WsoGrid g(pool4());
  const auto f = syntax::parse_formula("(ltE X Y)", Signature::mo());
  const auto t = defeq_translate(f, Signature::mo(), Signature::wso());
  for (models::Mask x : g.universe()) {
    for (models::Mask y : g.universe()) {
      CHECK(g.lt_exists(x, y) == eval::eval_in(g, t, {{"X", x}, {"Y", y}}));
    }
  }
}

TEST_CASE("positive rewriting") {
  const Signature w = Signature::wso();
  const auto same = syntax::parse_formula("(= X Y)", w);
  CHECK(qf_positive_rewrite(same) == same);
  const auto ne = qf_positive_rewrite(syntax::parse_formula("(not (= X bot))", w));
  CHECK(syntax::is_positive_existential(ne));
  CHECK(ne.kind() == syntax::Formula::Kind::exists);
  CHECK_THROWS(qf_positive_rewrite(syntax::parse_formula("(exists X (= X Y))", w)));
}

TEST_CASE("relative complement elimination") {
  const Signature w = Signature::wso().with_extensions();
  const auto f = syntax::parse_formula("(= (setminus A B) C)", w);
  const auto g = eliminate_setminus(f);
  CHECK_NOTHROW(syntax::check_signature(g, Signature::wso()));
  const models::WsoGrid grid(pool4());
  for (models::Mask a : grid.universe()) {
    for (models::Mask b : grid.universe()) {
      const models::Assignment<models::Mask> as{{"A", a}, {"B", b}, {"C", a & ~b}};
      CHECK(eval::eval_in(grid, g, as));
    }
  }
}

TEST_CASE("endpoint codes") {
  CHECK(code_domain(FinSet{q(0)}, FinSet{q(0)}));
  CHECK(code_domain(FinSet{q(1, 4)}, FinSet{}));
  CHECK_FALSE(code_domain(FinSet{q(1, 2)}, FinSet{q(1, 4)}));
  CHECK_FALSE(code_domain(FinSet{}, FinSet{}));
  const IntervalUnion u = IntervalUnion::normalize({{q(0), q(1, 2)}, {q(3, 4), std::nullopt}});
  const CodePair c = code_of(u);
  CHECK(c.l == FinSet{q(0), q(3, 4)});
  CHECK(c.r == FinSet{q(1, 2)});
  CHECK(decode(c) == u);
  CHECK(code_pair_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(decode(CodePair{FinSet{q(1, 2)}, FinSet{q(1, 4)}}), DomainError);
}

TEST_CASE("msinv compiles to an existential LCI formula") {
  const auto f = syntax::parse_formula("(= (msinv A B) C)", Signature::wso());
  const auto g = w_in_l_translate(f);
  CHECK(syntax::is_existential(g));
  const models::LciGrid lg(FinSet{q(0), q(1, 2)});
  const auto enc = [&](const FinSet& s) { return lg.encode(IntervalUnion::from_finset(s)); };
  // A = bot forces C = bot.
  CHECK(eval::eval_in(lg, g, {{"A", 0}, {"B", enc(FinSet{q(0)})}, {"C", 0}}));
  CHECK_FALSE(eval::eval_in(lg, g, {{"A", 0}, {"B", enc(FinSet{q(0)})}, {"C", enc(FinSet{q(0)})}}));
  const auto reduct = syntax::parse_formula("(= (union X Y) Z)", Signature::wso());
  CHECK(w_in_l_translate(reduct) == reduct);
}

TEST_CASE("boundedness on codes") {
  const models::WsoGrid g(pool4());
  const auto bdd = bounded_code(syntax::var("L"), syntax::var("R"));
  const auto enc = [&](const IntervalUnion& u) {
    const CodePair c = code_of(u);
    return models::Assignment<models::Mask>{{"L", g.encode(c.l)}, {"R", g.encode(c.r)}};
  };
  CHECK(eval::eval_in(g, bdd, enc(IntervalUnion{})));
  CHECK(eval::eval_in(g, bdd, enc(IntervalUnion::normalize({{q(0), q(1, 4)}}))));
  CHECK_FALSE(eval::eval_in(g, bdd, enc(IntervalUnion::normalize({{q(1, 4), std::nullopt}}))));
}

TEST_CASE("LCI formulas read through codes") {
  const auto f = syntax::parse_formula("(= (l X) Y)", Signature::lci());
  const auto g = l_in_w_translate(f);
  const auto fv = syntax::free_vars(g);
  CHECK(fv == std::set<std::string>{"X_l", "Y_l", "Y_r"});
}

TEST_CASE("existential rewriting in L(I)") {
  const Signature l = Signature::lci();
  const auto ne = lci_existential_rewrite(syntax::parse_formula("(not (= X bot))", l));
  CHECK(syntax::is_existential(ne));
  const models::LciGrid lg(FinSet{q(0), q(1, 2)});
  for (models::Mask m : lg.universe()) CHECK(eval::eval_in(lg, ne, {{"X", m}}) == (m != 0));
  const auto same = syntax::parse_formula("(= X Y)", l);
  CHECK(lci_existential_rewrite(same) == same);
}
