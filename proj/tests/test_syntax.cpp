#include <doctest.h>

#include "mcdlo/error.hpp"
#include "mcdlo/eval.hpp"
#include "mcdlo/generators.hpp"
#include "mcdlo/parser.hpp"
#include "mcdlo/transform.hpp"

using namespace mcdlo;
using namespace mcdlo::syntax;

TEST_CASE("parsing checks the signature") {
  const Formula f = parse_formula("(subset X Y)", Signature::mo());
  CHECK(f.kind() == Formula::Kind::subset);
  CHECK(f.term(0) == var("X"));
  const Formula g = parse_formula("(= (msinv A B) C)", Signature::wso());
  CHECK(g.kind() == Formula::Kind::eq);
  CHECK(g.term(0).fn() == Fn::sinv);
  CHECK_THROWS_AS(parse_formula("(subset X Y)", Signature::msofin()), ParseError);
  CHECK_THROWS_AS(parse_formula("(= X", Signature::mo()), ParseError);
}

TEST_CASE("free variables and substitution") {
  const Formula f = parse_formula("(exists Y (subset X Y))", Signature::mo());
  CHECK(free_vars(f) == std::set<std::string>{"X"});
  const Signature ext = Signature::mo().with_extensions();
  CHECK(substitute(parse_formula("(subset X Y)", ext), "X", bot()) == parse_formula("(subset bot Y)", ext));
  const Formula bound = parse_formula("(exists Y (subset X Y))", ext);
  CHECK(substitute(bound, "Y", zero()) == bound);
}

TEST_CASE("substitution avoids capture") {
  const Formula f = parse_formula("(exists Y (subset X Y))", Signature::mo());
  const Formula g = substitute(f, "X", var("Y"));
  CHECK(free_vars(g) == std::set<std::string>{"Y"});
  CHECK(g.bound_var() != "Y");
}

TEST_CASE("unnest hoists one application at a time") {
  const Signature w = Signature::wso();
  const Formula f = parse_formula("(= (msinv (union A zero) A) B)", w);
  const Formula u = unnest(f);
  CHECK(is_unnested(u));
  CHECK(u.kind() == Formula::Kind::exists);
  const Formula plain = parse_formula("(subset X Y)", Signature::mo());
  CHECK(unnest(plain) == plain);
}

TEST_CASE("unnest preserves truth in MSO(3)") {
  generators::Rng rng(5);
  generators::GenOptions o;
  o.sig = Signature::msofin();
  o.term_depth = 2;
  o.depth = 3;
  const models::PointAlgebra alg(3, models::PointAlgebra::Mode::mso);
  for (int i = 0; i < 50; ++i) {
    const Formula f = generators::random_formula(rng, o);
    const Formula u = unnest(f);
    for (models::Mask x : alg.universe()) {
      for (models::Mask y : alg.universe()) {
        const models::Assignment<models::Mask> a{{"X", x}, {"Y", y}};
        REQUIRE(eval::eval_in(alg, f, a) == eval::eval_in(alg, u, a));
      }
    }
  }
}

TEST_CASE("print and parse are inverse") {
  generators::Rng rng(6);
  generators::GenOptions o;
  o.sig = Signature::wso().with_extensions();
  o.term_depth = 2;
  o.depth = 3;
  for (int i = 0; i < 100; ++i) {
    const Formula f = generators::random_formula(rng, o);
    CHECK(parse_formula(print(f), o.sig) == f);
  }
}

TEST_CASE("syntactic classes") {
  const Signature w = Signature::wso();
  CHECK(is_positive_existential(parse_formula("(exists X (and (= X A) (= (union X B) B)))", w)));
  CHECK_FALSE(is_positive_existential(parse_formula("(not (= A B))", w)));
  CHECK(is_existential(parse_formula("(exists X (not (= X A)))", w)));
  CHECK_FALSE(is_existential(parse_formula("(forall X (= X A))", w)));
  CHECK(quantifier_depth(parse_formula("(exists X (forall Y (= X Y)))", w)) == 2);
}
