#include <doctest.h>

#include "mcdlo/eval.hpp"
#include "mcdlo/macros.hpp"
#include "mcdlo/parser.hpp"

using namespace mcdlo;
using namespace mcdlo::eval;
using syntax::Signature;

namespace {
syntax::Formula mo(const char* s) { return syntax::parse_formula(s, Signature::mo().with_extensions()); }
const models::Assignment<FinSet> none{};
}  // namespace

TEST_CASE("exact evaluation in MSO(n)") {
  const Signature m = Signature::msofin();
  CHECK(bruteforce_eval(2, syntax::parse_formula("(not (= zero zerostar))", m)));
  CHECK(bruteforce_eval(1, syntax::parse_formula("(= zero zerostar)", m)));
  CHECK_FALSE(bruteforce_eval(3, syntax::parse_formula("(exists X (and (= (sinv X) X) (not (= X bot))))", m)));
}

TEST_CASE("grid evaluation stabilises on simple sentences") {
  const EvalReport a = grid_eval(mo("(exists X (not (= X bot)))"), none, 1);
  CHECK(a.verdict);
  CHECK(a.stabilized);
  const EvalReport b = grid_eval(mo("(forall X (forall Y (or (subset X Y) (subset Y X))))"), none, 1);
  CHECK_FALSE(b.verdict);
  CHECK(b.stabilized);
  const EvalReport c = grid_eval(mo("(not (= bot bot))"), none, 3);
  CHECK_FALSE(c.verdict);
  CHECK(c.stabilized);
}

TEST_CASE("atoms and the zero constant") {
  const auto f = syntax::expand_atoms(syntax::parse_formula("(at zero)", Signature::wso()), Signature::wso());
  CHECK(grid_eval(f, none, 1).verdict);
}

TEST_CASE("quantifier-free formulas stabilise at once") {
  const auto f = syntax::parse_formula("(= (msinv A B) bot)", Signature::wso());
  const models::Assignment<FinSet> a{{"A", FinSet{Rat(0), Rat(1, 2)}}, {"B", FinSet{Rat(1, 2)}}};
  const EvalReport r = stabilize(f, a, 4);
  CHECK(r.stabilized);
  CHECK(r.budget_used == 1);
  CHECK_FALSE(r.verdict);
}

TEST_CASE("at least three members stabilises by budget 3") {
  const auto f = syntax::parse_formula(
      "(exists X (and (not (= (msinv X X) bot)) (not (= (msinv X (msinv X X)) bot))))", Signature::wso());
  const EvalReport r = stabilize(f, none, 4);
  CHECK(r.verdict);
  CHECK(r.stabilized);
  CHECK(r.budget_used <= 3);
}

TEST_CASE("element relativisation inserts one guard per quantifier") {
  const auto g = relativize_element(mo("(exists X (not (= X bot)))"), "Y");
  CHECK(g == mo("(exists X (and (subset X Y) (not (= X bot))))"));
  CHECK_THROWS(relativize_element(mo("(subset Y Y)"), "Y"));
}

TEST_CASE("relativised sentences agree with MSO(n)") {
  const auto phi = mo("(exists X (forall Z (subset Z X)))");
  const auto rel = mo("(forall Y (exists X (and (subset X Y) (forall Z (implies (subset Z Y) (subset Z X))))))");
  CHECK(relativize_element(phi, "Y") == rel.child());
  for (std::size_t n = 0; n <= 4; ++n) CHECK(bruteforce_eval(n, phi));
  CHECK(grid_eval(rel, none, 2).verdict);
}

TEST_CASE("interval relativisation keeps atoms in the window") {
  const auto w = interval_window(syntax::var("X"), "I", std::string("J"));
  const models::Assignment<FinSet> a{{"I", FinSet{Rat(1, 4)}}, {"J", FinSet{Rat(1, 2)}}, {"X", FinSet{Rat(1, 4)}}};
  CHECK(grid_verdict(w, a, 1));
  const models::Assignment<FinSet> b{{"I", FinSet{Rat(1, 4)}}, {"J", FinSet{Rat(1, 2)}}, {"X", FinSet{Rat(1, 2)}}};
  CHECK_FALSE(grid_verdict(w, b, 1));
}

TEST_CASE("grid spec places evenly spaced points") {
  const GridSpec g{FinSet{Rat(0), Rat(1, 2)}, 1};
  CHECK(g.grid() == FinSet{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)});
  CHECK(g.size() == 4);
}
