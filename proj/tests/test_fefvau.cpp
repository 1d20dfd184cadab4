#include <doctest.h>

#include "mcdlo/fefvau.hpp"
#include "mcdlo/generators.hpp"
#include "mcdlo/parser.hpp"

using namespace mcdlo;
using namespace mcdlo::fefvau;
using syntax::Signature;

namespace {
Rat q(int64_t n, int64_t d = 1) { return Rat(n, d); }
syntax::Formula mo(const char* s) { return syntax::parse_formula(s, Signature::mo().with_extensions()); }
}  // namespace

TEST_CASE("index set and decomposition") {
  CHECK(funky({FinSet{q(1, 2)}, FinSet{}}) == FinSet{q(0), q(1, 2)});
  CHECK(funky({}) == FinSet{q(0)});
  CHECK(funky({FinSet{q(0)}}) == FinSet{q(0)});
  const PowerElement e = decompose({FinSet{q(1, 2)}}, FinSet{q(0), q(3, 4)});
  CHECK(e.index == FinSet{q(0), q(1, 2)});
  REQUIRE(e.components.size() == 2);
  CHECK(e.components[0] == FinSet{q(0)});
  CHECK(e.components[1] == FinSet{q(1, 2)});
  CHECK(reassemble(e) == FinSet{q(0), q(3, 4)});
}

TEST_CASE("parameters decompose to bot or the local zero") {
  const std::vector<FinSet> params{FinSet{q(1, 4), q(3, 4)}};
  const PowerElement e = decompose(params, params[0]);
  for (const auto& c : e.components) CHECK((c.empty() || c == FinSet{q(0)}));
}

TEST_CASE("supports") {
  const std::vector<FinSet> params{FinSet{q(1, 2)}};
  const PowerElement f = decompose(params, FinSet{q(3, 4)});
  const auto ne = syntax::parse_formula("(not (= X bot))", Signature::wso());
  CHECK(support(ne, {"X"}, {f}, 2).support == FinSet{q(1, 2)});
  const auto taut = syntax::parse_formula("(= X X)", Signature::wso());
  CHECK(support(taut, {"X"}, {f}, 2).support == f.index);
  const PowerElement z = decompose(params, FinSet{q(0), q(1, 2)});
  const auto is_zero = syntax::parse_formula("(= X zero)", Signature::wso());
  CHECK(support(is_zero, {"X"}, {z}, 2).support == z.index);
}

TEST_CASE("atomic sequences") {
  const auto seqs = atomic_sequences();
  CHECK(seqs.subset.size() == 1);
  CHECK(syntax::print(seqs.subset.index) == "(= Y1 top)");
  CHECK(seqs.lt_exists.size() == 3);
  CHECK(seqs.constant(syntax::var("A")).size() == 2);
}

TEST_CASE("reduction of atoms and negations") {
  const auto seqs = atomic_sequences();
  const auto r = PowerFormula::relation(seqs.subset, {syntax::var("X"), syntax::var("Y")});
  const auto z = fv_reduce(r);
  CHECK(z.size() == 1);
  const auto n = fv_reduce(PowerFormula::negate(r));
  CHECK(n.size() == 1);
  CHECK(n.index.kind() == syntax::Formula::Kind::not_);
}

TEST_CASE("reduction agrees with the power on random formulas") {
  generators::Rng rng(3);
  const models::PointAlgebra factor(2, models::PointAlgebra::Mode::mso);
  const FinitePower power(factor, 2);
  const auto elements = power.elements();
  CHECK(elements.size() == 16);
  const auto o = generators::power_options();
  for (int i = 0; i < 8; ++i) {
    const auto pf = to_power(generators::random_formula(rng, o));
    const auto z = fv_reduce(pf);
    for (const auto& e : elements) {
      const std::map<std::string, FinitePower::Element> a{{"Y", e}};
      REQUIRE(power.holds(pf, a) == power.holds(z, a));
    }
  }
}

TEST_CASE("translation with parameters") {
  const auto oracle = grid_oracle();
  const auto t = translate_with_parameters(mo("(= X bot)"), {"X"}, oracle);
  CHECK(t.stabilized);
  CHECK_FALSE(eval_translation(t, {FinSet{q(1, 2)}}));
  CHECK(eval_translation(t, {FinSet{}}));
  const auto taut = translate_with_parameters(mo("(= X X)"), {"X"}, oracle);
  CHECK(eval_translation(taut, {FinSet{q(1, 4), q(1, 2)}}));
  const auto sup = translate_with_parameters(mo("(exists Y (and (subset X Y) (not (= X Y))))"), {"X"}, oracle);
  CHECK(eval_translation(sup, {FinSet{q(0)}}));
}
