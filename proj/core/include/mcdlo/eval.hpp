#ifndef MCDLO_EVAL_HPP
#define MCDLO_EVAL_HPP

// Quantifier evaluation.  MSO(n) is decided exactly by enumeration.  For W(I)
// and L(I) quantifiers range over a finite grid built from the parameters; the
// verdict is reported together with whether it agrees at budgets k and k+1.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mcdlo/models.hpp"
#include "mcdlo/syntax.hpp"

namespace mcdlo::eval {

using models::Assignment;
using models::Mask;

/// Truth in a finite mask algebra, quantifiers ranging over its universe.
bool eval_in(const models::SetAlgebra& alg, const syntax::Formula& f, const Assignment<Mask>& a);

/// Exact truth in MSO(n).  Throws DomainError when n exceeds `cap`.
bool bruteforce_eval(std::size_t n, const syntax::Formula& f, const Assignment<Mask>& a = {},
                     std::size_t cap = models::kDefaultMsoCap);
bool bruteforce_eval(const models::MsoFin& m, const syntax::Formula& f, const Assignment<Mask>& a = {});

struct GridSpec {
  FinSet seeds;  // parameter points together with 0
  int budget = 1;

  /// Seeds plus `budget` evenly spaced points inside each gap between
  /// consecutive seeds and above the largest seed.
  FinSet grid() const;
  std::size_t size() const { return seeds.size() * static_cast<std::size_t>(budget + 1); }
};

/// Grid-size cap: the MCDLO_GRID_CAP environment variable, default 14.
std::size_t grid_cap();

struct EvalReport {
  bool verdict = false;
  int budget_used = 0;
  bool stabilized = false;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

nlohmann::json to_json(const EvalReport& r);

/// Verdict at budget k alone.  Throws EvalError when the grid exceeds the cap.
bool grid_verdict(const syntax::Formula& f, const Assignment<FinSet>& a, int k);
bool grid_verdict(const syntax::Formula& f, const Assignment<IntervalUnion>& a, int k);

/// Verdict at k, stabilized when k+1 agrees.  If k+1 would exceed the grid
/// cap the report is unstabilized.  Quantifier-free formulas are evaluated
/// exactly and always count as stabilized.
EvalReport grid_eval(const syntax::Formula& f, const Assignment<FinSet>& a, int k);
EvalReport grid_eval(const syntax::Formula& f, const Assignment<IntervalUnion>& a, int k);

/// Least k <= kmax with agreeing verdicts at k and k+1; otherwise the verdict
/// at the largest budget tried, unstabilized.
EvalReport stabilize(const syntax::Formula& f, const Assignment<FinSet>& a, int kmax);
EvalReport stabilize(const syntax::Formula& f, const Assignment<IntervalUnion>& a, int kmax);

/// Guards every quantifier of an MO formula with X subset Y.  Bound
/// occurrences of `y` are renamed first; a free occurrence is an error.
syntax::Formula relativize_element(const syntax::Formula& f, const std::string& y);

/// Guards every quantifier with "all atoms of X lie in [i, j)", where the
/// variables i and j denote singletons.  Without j the window is [i, 1).
syntax::Formula relativize_interval(const syntax::Formula& f, const std::string& i,
                                    const std::optional<std::string>& j);

/// The atom window for [i, j): At(X), i below or equal to X, X below j.
syntax::Formula interval_window(const syntax::Term& x, const std::string& i,
                                const std::optional<std::string>& j);

}  // namespace mcdlo::eval

#endif  // MCDLO_EVAL_HPP
