#ifndef MCDLO_MODELS_HPP
#define MCDLO_MODELS_HPP

// Concrete structures and their term/atomic semantics.
//
// MSO(n) lives on subsets of {0..n-1}; W(I) on finite subsets of [0,1)_Q;
// L(I) on finite unions of closed intervals.  For quantifier evaluation the
// eval module works on finite bitmask algebras: MSO(n) itself, and grid
// windows of W(I) and L(I) defined here.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcdlo/order.hpp"
#include "mcdlo/syntax.hpp"

namespace mcdlo::models {

using Mask = std::uint64_t;

template <class Value>
using Assignment = std::map<std::string, Value>;

/// A finite lattice of subsets of an ordered set of cells, encoded as masks.
/// Bit t stands for the t-th cell in increasing order.
class SetAlgebra {
 public:
  virtual ~SetAlgebra() = default;

  virtual const std::vector<Mask>& universe() const = 0;
  virtual const std::vector<Mask>& atoms() const = 0;
  /// Throws EvalError for a constant the structure does not interpret.
  virtual Mask constant(syntax::Const c) const = 0;
  /// `b` is ignored for unary symbols.  Throws EvalError when uninterpreted.
  virtual Mask apply(syntax::Fn fn, Mask a, Mask b) const = 0;

  bool subset(Mask a, Mask b) const { return (a & ~b) == 0; }
  /// Some member of a lies strictly below some member of b.
  bool lt_exists(Mask a, Mask b) const;
  virtual bool is_atom(Mask a) const;
  /// Whether a mask denotes an element of the algebra.
  virtual bool in_universe(Mask a) const = 0;
  virtual std::string name() const = 0;
};

/// Term and atomic-formula semantics over any mask algebra.  Throws
/// EvalError for unbound variables and uninterpreted symbols.
Mask eval_term(const SetAlgebra& alg, const syntax::Term& t, const Assignment<Mask>& a);
bool eval_atomic(const SetAlgebra& alg, const syntax::Formula& f, const Assignment<Mask>& a);

/// Subsets of a finite chain of points.  In `mso` mode this is MSO(n) with
/// 0 = {0}, 0* = {n-1}, top = everything and the unary successor preimage.
/// In `wso` mode it is a finite window of W(I): 0 is the first point (which
/// must be the rational 0), and top, 0*, unary sinv are uninterpreted.
class PointAlgebra : public SetAlgebra {
 public:
  enum class Mode { mso, wso };

  PointAlgebra(std::size_t points, Mode mode);

  /// Throws EvalError beyond kUniverseCap points.
  const std::vector<Mask>& universe() const override;
  const std::vector<Mask>& atoms() const override { return atoms_; }
  Mask constant(syntax::Const c) const override;
  Mask apply(syntax::Fn fn, Mask a, Mask b) const override;
  bool in_universe(Mask a) const override { return (a & ~full_) == 0; }
  std::string name() const override;

  std::size_t points() const noexcept { return points_; }
  Mask full() const noexcept { return full_; }

  /// Largest chain whose universe is materialised.
  static constexpr std::size_t kUniverseCap = 22;

 private:
  std::size_t points_;
  Mode mode_;
  Mask full_;
  std::vector<Mask> universe_;
  std::vector<Mask> atoms_;
};

/// Largest n accepted for MSO(n) by default.
inline constexpr std::size_t kDefaultMsoCap = 16;

/// MSO(n) as a structure on masks over {0..n-1}.  For n = 0 the constants
/// 0 and 0* both denote the only element, the empty set.
class MsoFin {
 public:
  explicit MsoFin(std::size_t n, std::size_t cap = kDefaultMsoCap);

  std::size_t n() const noexcept { return n_; }
  const PointAlgebra& algebra() const noexcept { return algebra_; }

  Mask eval_term(const syntax::Term& t, const Assignment<Mask>& a) const;
  bool eval_atomic(const syntax::Formula& f, const Assignment<Mask>& a) const;

  static Mask from_indices(std::initializer_list<int> idx);

 private:
  std::size_t n_;
  PointAlgebra algebra_;
};

/// W(I) with exact rational values.
class WsoStructure {
 public:
  FinSet eval_term(const syntax::Term& t, const Assignment<FinSet>& a) const;
  bool eval_atomic(const syntax::Formula& f, const Assignment<FinSet>& a) const;
};

/// L(I) with exact rational values.
class LciStructure {
 public:
  IntervalUnion eval_term(const syntax::Term& t, const Assignment<IntervalUnion>& a) const;
  bool eval_atomic(const syntax::Formula& f, const Assignment<IntervalUnion>& a) const;
};

/// The W(I) sets drawn from a finite grid of points, as a PointAlgebra.
class WsoGrid : public PointAlgebra {
 public:
  /// The grid must contain the rational 0.
  explicit WsoGrid(FinSet grid);

  const FinSet& grid() const noexcept { return grid_; }
  /// Throws EvalError when s has a point outside the grid.
  Mask encode(const FinSet& s) const;
  FinSet decode(Mask m) const;

 private:
  FinSet grid_;
};

/// The L(I) elements whose endpoints lie on a finite grid.  Cells alternate
/// points and open gaps: cell 2t is grid point t, cell 2t+1 the gap above it
/// (the last gap runs up to 1).  A gap may only be present together with the
/// points bounding it, which makes every valid mask a closed set.
class LciGrid : public SetAlgebra {
 public:
  explicit LciGrid(FinSet grid);

  static constexpr std::size_t kUniverseCap = 16;

  /// Throws EvalError beyond kUniverseCap grid points.
  const std::vector<Mask>& universe() const override;
  const std::vector<Mask>& atoms() const override { return atoms_; }
  Mask constant(syntax::Const c) const override;
  Mask apply(syntax::Fn fn, Mask a, Mask b) const override;
  bool is_atom(Mask a) const override;
  bool in_universe(Mask a) const override { return valid(a); }
  std::string name() const override;

  const FinSet& grid() const noexcept { return grid_; }
  bool valid(Mask m) const;
  Mask encode(const IntervalUnion& u) const;
  IntervalUnion decode(Mask m) const;

 private:
  FinSet grid_;
  std::size_t cells_;
  std::vector<Mask> universe_;
  std::vector<Mask> atoms_;
};

/// W(I) restricted to the subsets of a finite element A, which is a copy of
/// MSO(|A|): the k-th smallest point of A corresponds to k.
class ElementRestriction {
 public:
  explicit ElementRestriction(FinSet region);

  const FinSet& region() const noexcept { return region_; }
  std::size_t size() const noexcept { return region_.size(); }
  MsoFin iso_target() const { return MsoFin(region_.size(), 64); }

  /// Throws DomainError when b is not a subset of the region.
  Mask to_mso(const FinSet& b) const;
  FinSet from_mso(Mask m) const;

  /// MSO(Fin) symbols computed with W(I) operations inside the region:
  /// 0 = min(A), 0* = max(A), top = A, sinv(X) = msinv(A, X).
  FinSet eval_term(const syntax::Term& t, const Assignment<FinSet>& a) const;
  bool eval_atomic(const syntax::Formula& f, const Assignment<FinSet>& a) const;

 private:
  FinSet region_;
};

/// W(I) restricted to the finite subsets of [lo, hi) (hi empty means up to 1),
/// with the constant 0 reinterpreted as {lo}.  The affine map
/// x -> lo + (hi - lo) x is an isomorphism from W(I) onto it.
class IntervalRestriction {
 public:
  IntervalRestriction(Rat lo, std::optional<Rat> hi);

  const Rat& lo() const noexcept { return lo_; }
  Rat hi_or_one() const { return hi_ ? *hi_ : Rat(1); }
  const std::optional<Rat>& hi() const noexcept { return hi_; }

  bool contains(const Rat& p) const;
  bool contains(const FinSet& s) const;

  Rat embed(const Rat& x) const;
  Rat project(const Rat& y) const;
  FinSet embed(const FinSet& s) const;
  /// Throws DomainError when s leaves the interval.
  FinSet project(const FinSet& s) const;

  /// Restriction of this restriction to [lo2, hi2) given in local coordinates,
  /// expressed as a restriction of W(I).
  IntervalRestriction restrict(const Rat& lo2, const std::optional<Rat>& hi2) const;

  FinSet eval_term(const syntax::Term& t, const Assignment<FinSet>& a) const;
  bool eval_atomic(const syntax::Formula& f, const Assignment<FinSet>& a) const;

 private:
  Rat lo_;
  std::optional<Rat> hi_;
};

ElementRestriction restrict(const WsoStructure& w, FinSet region);
/// Throws DomainError unless lo < hi.
IntervalRestriction restrict(const WsoStructure& w, const Rat& lo, const std::optional<Rat>& hi);

}  // namespace mcdlo::models

#endif  // MCDLO_MODELS_HPP
