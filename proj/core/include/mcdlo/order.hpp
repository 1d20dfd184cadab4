#ifndef MCDLO_ORDER_HPP
#define MCDLO_ORDER_HPP

// Points of I = [0,1) over the rationals, finite point sets and finite
// unions of closed intervals.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace mcdlo {

using Rat = boost::rational<std::int64_t>;

Rat parse_rat(std::string_view text);
std::string format_rat(const Rat& r);

/// True when 0 <= r < 1.
bool in_unit_interval(const Rat& r);

/// A finite subset of I, stored strictly increasing.  The empty set is bottom.
class FinSet {
 public:
  FinSet() = default;
  /// Sorts and removes duplicates; throws DomainError for points outside [0,1).
  explicit FinSet(std::vector<Rat> points);
  FinSet(std::initializer_list<Rat> points);

  static FinSet singleton(const Rat& p) { return FinSet({p}); }

  const std::vector<Rat>& points() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(const Rat& p) const;
  std::optional<Rat> min() const;
  std::optional<Rat> max() const;

  /// Position of p in the sorted sequence, if present.
  std::optional<std::size_t> index_of(const Rat& p) const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend bool operator<(const FinSet& a, const FinSet& b) { return a.points_ < b.points_; }

 private:
  std::vector<Rat> points_;
};

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersection(const FinSet& a, const FinSet& b);
FinSet set_difference(const FinSet& a, const FinSet& b);
bool is_subset(const FinSet& a, const FinSet& b);

/// Singleton of the minimum (maximum) point, or bottom for the empty set.
FinSet min_of(const FinSet& a);
FinSet max_of(const FinSet& a);

/// Members of a whose successor inside a belongs to b.
FinSet sinv(const FinSet& a, const FinSet& b);

enum class Direction { successor, predecessor };

/// Successor or predecessor of i inside a.  Throws DomainError when i is not in a.
std::optional<Rat> suf_pred(const FinSet& a, const Rat& i, Direction dir);

/// A closed interval [left, right] of I, or [left, END) when right is empty.
struct Interval {
  Rat left;
  std::optional<Rat> right;

  bool bounded() const noexcept { return right.has_value(); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of closed intervals of I in canonical form: sorted, maximal,
/// pairwise separated by gaps, with at most one unbounded interval, placed last.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  /// Canonical form of an arbitrary list of intervals.  Intervals that overlap
  /// or share an endpoint are merged.  Throws DomainError when left > right.
  static IntervalUnion normalize(std::vector<Interval> raw);
  static IntervalUnion from_finset(const FinSet& s);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool bounded() const noexcept { return intervals_.empty() || intervals_.back().bounded(); }
  /// Every interval is degenerate, so the value is a finite set.
  bool is_finite() const;
  FinSet to_finset() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> intervals_;
};

enum class Side { left, right, both };
enum class Extreme { min, max };

FinSet endpoints(const IntervalUnion& u, Side side);
IntervalUnion iu_minmax(const IntervalUnion& u, Extreme which);
bool iu_member(const IntervalUnion& u, const Rat& p);
bool iu_subset(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion iu_union(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion iu_intersection(const IntervalUnion& u, const IntervalUnion& v);

std::string to_string(const FinSet& s);
std::string to_string(const IntervalUnion& u);

}  // namespace mcdlo

#endif  // MCDLO_ORDER_HPP
