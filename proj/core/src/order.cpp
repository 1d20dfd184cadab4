#include "mcdlo/order.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>

#include "mcdlo/error.hpp"

namespace mcdlo {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw DomainError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(text, text));
  }
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) {
    throw DomainError("rational '" + std::string(text) + "' needs a positive denominator");
  }
  return Rat(num, den);
}

std::string format_rat(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool in_unit_interval(const Rat& r) { return r >= 0 && r < 1; }

FinSet::FinSet(std::vector<Rat> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (!in_unit_interval(p)) {
      throw DomainError("point " + format_rat(p) + " lies outside [0,1)");
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

FinSet::FinSet(std::initializer_list<Rat> points) : FinSet(std::vector<Rat>(points)) {}

bool FinSet::contains(const Rat& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::optional<Rat> FinSet::min() const {
  if (points_.empty()) return std::nullopt;
  return points_.front();
}

std::optional<Rat> FinSet::max() const {
  if (points_.empty()) return std::nullopt;
  return points_.back();
}

std::optional<std::size_t> FinSet::index_of(const Rat& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<Rat> out;
  std::set_union(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                 std::back_inserter(out));
  return FinSet(std::move(out));
}

FinSet set_intersection(const FinSet& a, const FinSet& b) {
  std::vector<Rat> out;
  std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                        b.points().end(), std::back_inserter(out));
  return FinSet(std::move(out));
}

FinSet set_difference(const FinSet& a, const FinSet& b) {
  std::vector<Rat> out;
  std::set_difference(a.points().begin(), a.points().end(), b.points().begin(),
                      b.points().end(), std::back_inserter(out));
  return FinSet(std::move(out));
}

bool is_subset(const FinSet& a, const FinSet& b) {
  return std::includes(b.points().begin(), b.points().end(), a.points().begin(),
                       a.points().end());
}

FinSet min_of(const FinSet& a) {
  if (a.empty()) return {};
  return FinSet::singleton(*a.min());
}

FinSet max_of(const FinSet& a) {
  if (a.empty()) return {};
  return FinSet::singleton(*a.max());
}

FinSet sinv(const FinSet& a, const FinSet& b) {
  std::vector<Rat> out;
  const auto& pts = a.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (b.contains(pts[i + 1])) out.push_back(pts[i]);
  }
  return FinSet(std::move(out));
}

std::optional<Rat> suf_pred(const FinSet& a, const Rat& i, Direction dir) {
  const auto idx = a.index_of(i);
  if (!idx) {
    throw DomainError("point " + format_rat(i) + " is not a member of " + to_string(a));
  }
  if (dir == Direction::successor) {
    if (*idx + 1 >= a.size()) return std::nullopt;
    return a.points()[*idx + 1];
  }
  if (*idx == 0) return std::nullopt;
  return a.points()[*idx - 1];
}

IntervalUnion IntervalUnion::normalize(std::vector<Interval> raw) {
  for (const auto& iv : raw) {
    if (!in_unit_interval(iv.left) || (iv.right && !in_unit_interval(*iv.right))) {
      throw DomainError("interval endpoint outside [0,1)");
    }
    if (iv.right && iv.left > *iv.right) {
      throw DomainError("interval [" + format_rat(iv.left) + "," + format_rat(*iv.right) +
                        "] has left > right");
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const Interval& x, const Interval& y) { return x.left < y.left; });
  IntervalUnion out;
  for (const auto& iv : raw) {
    if (!out.intervals_.empty()) {
      auto& last = out.intervals_.back();
      if (!last.right) continue;  // unbounded interval absorbs everything to its right
      if (iv.left <= *last.right) {
        if (!iv.right) {
          last.right.reset();
        } else if (*iv.right > *last.right) {
          last.right = iv.right;
        }
        continue;
      }
    }
    out.intervals_.push_back(iv);
  }
  return out;
}

IntervalUnion IntervalUnion::from_finset(const FinSet& s) {
  std::vector<Interval> raw;
  raw.reserve(s.size());
  for (const auto& p : s.points()) raw.push_back({p, p});
  return normalize(std::move(raw));
}

bool IntervalUnion::is_finite() const {
  return std::all_of(intervals_.begin(), intervals_.end(),
                     [](const Interval& iv) { return iv.right && *iv.right == iv.left; });
}

FinSet IntervalUnion::to_finset() const {
  if (!is_finite()) throw DomainError("interval union " + to_string(*this) + " is not finite");
  std::vector<Rat> pts;
  for (const auto& iv : intervals_) pts.push_back(iv.left);
  return FinSet(std::move(pts));
}

FinSet endpoints(const IntervalUnion& u, Side side) {
  std::vector<Rat> pts;
  for (const auto& iv : u.intervals()) {
    if (side != Side::right) pts.push_back(iv.left);
    if (side != Side::left && iv.right) pts.push_back(*iv.right);
  }
  return FinSet(std::move(pts));
}

IntervalUnion iu_minmax(const IntervalUnion& u, Extreme which) {
  if (u.empty()) return {};
  if (which == Extreme::min) {
    const auto p = u.intervals().front().left;
    return IntervalUnion::normalize({{p, p}});
  }
  const auto& last = u.intervals().back();
  if (!last.right) return {};
  return IntervalUnion::normalize({{*last.right, *last.right}});
}

bool iu_member(const IntervalUnion& u, const Rat& p) {
  return std::any_of(u.intervals().begin(), u.intervals().end(), [&](const Interval& iv) {
    return iv.left <= p && (!iv.right || p <= *iv.right);
  });
}

bool iu_subset(const IntervalUnion& u, const IntervalUnion& v) {
  // A connected piece of u must sit inside a single maximal piece of v.
  return std::all_of(u.intervals().begin(), u.intervals().end(), [&](const Interval& a) {
    return std::any_of(v.intervals().begin(), v.intervals().end(), [&](const Interval& b) {
      if (b.left > a.left) return false;
      if (!b.right) return true;
      return a.right && *a.right <= *b.right;
    });
  });
}

IntervalUnion iu_union(const IntervalUnion& u, const IntervalUnion& v) {
  std::vector<Interval> raw = u.intervals();
  raw.insert(raw.end(), v.intervals().begin(), v.intervals().end());
  return IntervalUnion::normalize(std::move(raw));
}

IntervalUnion iu_intersection(const IntervalUnion& u, const IntervalUnion& v) {
  std::vector<Interval> raw;
  for (const auto& a : u.intervals()) {
    for (const auto& b : v.intervals()) {
      const Rat lo = std::max(a.left, b.left);
      std::optional<Rat> hi;
      if (a.right && b.right) {
        hi = std::min(*a.right, *b.right);
      } else if (a.right) {
        hi = a.right;
      } else if (b.right) {
        hi = b.right;
      }
      if (hi && lo > *hi) continue;
      raw.push_back({lo, hi});
    }
  }
  return IntervalUnion::normalize(std::move(raw));
}

std::string to_string(const FinSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << format_rat(s.points()[i]);
  }
  os << '}';
  return os.str();
}

std::string to_string(const IntervalUnion& u) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < u.intervals().size(); ++i) {
    const auto& iv = u.intervals()[i];
    if (i) os << ", ";
    os << '[' << format_rat(iv.left) << ',' << (iv.right ? format_rat(*iv.right) : "inf") << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace mcdlo
