#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrpi/errors.hpp"
#include "arrpi/rational.hpp"

namespace arrpi {

// A non-vertical line y = a*x + b with exact rational coefficients.
struct Line {
  std::string label;
  Rational a;  // slope
  Rational b;  // y-intercept

  Rational y_at(const Rational& x) const { return a * x + b; }
  bool same_geometry(const Line& o) const { return a == o.a && b == o.b; }
};

struct Point {
  Rational x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// The unique intersection of two distinct non-parallel lines.
inline Point intersect(const Line& l1, const Line& l2) {
  if (l1.same_geometry(l2))
    throw IdenticalLinesError("lines '" + l1.label + "' and '" + l2.label + "' are identical");
  if (l1.a == l2.a)
    throw ParallelLinesError("lines '" + l1.label + "' and '" + l2.label +
                             "' are parallel (slope " + to_string(l1.a) + ")");
  Rational x = (l2.b - l1.b) / (l1.a - l2.a);
  return Point{x, l1.y_at(x)};
}

// An ordered list of pairwise non-parallel, pairwise distinct lines. Distinct
// slopes guarantee that every pair of lines meets in the affine plane.
class Arrangement {
 public:
  explicit Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
    if (lines_.empty()) throw ParseError("arrangement must contain at least one line");
    for (size_t i = 0; i < lines_.size(); ++i) {
      for (size_t j = i + 1; j < lines_.size(); ++j) {
        if (lines_[i].label == lines_[j].label)
          throw ParseError("duplicate line label '" + lines_[i].label + "'");
        if (lines_[i].same_geometry(lines_[j]))
          throw IdenticalLinesError("lines '" + lines_[i].label + "' and '" + lines_[j].label +
                                    "' coincide");
        if (lines_[i].a == lines_[j].a)
          throw ParallelLinesError("lines '" + lines_[i].label + "' and '" + lines_[j].label +
                                   "' are parallel; they meet only at infinity");
      }
    }
  }

  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(size_t i) const { return lines_[i]; }
  int size() const { return static_cast<int>(lines_.size()); }

 private:
  std::vector<Line> lines_;
};

// The block of consecutive fiber positions k..l occupied, just right of a
// singular point, by the lines through it.
struct LefschetzPair {
  int k = 0;
  int l = 0;
  bool operator==(const LefschetzPair& o) const { return k == o.k && l == o.l; }
  int width() const { return l - k + 1; }
};

struct SingularPoint {
  Rational x, y;
  std::vector<std::string> incident;  // labels of lines through the point, input order
  int multiplicity = 0;               // = incident.size(), >= 2
  int index = 0;                      // 1-based; index 1 has the largest x
  LefschetzPair pair;                 // filled by lefschetz_pairs()
};

namespace detail {

// Groups all pairwise intersections by exact coordinates. Works whether or
// not the arrangement is x-generic.
inline std::vector<SingularPoint> collect_points(const Arrangement& arr) {
  std::map<std::pair<Rational, Rational>, std::vector<int>> groups;
  const auto& ls = arr.lines();
  for (size_t i = 0; i < ls.size(); ++i) {
    for (size_t j = i + 1; j < ls.size(); ++j) {
      Point p = intersect(ls[i], ls[j]);
      auto& g = groups[{p.x, p.y}];
      if (std::find(g.begin(), g.end(), (int)i) == g.end()) g.push_back((int)i);
      if (std::find(g.begin(), g.end(), (int)j) == g.end()) g.push_back((int)j);
    }
  }
  std::vector<SingularPoint> pts;
  pts.reserve(groups.size());
  for (const auto& [xy, idxs] : groups) {
    SingularPoint sp;
    sp.x = xy.first;
    sp.y = xy.second;
    for (int i : idxs) sp.incident.push_back(ls[i].label);
    sp.multiplicity = static_cast<int>(idxs.size());
    pts.push_back(std::move(sp));
  }
  // Largest x first; ties broken by y only so the NotGeneric report below is
  // deterministic.
  std::sort(pts.begin(), pts.end(), [](const SingularPoint& p, const SingularPoint& q) {
    if (p.x != q.x) return p.x > q.x;
    return p.y > q.y;
  });
  return pts;
}

}  // namespace detail

// All singular points sorted by strictly decreasing x and indexed 1..q.
// Throws NotGenericError if two distinct points share an x-coordinate.
inline std::vector<SingularPoint> singular_points(const Arrangement& arr) {
  std::vector<SingularPoint> pts = detail::collect_points(arr);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].x == pts[i + 1].x)
      throw NotGenericError("two singular points share x = " + to_string(pts[i].x) +
                            "; shear the arrangement first");
  }
  for (size_t i = 0; i < pts.size(); ++i) pts[i].index = static_cast<int>(i) + 1;
  return pts;
}

// Record of the coordinate change (x, y) -> (x + c*y, y).
struct ShearTransform {
  Rational c;
  bool is_identity() const { return c == 0; }
};

inline Line apply_shear(const Line& l, const Rational& c) {
  Rational d = 1 + c * l.a;
  if (d == 0)
    throw InternalInconsistencyError("shear c = " + to_string(c) + " makes line '" + l.label +
                                     "' vertical");
  return Line{l.label, l.a / d, l.b / d};
}

// Finds the first shear in the sequence c = 0, 1, -1, 1/2, -1/2, ... that
// keeps every line non-vertical and separates all singular x-coordinates.
// Incidence (which lines meet where) is preserved by any shear, so the
// result has the same combinatorics as the input.
inline std::pair<Arrangement, ShearTransform> normalize(const Arrangement& arr) {
  std::vector<SingularPoint> pts = detail::collect_points(arr);

  auto admissible = [&](const Rational& c) {
    for (const Line& l : arr.lines())
      if (1 + c * l.a == 0) return false;  // would become vertical
    std::vector<Rational> xs;
    xs.reserve(pts.size());
    for (const SingularPoint& p : pts) xs.push_back(p.x + c * p.y);
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };

  Rational c = 0;
  if (!admissible(c)) {
    bool found = false;
    for (Int d = 1; !found; ++d) {
      for (int sign : {+1, -1}) {
        Rational cand(Int(sign), d);
        if (admissible(cand)) {
          c = cand;
          found = true;
          break;
        }
      }
    }
  }

  if (c == 0) return {arr, ShearTransform{c}};
  std::vector<Line> sheared;
  sheared.reserve(arr.lines().size());
  for (const Line& l : arr.lines()) sheared.push_back(apply_shear(l, c));
  return {Arrangement(std::move(sheared)), ShearTransform{c}};
}

namespace detail {

// Half the minimum gap between consecutive singular x-coordinates, or 1 for
// arrangements with a single singular point. Points must be sorted by
// decreasing x.
inline Rational probe_epsilon(const std::vector<SingularPoint>& pts) {
  Rational eps = 1;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational gap = pts[i].x - pts[i + 1].x;
    if (i == 0 || gap / 2 < eps) eps = gap / 2;
  }
  return eps;
}

// Positions 1..n of all lines in the fiber over x, ordered by increasing y.
// Returns line indices bottom to top. x must avoid all singular values.
inline std::vector<int> fiber_order(const Arrangement& arr, const Rational& x) {
  std::vector<std::pair<Rational, int>> ys;
  ys.reserve(arr.lines().size());
  for (int i = 0; i < arr.size(); ++i) ys.emplace_back(arr.line(i).y_at(x), i);
  std::sort(ys.begin(), ys.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  for (size_t i = 0; i + 1 < ys.size(); ++i)
    if (ys[i].first == ys[i + 1].first)
      throw InternalInconsistencyError("fiber over x = " + to_string(x) +
                                       " passes through a singular point");
  std::vector<int> order;
  order.reserve(ys.size());
  for (const auto& [y, i] : ys) order.push_back(i);
  return order;
}

}  // namespace detail

// Singular points with their Lefschetz pairs. For point j the pair (k, l) is
// read off from the fiber over x_j + eps: the incident lines occupy the
// consecutive positions k..l there, counted from the bottom.
inline std::vector<SingularPoint> lefschetz_pairs(const Arrangement& arr) {
  std::vector<SingularPoint> pts = singular_points(arr);
  if (pts.empty()) return pts;
  Rational eps = detail::probe_epsilon(pts);

  for (SingularPoint& p : pts) {
    std::vector<int> order = detail::fiber_order(arr, p.x + eps);
    int lo = 0, hi = -1;
    std::vector<bool> incident_at(order.size(), false);
    for (int pos = 0; pos < (int)order.size(); ++pos) {
      const std::string& label = arr.line(order[pos]).label;
      bool inc = std::find(p.incident.begin(), p.incident.end(), label) != p.incident.end();
      incident_at[pos] = inc;
    }
    for (int pos = 0; pos < (int)order.size(); ++pos) {
      if (!incident_at[pos]) continue;
      if (hi < 0) lo = pos;
      hi = pos;
    }
    int count = 0;
    for (int pos = lo; pos <= hi; ++pos) count += incident_at[pos] ? 1 : 0;
    if (hi - lo + 1 != p.multiplicity || count != p.multiplicity)
      throw InternalInconsistencyError(
          "incident lines of the point at x = " + to_string(p.x) +
          " are not consecutive in the fiber order");
    p.pair = LefschetzPair{lo + 1, hi + 1};
  }
  return pts;
}

// Labels of the lines by fiber position (bottom to top) far to the right of
// every singular point. Position i corresponds to the braid strand i and to
// the fundamental-group generator G_i.
inline std::vector<std::string> strand_labels(const Arrangement& arr) {
  std::vector<SingularPoint> pts = detail::collect_points(arr);
  Rational x = 0;
  if (!pts.empty()) x = pts.front().x + detail::probe_epsilon(pts);
  std::vector<std::string> labels;
  for (int i : detail::fiber_order(arr, x)) labels.push_back(arr.line(i).label);
  return labels;
}

}  // namespace arrpi
