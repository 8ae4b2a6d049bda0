#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arrpi/errors.hpp"
#include "arrpi/geometry.hpp"
#include "arrpi/presentation.hpp"

namespace arrpi {

// One equivalence class of multiple points: a connected component of the
// graph whose vertices are the points of multiplicity >= 3 and whose edges
// join two points lying on a common arrangement line.
struct PointClass {
  std::vector<int> points;              // indices into the singular point list
  std::vector<std::string> lines;       // labels of all lines through the class
  bool collinear = false;               // one arrangement line holds every point
  std::optional<std::string> connecting_line;  // that line, for classes of size >= 2
};

struct MultiplePointGraph {
  std::vector<PointClass> classes;
  std::vector<std::string> simple_only_lines;  // lines through no multiple point
};

// Partition of the multiple points into classes, plus the collinearity flag
// per class. Singleton classes are trivially collinear.
inline MultiplePointGraph build_classes(const std::vector<SingularPoint>& points,
                                        const Arrangement& arr) {
  std::vector<int> multiple;
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i].multiplicity >= 3) multiple.push_back(static_cast<int>(i));

  // Union-find over the multiple points; edge = shared incident line.
  std::vector<int> parent(multiple.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto shares_line = [&](const SingularPoint& a, const SingularPoint& b) {
    for (const std::string& la : a.incident)
      if (std::find(b.incident.begin(), b.incident.end(), la) != b.incident.end()) return true;
    return false;
  };
  for (size_t i = 0; i < multiple.size(); ++i)
    for (size_t j = i + 1; j < multiple.size(); ++j)
      if (shares_line(points[multiple[i]], points[multiple[j]]))
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));

  MultiplePointGraph g;
  std::vector<int> root_to_class(multiple.size(), -1);
  for (size_t i = 0; i < multiple.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (root_to_class[r] < 0) {
      root_to_class[r] = static_cast<int>(g.classes.size());
      g.classes.emplace_back();
    }
    g.classes[root_to_class[r]].points.push_back(multiple[i]);
  }

  for (PointClass& cls : g.classes) {
    std::set<std::string> lines;
    for (int pi : cls.points)
      for (const std::string& l : points[pi].incident) lines.insert(l);
    cls.lines.assign(lines.begin(), lines.end());
    if (cls.points.size() == 1) {
      cls.collinear = true;  // a single point lies on each of its lines
    } else {
      // The common line of all points, if any; two distinct points determine
      // at most one.
      std::vector<std::string> common = points[cls.points[0]].incident;
      std::sort(common.begin(), common.end());
      for (size_t i = 1; i < cls.points.size(); ++i) {
        std::vector<std::string> inc = points[cls.points[i]].incident;
        std::sort(inc.begin(), inc.end());
        std::vector<std::string> keep;
        std::set_intersection(common.begin(), common.end(), inc.begin(), inc.end(),
                              std::back_inserter(keep));
        common.swap(keep);
      }
      cls.collinear = !common.empty();
      if (cls.collinear) cls.connecting_line = common.front();
    }
  }

  std::set<std::string> in_class;
  for (const PointClass& cls : g.classes)
    for (const std::string& l : cls.lines) in_class.insert(l);
  for (const Line& l : arr.lines())
    if (!in_class.count(l.label)) g.simple_only_lines.push_back(l.label);
  return g;
}

// Structure computation together with the bookkeeping the closed formula
// rests on. Valid only when every class is collinear.
struct StructureReport {
  MultiplePointGraph graph;
  bool covered = false;
  int offending_class = -1;  // first non-collinear class, when not covered
  std::vector<int> multiplicities;  // of the multiple points, point-index order
  int n_lines = 0;
};

inline StructureReport report_from_points(const std::vector<SingularPoint>& points,
                                          const Arrangement& arr) {
  StructureReport rep;
  rep.n_lines = arr.size();
  rep.graph = build_classes(points, arr);
  rep.covered = true;
  for (size_t c = 0; c < rep.graph.classes.size(); ++c) {
    if (!rep.graph.classes[c].collinear) {
      rep.covered = false;
      rep.offending_class = static_cast<int>(c);
      break;
    }
  }
  for (const SingularPoint& p : points)
    if (p.multiplicity >= 3) rep.multiplicities.push_back(p.multiplicity);
  return rep;
}

inline StructureReport classify_arrangement(const Arrangement& arr) {
  std::vector<SingularPoint> points = detail::collect_points(arr);
  for (size_t i = 0; i < points.size(); ++i) points[i].index = static_cast<int>(i) + 1;
  return report_from_points(points, arr);
}

inline GroupStructure structure_from_report(const StructureReport& rep, PresentationMode mode) {
  if (!rep.covered)
    throw NotCoveredError("class #" + std::to_string(rep.offending_class + 1) +
                              " of multiple points is not collinear; no closed form applies",
                          rep.offending_class);
  std::vector<int> ranks;
  int total = 0;
  for (int m : rep.multiplicities) {
    ranks.push_back(m - 1);
    total += m - 1;
  }
  int abelian = rep.n_lines - total - (mode == PresentationMode::projective ? 1 : 0);
  if (abelian < 0)
    throw InternalInconsistencyError("negative abelian rank; corrupt multiplicity data");
  return GroupStructure::make(std::move(ranks), abelian);
}

// Fundamental-group structure of the complement, by the closed formula:
// free factors F^{m-1} per multiple point, abelian rank
// n - sum(m_i - 1) in the affine plane and one less projectively. Throws
// NotCoveredError when a class of multiple points is not collinear.
inline GroupStructure structure(const Arrangement& arr, PresentationMode mode) {
  return structure_from_report(classify_arrangement(arr), mode);
}

// Direct-sum combinator for transverse unions: two curves of degrees d1 and
// d2 meeting in exactly d1*d2 distinct points have a complement whose group
// is the direct sum of the two groups.
inline GroupStructure transverse_union(const GroupStructure& s1, long long d1,
                                       const GroupStructure& s2, long long d2,
                                       long long intersection_count) {
  if (intersection_count != d1 * d2)
    throw NotTransverseError("expected " + std::to_string(d1 * d2) + " intersection points, got " +
                             std::to_string(intersection_count));
  std::vector<int> ranks = s1.free_ranks;
  ranks.insert(ranks.end(), s2.free_ranks.begin(), s2.free_ranks.end());
  return GroupStructure::make(std::move(ranks), s1.abelian_rank + s2.abelian_rank);
}

struct BignessWitness {
  bool big = false;
  // Witness data for the first multiple point in decreasing-x order.
  Rational x, y;
  int multiplicity = 0;
  std::vector<std::string> lines;
};

// A group is big when it contains a free subgroup of rank two; for these
// complements that happens exactly when some point has multiplicity >= 3.
inline BignessWitness is_big(const Arrangement& arr) {
  BignessWitness w;
  for (const SingularPoint& p : detail::collect_points(arr)) {
    if (p.multiplicity >= 3) {
      w.big = true;
      w.x = p.x;
      w.y = p.y;
      w.multiplicity = p.multiplicity;
      w.lines = p.incident;
      return w;
    }
  }
  return w;
}

}  // namespace arrpi
