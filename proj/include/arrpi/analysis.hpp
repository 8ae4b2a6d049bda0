#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrpi/braid.hpp"
#include "arrpi/classify.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/geometry.hpp"
#include "arrpi/presentation.hpp"
#include "arrpi/vankampen.hpp"

namespace arrpi {

enum class RelationStyle { economical, full };

// Everything the pipeline derives from one arrangement. All data refers to
// the normalized (sheared) copy; the shear record ties it back to the input.
struct Analysis {
  Arrangement arrangement;             // normalized
  ShearTransform shear;
  std::vector<SingularPoint> points;   // sorted by decreasing x, pairs filled
  std::vector<std::string> strands;    // fiber position (bottom-up) -> label
  std::vector<BraidWord> braids;       // monodromy, one per point
  StructureReport classification;

  int n() const { return arrangement.size(); }
};

inline Analysis analyze_arrangement(const Arrangement& input, bool allow_normalize = true) {
  Arrangement arr = input;
  ShearTransform shear{0};
  if (allow_normalize) {
    auto [sheared, record] = normalize(input);
    arr = std::move(sheared);
    shear = record;
  }
  Analysis a{std::move(arr), shear, {}, {}, {}, {}};
  a.points = lefschetz_pairs(a.arrangement);  // throws NotGeneric when not normalized
  a.strands = strand_labels(a.arrangement);
  a.braids = monodromy_braids(a.points, a.n());
  a.classification = report_from_points(a.points, a.arrangement);
  return a;
}

inline Presentation pipeline_presentation(const Analysis& a, PresentationMode mode,
                                          RelationStyle style) {
  if (style == RelationStyle::full) return full_relations(a.braids, a.n(), mode);
  return economical_relations(a.points, a.n(), mode);
}

// --- Verification suite --------------------------------------------------//

struct CheckResult {
  std::string name;
  enum class Status { pass, fail, skip } status;
  std::string detail;

  bool failed() const { return status == Status::fail; }
};

namespace detail {

inline CheckResult check(const std::string& name, bool ok, const std::string& detail = "") {
  return CheckResult{name, ok ? CheckResult::Status::pass : CheckResult::Status::fail, detail};
}

}  // namespace detail

// Runs the arrangement-level invariants: purity and exponent sums of the
// monodromy, the full-twist product identity, abelianization ranks, the
// economical/full equivalence, and (when the closed formula applies) the
// finite-quotient comparison against the reference presentation of the
// predicted structure.
inline std::vector<CheckResult> verify_arrangement(const Analysis& a, const FiniteGroup& probe,
                                                   long long budget = kDefaultHomBudget) {
  std::vector<CheckResult> out;
  int n = a.n();

  bool pure = true;
  for (const BraidWord& b : a.braids)
    pure = pure && is_identity_permutation(induced_permutation(b));
  out.push_back(detail::check("monodromy-pure-braids", pure));

  bool sums = true;
  long long total = 0;
  for (size_t j = 0; j < a.braids.size(); ++j) {
    long long m = a.points[j].multiplicity;
    long long e = a.braids[j].exponent_sum();
    sums = sums && e == m * (m - 1);
    total += e;
  }
  sums = sums && total == static_cast<long long>(n) * (n - 1);
  out.push_back(detail::check("monodromy-exponent-sums",
                              sums, "total " + std::to_string(total)));

  if (n >= 2) {
    BraidWord prod(n, {});
    for (const BraidWord& b : a.braids) prod = prod * b;
    BraidWord delta = half_twist_word(1, n, n);
    out.push_back(detail::check("full-twist-product", braid_equal(prod, delta * delta)));
  } else {
    out.push_back(CheckResult{"full-twist-product", CheckResult::Status::pass,
                              "trivial for a single line"});
  }

  Presentation econ_aff = pipeline_presentation(a, PresentationMode::affine, RelationStyle::economical);
  Presentation full_aff = pipeline_presentation(a, PresentationMode::affine, RelationStyle::full);
  Presentation econ_proj =
      pipeline_presentation(a, PresentationMode::projective, RelationStyle::economical);
  Presentation full_proj = pipeline_presentation(a, PresentationMode::projective, RelationStyle::full);

  AbelianInvariants want_aff{n, {}}, want_proj{n - 1, {}};
  out.push_back(detail::check("abelianization-affine",
                              abelianization(econ_aff) == want_aff &&
                                  abelianization(full_aff) == want_aff));
  out.push_back(detail::check("abelianization-projective",
                              abelianization(econ_proj) == want_proj &&
                                  abelianization(full_proj) == want_proj));

  try {
    bool eq = presentations_equivalent(econ_aff, full_aff, {probe}, budget) &&
              presentations_equivalent(econ_proj, full_proj, {probe}, budget);
    out.push_back(detail::check("economical-equals-full", eq, "probe " + probe.name));
  } catch (const BudgetExceededError& e) {
    out.push_back(CheckResult{"economical-equals-full", CheckResult::Status::skip,
                              std::string("probe budget exceeded: ") + e.what()});
  }

  if (a.classification.covered) {
    try {
      bool ok = true;
      for (PresentationMode mode : {PresentationMode::affine, PresentationMode::projective}) {
        GroupStructure s = structure_from_report(a.classification, mode);
        long long want = hom_count(reference_presentation(s), probe, budget);
        for (RelationStyle style : {RelationStyle::economical, RelationStyle::full}) {
          Presentation p = pipeline_presentation(a, mode, style);
          ok = ok && hom_count(p, probe, budget) == want;
        }
      }
      out.push_back(detail::check("structure-oracle", ok, "probe " + probe.name));
    } catch (const BudgetExceededError& e) {
      out.push_back(CheckResult{"structure-oracle", CheckResult::Status::skip,
                                std::string("probe budget exceeded: ") + e.what()});
    }
  } else {
    out.push_back(CheckResult{"structure-oracle", CheckResult::Status::skip,
                              "no closed form: a class of multiple points is not collinear"});
  }
  return out;
}

}  // namespace arrpi
