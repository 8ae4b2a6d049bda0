#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "arrpi/arrpi.hpp"
#include "test_util.hpp"

using namespace arrpi;
using testutil::analyze;
using testutil::load;

namespace {

const char* kCorpus[] = {"generic_2",
                         "generic_3",
                         "generic_4",
                         "generic_5",
                         "generic_6",
                         "pencil_3",
                         "pencil_4",
                         "pencil_5",
                         "pencil_6",
                         "two_pencils_2_2",
                         "near_pencil_4",
                         "near_pencil_5",
                         "collinear_2_2_l1",
                         "collinear_2_3_l1",
                         "collinear_3_2_l2",
                         "collinear_restricted_2_2",
                         "collinear_restricted_2_3",
                         "collinear_three_points",
                         "triangle_multiple"};

}  // namespace

TEST(Pipeline, VerificationSuitePassesOnEveryCorpusFile) {
  FiniteGroup s3 = symmetric_group(3);
  for (const char* name : kCorpus) {
    Analysis a = analyze(name);
    for (const CheckResult& r : verify_arrangement(a, s3)) {
      EXPECT_FALSE(r.failed()) << name << ": " << r.name << " " << r.detail;
      if (std::string(name) == "triangle_multiple" && r.name == "structure-oracle") {
        EXPECT_EQ(r.status, CheckResult::Status::skip);
      }
    }
  }
}

// Independent wiring oracle: starting from the far-right fiber order and
// reversing the block k..l at each singular point, in decreasing-x order,
// must reproduce the geometric fiber order on the far left. This ties the
// Lefschetz pairs to the actual crossings without any braid machinery.
TEST(Pipeline, PairBlockReversalsReplayTheFiberFlow) {
  for (const char* name : kCorpus) {
    Analysis a = testutil::analyze(name);
    if (a.points.empty()) continue;
    Rational eps = 1;
    for (size_t i = 0; i + 1 < a.points.size(); ++i) {
      Rational gap = (a.points[i].x - a.points[i + 1].x) / 2;
      if (i == 0 || gap < eps) eps = gap;
    }
    std::vector<int> sim =
        detail::fiber_order(a.arrangement, a.points.front().x + eps);
    for (const SingularPoint& p : a.points)
      std::reverse(sim.begin() + (p.pair.k - 1), sim.begin() + p.pair.l);
    EXPECT_EQ(sim, detail::fiber_order(a.arrangement, a.points.back().x - eps)) << name;
  }
}

// A 2-group probe alongside S3: the dihedral counts must also match the
// predicted structure.
TEST(Pipeline, DihedralProbeAgreesWithReference) {
  FiniteGroup d4 = dihedral_8();
  for (const char* name : {"pencil_4", "generic_5", "two_pencils_2_2", "collinear_2_3_l1",
                           "collinear_restricted_2_3"}) {
    Analysis a = testutil::analyze(name);
    ASSERT_TRUE(a.classification.covered) << name;
    for (auto mode : {PresentationMode::affine, PresentationMode::projective}) {
      GroupStructure s = structure_from_report(a.classification, mode);
      long long want = hom_count(reference_presentation(s), d4);
      for (auto style : {RelationStyle::economical, RelationStyle::full}) {
        Presentation p = pipeline_presentation(a, mode, style);
        EXPECT_EQ(hom_count(p, d4), want) << name << " " << mode_name(mode);
      }
    }
  }
}

TEST(Pipeline, PointCombinatoricsSurviveShearing) {
  // The triangle file needs a shear; multiplicities and incidences must be
  // in bijection before and after.
  Arrangement raw = load("triangle_multiple");
  EXPECT_THROW(singular_points(raw), NotGenericError);
  auto [sheared, record] = normalize(raw);
  EXPECT_FALSE(record.is_identity());

  auto profile = [](const std::vector<SingularPoint>& pts) {
    std::multiset<std::pair<int, std::set<std::string>>> prof;
    for (const SingularPoint& p : pts)
      prof.insert({p.multiplicity, {p.incident.begin(), p.incident.end()}});
    return prof;
  };
  EXPECT_EQ(profile(detail::collect_points(raw)), profile(singular_points(sheared)));
}

TEST(Pipeline, DeterministicAcrossRuns) {
  for (auto cmd : {Command::analyze, Command::presentation, Command::structure, Command::verify}) {
    RunConfig cfg;
    cfg.input_path = testutil::data_path("collinear_2_3_l1");
    cfg.command = cmd;
    std::ostringstream out1, out2, err;
    int rc1 = run(cfg, out1, err);
    int rc2 = run(cfg, out2, err);
    EXPECT_EQ(rc1, rc2);
    EXPECT_EQ(out1.str(), out2.str());
    EXPECT_FALSE(out1.str().empty());
  }
}

TEST(Pipeline, LineOrderOnlyPermutesLabels) {
  Arrangement base = load("two_pencils_2_2");
  std::vector<Line> reversed(base.lines().rbegin(), base.lines().rend());
  Analysis a = analyze_arrangement(base);
  Analysis b = analyze_arrangement(Arrangement(reversed));
  ASSERT_EQ(a.points.size(), b.points.size());
  for (size_t j = 0; j < a.points.size(); ++j) {
    EXPECT_EQ(a.points[j].x, b.points[j].x);
    EXPECT_EQ(a.points[j].pair, b.points[j].pair);
  }
  EXPECT_EQ(a.strands, b.strands);
  FiniteGroup s3 = symmetric_group(3);
  Presentation pa = pipeline_presentation(a, PresentationMode::affine, RelationStyle::economical);
  Presentation pb = pipeline_presentation(b, PresentationMode::affine, RelationStyle::economical);
  EXPECT_TRUE(presentations_equivalent(pa, pb, {s3}));
}

TEST(Pipeline, SingleLineComplement) {
  std::vector<Line> one = {Line{"L1", Rational(2), Rational(1)}};
  Analysis a = analyze_arrangement(Arrangement(one));
  EXPECT_TRUE(a.points.empty());
  Presentation aff = pipeline_presentation(a, PresentationMode::affine, RelationStyle::economical);
  EXPECT_EQ(aff.n_generators, 1);
  EXPECT_TRUE(aff.relations.empty());  // the free group Z
  auto inv = abelianization(aff);
  EXPECT_EQ(inv.free_rank, 1);
  Presentation proj = pipeline_presentation(a, PresentationMode::projective, RelationStyle::full);
  auto invp = abelianization(proj);
  EXPECT_EQ(invp.free_rank, 0);
  EXPECT_TRUE(invp.torsion.empty());
  GroupStructure s = structure(a.arrangement, PresentationMode::affine);
  EXPECT_EQ(s, GroupStructure::make({}, 1));
}

// Random arrangements with forced multiple points: every pipeline invariant
// must hold whether or not the closed formula applies. Odd cases put two
// pencils on a shared line (random slopes shuffle the node order around the
// multiple points), even cases use a free-standing pencil plus extra lines.
TEST(Pipeline, RandomArrangementInvariantFuzz) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coeff(-9, 9);
  FiniteGroup s3 = symmetric_group(3);
  for (int built = 0; built < 14; ++built) {
    std::vector<Line> lines;
    std::vector<Rational> slopes;
    auto fresh_slope = [&]() {
      while (true) {
        int den = (coeff(rng) % 2 == 0) ? 1 : 2;
        Rational a(coeff(rng), den);
        if (std::find(slopes.begin(), slopes.end(), a) == slopes.end()) {
          slopes.push_back(a);
          return a;
        }
      }
    };
    auto add_through = [&](const std::string& label, const Rational& cx, const Rational& cy) {
      Rational a = fresh_slope();
      lines.push_back(Line{label, a, cy - a * cx});
    };
    if (built % 2 == 1) {
      // Shared line y = 0 with two pencils on it.
      slopes.push_back(Rational(0));
      lines.push_back(Line{"L", Rational(0), Rational(0)});
      Rational c1(coeff(rng)), c2 = c1 + 1 + (built % 5);
      for (int i = 0; i < 2; ++i) add_through("A" + std::to_string(i), c1, Rational(0));
      for (int i = 0; i < 1 + built % 3; ++i) add_through("B" + std::to_string(i), c2, Rational(0));
    } else {
      Rational cx(coeff(rng), 1 + built % 4), cy(coeff(rng), 1 + (built + 1) % 3);
      for (int i = 0; i < 3; ++i) add_through("P" + std::to_string(i), cx, cy);
      for (int i = 0; i < built % 3; ++i)
        lines.push_back(Line{"E" + std::to_string(i), fresh_slope(), Rational(coeff(rng))});
    }
    Analysis a = analyze_arrangement(Arrangement(lines));
    for (const CheckResult& r : verify_arrangement(a, s3))
      EXPECT_FALSE(r.failed()) << "seed case " << built << ": " << r.name << " " << r.detail;
  }
}

TEST(Pipeline, HomCountsMatchReferenceStructures) {
  // Spot check beyond the verify() wiring, including the S4 probe on the
  // five-line corpus entries.
  FiniteGroup s4 = symmetric_group(4);
  for (const char* name : {"pencil_4", "generic_5", "collinear_2_2_l1", "near_pencil_4"}) {
    Analysis a = analyze(name);
    ASSERT_TRUE(a.classification.covered);
    if (a.n() > 5) continue;
    GroupStructure s = structure_from_report(a.classification, PresentationMode::affine);
    long long want = hom_count(reference_presentation(s), s4);
    Presentation econ = pipeline_presentation(a, PresentationMode::affine, RelationStyle::economical);
    Presentation full = pipeline_presentation(a, PresentationMode::affine, RelationStyle::full);
    EXPECT_EQ(hom_count(econ, s4), want) << name;
    EXPECT_EQ(hom_count(full, s4), want) << name;
  }
}
