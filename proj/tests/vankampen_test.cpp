#include <gtest/gtest.h>

#include <algorithm>

#include "arrpi/vankampen.hpp"
#include "test_util.hpp"

using namespace arrpi;
using testutil::analyze;

namespace {

FreeWord W(std::vector<int> letters) { return FreeWord(std::move(letters)); }

// The descending-product boundary relation that belongs with the descending
// spellings below. (The pipeline's own orientation fixes the ascending word
// instead; either spelling presents the same group when paired with its own
// point relations.)
Relation descending_boundary(int k) { return Relation{descending_product(k, 1), FreeWord{}, 0}; }

// The k cyclic spellings of a single multiple point on generators 1..k:
// G_k...G_1 = G_1 G_k...G_2 = ... as k-1 equalities of consecutive rotations.
Presentation cyclic_pencil(int k, PresentationMode mode = PresentationMode::affine) {
  Presentation p;
  p.n_generators = k;
  p.mode = mode;
  auto rotation = [&](int r) {  // r-th cyclic rotation of G_k ... G_1
    FreeWord w;
    for (int i = 0; i < k; ++i) {
      int idx = k - ((i + k - r) % k);
      w.push(((idx - 1 + k) % k) + 1);
    }
    return w;
  };
  for (int r = 0; r + 1 < k; ++r)
    p.relations.push_back(Relation{rotation(r), rotation(r + 1), 1});
  if (mode == PresentationMode::projective) p.relations.push_back(descending_boundary(k));
  return p;
}

// Commutator spelling of the same point: [G_k...G_1, G_i] = 1 for all i.
Presentation commutator_pencil(int k, PresentationMode mode = PresentationMode::affine) {
  Presentation p;
  p.n_generators = k;
  p.mode = mode;
  FreeWord prod = descending_product(k, 1);
  for (int i = 1; i <= k; ++i) {
    FreeWord g = FreeWord::generator(i);
    p.relations.push_back(Relation{prod * g, g * prod, 1});
  }
  if (mode == PresentationMode::projective) p.relations.push_back(descending_boundary(k));
  return p;
}

// A conjugate w G_t w^-1 cyclically reduces to the single letter t.
int underlying_generator(const FreeWord& w) {
  std::vector<int> ls = w.letters();
  while (ls.size() >= 2 && ls.front() == -ls.back()) {
    ls.erase(ls.begin());
    ls.pop_back();
  }
  if (ls.size() != 1 || ls[0] < 0) return 0;
  return ls[0];
}

bool relation_balanced(const Relation& r, int n) {
  return r.lhs.exponent_vector(n) == r.rhs.exponent_vector(n);
}

}  // namespace

TEST(FullRelations, TwoGenericLines) {
  Analysis a = analyze("generic_2");
  Presentation p = full_relations(a.braids, 2, PresentationMode::affine);
  EXPECT_EQ(p.n_generators, 2);
  ASSERT_EQ(p.relations.size(), 2u);
  // Both rows force G1 and G2 to commute.
  Presentation commuting{2, PresentationMode::affine, {Relation{W({1, 2}), W({2, 1}), 1}}};
  EXPECT_TRUE(presentations_equivalent(p, commuting, {symmetric_group(3), symmetric_group(4)}));
}

TEST(FullRelations, PencilOfThreeMatchesCyclicSpelling) {
  Analysis a = analyze("pencil_3");
  Presentation full = full_relations(a.braids, 3, PresentationMode::affine);
  EXPECT_TRUE(presentations_equivalent(full, cyclic_pencil(3),
                                       {symmetric_group(3), symmetric_group(4)}));
  Presentation fullp = full_relations(a.braids, 3, PresentationMode::projective);
  EXPECT_TRUE(presentations_equivalent(fullp, cyclic_pencil(3, PresentationMode::projective),
                                       {symmetric_group(3), symmetric_group(4)}));
}

TEST(Modes, ProjectiveAddsExactlyTheBoundaryRelation) {
  Analysis a = analyze("near_pencil_4");
  for (auto style : {RelationStyle::economical, RelationStyle::full}) {
    Presentation aff = pipeline_presentation(a, PresentationMode::affine, style);
    Presentation proj = pipeline_presentation(a, PresentationMode::projective, style);
    ASSERT_EQ(proj.relations.size(), aff.relations.size() + 1);
    int projective_rows = 0;
    for (const Relation& r : proj.relations)
      if (r.origin == 0) {
        ++projective_rows;
        EXPECT_EQ(r.lhs, ascending_product(1, 4));  // the boundary loop
        EXPECT_TRUE(r.rhs.empty());
      }
    EXPECT_EQ(projective_rows, 1);
    for (size_t i = 0; i < aff.relations.size(); ++i) EXPECT_EQ(aff.relations[i], proj.relations[i]);
  }
}

TEST(Relations, MonodromyRowsAreExponentBalanced) {
  for (const char* name : {"generic_4", "pencil_5", "collinear_2_3_l1", "triangle_multiple"}) {
    Analysis a = analyze(name);
    for (auto style : {RelationStyle::economical, RelationStyle::full}) {
      Presentation p = pipeline_presentation(a, PresentationMode::projective, style);
      for (const Relation& r : p.relations) {
        if (r.origin == 0) continue;  // the boundary relation is the unbalanced one
        EXPECT_TRUE(relation_balanced(r, p.n_generators));
      }
    }
  }
}

TEST(Economical, NodeGivesLiteralCommutation) {
  Analysis a = analyze("generic_2");
  Presentation p = economical_relations(a.points, 2, PresentationMode::affine);
  ASSERT_EQ(p.relations.size(), 1u);
  EXPECT_EQ(p.relations[0].lhs, W({1, 2}));
  EXPECT_EQ(p.relations[0].rhs, W({2, 1}));
}

// The transported local generators of every point are conjugates of exactly
// the generators of the strands meeting at that point.
TEST(Economical, LocalGeneratorsMatchIncidentStrands) {
  for (const char* name :
       {"collinear_restricted_2_2", "collinear_restricted_2_3", "collinear_2_3_l1",
        "collinear_3_2_l2", "two_pencils_2_2", "generic_5"}) {
    Analysis a = analyze(name);
    std::map<std::string, int> strand_of;
    for (size_t i = 0; i < a.strands.size(); ++i) strand_of[a.strands[i]] = (int)i + 1;
    for (const SingularPoint& pt : a.points) {
      BraidWord c = detail::transport_word(a.points, pt.index, a.n());
      std::vector<int> got;
      for (int i = pt.pair.k; i <= pt.pair.l; ++i) {
        FreeWord ai = artin_action(c, FreeWord::generator(i));
        int t = underlying_generator(ai);
        ASSERT_NE(t, 0) << name << " point " << pt.index;
        got.push_back(t);
      }
      std::vector<int> want;
      for (const std::string& label : pt.incident) want.push_back(strand_of[label]);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want) << name << " point " << pt.index;
    }
  }
}

// With two collinear multiple points, all nodes to their right, the node at
// position l*k2+1 relates the loops of strands k1-l and k1+1. Literal words
// may differ from that spelling by conjugation; the presentations are
// equivalent.
TEST(Economical, RestrictedConfigurationNodeRelation) {
  Analysis a = analyze("collinear_restricted_2_2");  // k1 = k2 = 2
  const int k1 = 2, k2 = 2;
  Presentation p = economical_relations(a.points, a.n(), PresentationMode::affine);
  for (int l = 0; l <= k1 - 1; ++l) {
    int j = l * k2 + 1;
    const Relation& r = p.relations[j - 1];  // one relation per node, point order
    ASSERT_EQ(r.origin, j);
    // The two local loops are conjugates of G_{k1-l} and G_{k1+1}.
    BraidWord c = detail::transport_word(a.points, j, a.n());
    int t1 = underlying_generator(artin_action(c, FreeWord::generator(a.points[j - 1].pair.k)));
    int t2 = underlying_generator(artin_action(c, FreeWord::generator(a.points[j - 1].pair.l)));
    EXPECT_EQ(std::min(t1, t2), k1 - l);
    EXPECT_EQ(std::max(t1, t2), k1 + 1);
  }
  // Swapping in the plain commutation [G_{k1-l}, G_{k1+1}] preserves the group.
  Presentation q = p;
  for (int l = 0; l <= k1 - 1; ++l) {
    int j = l * k2 + 1;
    q.relations[j - 1] =
        Relation{W({k1 - l, k1 + 1}), W({k1 + 1, k1 - l}), j};
  }
  EXPECT_TRUE(presentations_equivalent(p, q, {symmetric_group(3), symmetric_group(4)}));
}

// The first multiple point of the general collinear configuration collects
// the shared line's loop plus the loops of its own pencil.
TEST(Economical, CollinearMultiplePointLoops) {
  Analysis a = analyze("collinear_2_3_l1");  // k1=2, k2=3, l=1
  const SingularPoint& p1 = a.points[2];     // point l*k1+1 = 3, pair (1,3)
  ASSERT_EQ(p1.pair, (LefschetzPair{1, 3}));
  BraidWord c = detail::transport_word(a.points, p1.index, a.n());
  std::vector<int> gens;
  for (int i = p1.pair.k; i <= p1.pair.l; ++i)
    gens.push_back(underlying_generator(artin_action(c, FreeWord::generator(i))));
  EXPECT_EQ(gens, (std::vector<int>{1, 3, 4}));  // strands of L1, L3, L4
}

TEST(Equivalence, FullVersusEconomicalAcrossStylesAndModes) {
  std::vector<FiniteGroup> small = {symmetric_group(3)};
  std::vector<FiniteGroup> both = {symmetric_group(3), symmetric_group(4)};
  for (const char* name : {"generic_3", "pencil_4", "near_pencil_4", "collinear_2_2_l1"}) {
    Analysis a = analyze(name);
    for (auto mode : {PresentationMode::affine, PresentationMode::projective}) {
      Presentation full = pipeline_presentation(a, mode, RelationStyle::full);
      Presentation econ = pipeline_presentation(a, mode, RelationStyle::economical);
      EXPECT_TRUE(presentations_equivalent(full, econ, a.n() <= 5 ? both : small))
          << name << " " << mode_name(mode);
    }
  }
  for (const char* name : {"collinear_restricted_2_3", "collinear_3_2_l2", "triangle_multiple"}) {
    Analysis a = analyze(name);
    Presentation full = pipeline_presentation(a, PresentationMode::affine, RelationStyle::full);
    Presentation econ = pipeline_presentation(a, PresentationMode::affine, RelationStyle::economical);
    EXPECT_TRUE(presentations_equivalent(full, econ, small)) << name;
  }
}

TEST(Equivalence, DistinguishesPencilFromGenericTriple) {
  Analysis pencil = analyze("pencil_3");
  Analysis generic = analyze("generic_3");
  Presentation p1 = pipeline_presentation(pencil, PresentationMode::affine, RelationStyle::full);
  Presentation p2 = pipeline_presentation(generic, PresentationMode::affine, RelationStyle::full);
  EXPECT_FALSE(presentations_equivalent(p1, p2, {symmetric_group(3)}));
  // F^2+Z and Z^3 already differ at S3: 66 vs the number of commuting triples.
  FiniteGroup s3 = symmetric_group(3);
  EXPECT_EQ(hom_count(p1, s3), 66);
  long long commuting_triples = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      for (int z = 0; z < 6; ++z) {
        bool ok = s3.times(x, y) == s3.times(y, x) && s3.times(x, z) == s3.times(z, x) &&
                  s3.times(y, z) == s3.times(z, y);
        commuting_triples += ok ? 1 : 0;
      }
  EXPECT_EQ(hom_count(p2, s3), commuting_triples);
  EXPECT_NE(commuting_triples, 66);
}

TEST(Equivalence, CyclicAndCommutatorSpellingsAgree) {
  std::vector<FiniteGroup> probes34 = {symmetric_group(3), symmetric_group(4)};
  for (int k : {3, 4, 5}) {
    EXPECT_TRUE(presentations_equivalent(cyclic_pencil(k), commutator_pencil(k), probes34));
    EXPECT_TRUE(presentations_equivalent(cyclic_pencil(k, PresentationMode::projective),
                                         commutator_pencil(k, PresentationMode::projective),
                                         probes34));
  }
}

TEST(Equivalence, PreconditionViolationsThrow) {
  Presentation a{2, PresentationMode::affine, {}};
  Presentation b{3, PresentationMode::affine, {}};
  Presentation c{2, PresentationMode::projective, {}};
  EXPECT_THROW(presentations_equivalent(a, b, {}), StrandMismatchError);
  EXPECT_THROW(presentations_equivalent(a, c, {}), StrandMismatchError);
}
