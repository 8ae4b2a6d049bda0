#pragma once

#include <string>
#include <vector>

#include "arrpi/braid.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/geometry.hpp"
#include "arrpi/presentation.hpp"

namespace arrpi {

// The extra projective relation kills the boundary loop of the fiber, which
// in this orientation convention is the ordered product G_1 G_2 ... G_n (the
// word every braid action fixes).
inline Relation projective_relation(int n) {
  return Relation{ascending_product(1, n), FreeWord{}, 0};
}

// The classic van Kampen presentation: one generator per strand and, per
// monodromy braid, the relations  action(braid)(G_i) = G_i  for every i.
// Relations the action fixes letter for letter are dropped. Projective mode
// appends the boundary relation.
inline Presentation full_relations(const std::vector<BraidWord>& braids, int n,
                                   PresentationMode mode) {
  Presentation p;
  p.n_generators = n;
  p.mode = mode;
  int j = 0;
  for (const BraidWord& b : braids) {
    ++j;
    if (b.n != n) throw StrandMismatchError("monodromy braid has wrong strand count");
    for (int i = 1; i <= n; ++i) {
      FreeWord gi = FreeWord::generator(i);
      FreeWord img = artin_action(b, gi);
      if (img == gi) continue;
      p.relations.push_back(Relation{img, gi, j});
    }
  }
  if (mode == PresentationMode::projective) p.relations.push_back(projective_relation(n));
  return p;
}

// The economical presentation: per singular point, relations among the
// transported local generators only. For point j with pair (k, l) the local
// generators are A_i = action(C_j)(G_{k+i-1}); the full twist on the block
// acts as conjugation by the ordered product A_1 A_2 ... A_m, so a node
// contributes the single commutation [A_1, A_2] = 1 and a multiple point the
// family [A_1 ... A_m, A_i] = 1 for i = 1..m. Each family generates the same
// normal closure as the corresponding rows of full_relations.
inline Presentation economical_relations(const std::vector<SingularPoint>& points, int n,
                                         PresentationMode mode) {
  Presentation p;
  p.n_generators = n;
  p.mode = mode;
  for (const SingularPoint& pt : points) {
    BraidWord c = detail::transport_word(points, pt.index, n);
    std::vector<FreeWord> local;
    local.reserve(pt.multiplicity);
    for (int i = pt.pair.k; i <= pt.pair.l; ++i)
      local.push_back(artin_action(c, FreeWord::generator(i)));
    if (pt.multiplicity == 2) {
      p.relations.push_back(Relation{local[0] * local[1], local[1] * local[0], pt.index});
    } else {
      FreeWord prod;
      for (const FreeWord& a : local) prod = prod * a;
      for (const FreeWord& a : local)
        p.relations.push_back(Relation{prod * a, a * prod, pt.index});
    }
  }
  if (mode == PresentationMode::projective) p.relations.push_back(projective_relation(n));
  return p;
}

// Equivalence oracle for presentations on the same generators: equal
// abelianizations and equal homomorphism counts into every probe group.
// Deciding normal-closure equality is out of reach in general; these
// invariants are decidable and distinguish all the groups handled here.
inline bool presentations_equivalent(const Presentation& p1, const Presentation& p2,
                                     const std::vector<FiniteGroup>& probes,
                                     long long budget = kDefaultHomBudget) {
  if (p1.n_generators != p2.n_generators)
    throw StrandMismatchError("presentations have different generator counts");
  if (p1.mode != p2.mode)
    throw StrandMismatchError("presentations have different modes");
  if (!(abelianization(p1) == abelianization(p2))) return false;
  for (const FiniteGroup& probe : probes)
    if (hom_count(p1, probe, budget) != hom_count(p2, probe, budget)) return false;
  return true;
}

}  // namespace arrpi
