#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <istream>
#include <numeric>
#include <string>
#include <vector>

#include "arrpi/braid.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/rational.hpp"

namespace arrpi {

// Canonical descriptor of a direct sum of free groups and a free abelian
// group: one free factor F^k per entry of free_ranks plus Z^abelian_rank.
// Rank-one free factors are folded into the abelian part and free_ranks is
// kept sorted descending.
struct GroupStructure {
  std::vector<int> free_ranks;
  int abelian_rank = 0;

  static GroupStructure make(std::vector<int> ranks, int abelian) {
    GroupStructure s;
    s.abelian_rank = abelian;
    for (int k : ranks) {
      if (k < 0) throw IndexOutOfRangeError("negative free rank");
      if (k == 1)
        s.abelian_rank += 1;
      else if (k >= 2)
        s.free_ranks.push_back(k);
    }
    std::sort(s.free_ranks.begin(), s.free_ranks.end(), std::greater<int>());
    return s;
  }

  int generator_count() const {
    return std::accumulate(free_ranks.begin(), free_ranks.end(), 0) + abelian_rank;
  }

  bool operator==(const GroupStructure& o) const {
    return free_ranks == o.free_ranks && abelian_rank == o.abelian_rank;
  }

  std::string str() const {
    std::string s;
    for (int k : free_ranks) {
      if (!s.empty()) s += " + ";
      s += "F^" + std::to_string(k);
    }
    if (abelian_rank > 0 || s.empty()) {
      if (!s.empty()) s += " + ";
      s += abelian_rank == 0   ? "1"
           : abelian_rank == 1 ? "Z"
                               : "Z^" + std::to_string(abelian_rank);
    }
    return s;
  }
};

enum class PresentationMode { affine, projective };

inline std::string mode_name(PresentationMode m) {
  return m == PresentationMode::affine ? "affine" : "projective";
}

// A relation lhs = rhs between words in the generators. origin > 0 names the
// singular point the relation came from; origin == 0 marks the single extra
// projective relation G_n G_{n-1} ... G_1 = 1.
struct Relation {
  FreeWord lhs, rhs;
  int origin = 0;

  FreeWord relator() const { return lhs * rhs.inverse(); }
  bool operator==(const Relation& o) const {
    return lhs == o.lhs && rhs == o.rhs && origin == o.origin;
  }
};

struct Presentation {
  int n_generators = 0;
  PresentationMode mode = PresentationMode::affine;
  std::vector<Relation> relations;
};

inline FreeWord descending_product(int from, int to) {
  FreeWord w;
  for (int i = from; i >= to; --i) w.push(i);
  return w;
}

inline FreeWord ascending_product(int from, int to) {
  FreeWord w;
  for (int i = from; i <= to; ++i) w.push(i);
  return w;
}

// --- Abelianization ----------------------------------------------------- //

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;  // entries > 1 in divisibility order
  bool operator==(const AbelianInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

namespace detail {

// Smith normal form over the integers; returns the diagonal entries. Rows are
// relations, columns generators.
inline std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  std::vector<Int> diag;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // Find the entry of smallest nonzero magnitude in the remaining block.
    size_t pr = r, pc = c;
    bool any = false;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c; j < cols; ++j)
        if (m[i][j] != 0 && (!any || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
          any = true;
        }
    if (!any) break;
    std::swap(m[r], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) {  // remainder smaller than pivot; swap and retry
          std::swap(m[r], m[i]);
          clean = false;
        }
      }
      for (size_t j = c + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        Int q = m[r][j] / m[r][c];
        for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
        if (m[r][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(m[r][c]));
    ++r;
    ++c;
  }
  // Enforce the divisibility chain d1 | d2 | ... via gcd/lcm fixups.
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      Int g = gcd(diag[i], diag[j]);
      Int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace detail

// Free rank and torsion coefficients of the abelianized group: the cokernel
// of the relation exponent matrix.
inline AbelianInvariants abelianization(const Presentation& p) {
  std::vector<std::vector<Int>> m;
  for (const Relation& rel : p.relations) {
    std::vector<long long> le = rel.lhs.exponent_vector(p.n_generators);
    std::vector<long long> re = rel.rhs.exponent_vector(p.n_generators);
    std::vector<Int> row(p.n_generators);
    bool nonzero = false;
    for (int j = 0; j < p.n_generators; ++j) {
      row[j] = Int(le[j] - re[j]);
      nonzero = nonzero || row[j] != 0;
    }
    if (nonzero) m.push_back(std::move(row));
  }
  std::vector<Int> diag = detail::smith_diagonal(std::move(m));
  AbelianInvariants inv;
  int nonzero = 0;
  for (const Int& d : diag)
    if (d != 0) {
      ++nonzero;
      if (d > 1) inv.torsion.push_back(d);
    }
  inv.free_rank = p.n_generators - nonzero;
  return inv;
}

// --- Generator replacement (Tietze move) -------------------------------- //

// Replaces the generator `target` by a new generator defined as `word`, a
// word in the current generators that uses `target` exactly once with
// exponent +1. The new generator occupies the old slot; every relation is
// rewritten by substituting target = u^-1 * G'_target * v^-1 where
// word = u * target * v. The presented group is unchanged.
inline Presentation replace_generator(const Presentation& p, int target, const FreeWord& word) {
  if (target < 1 || target > p.n_generators)
    throw IndexOutOfRangeError("replacement target out of range");
  int occurrences = 0;
  size_t at = 0;
  const auto& ls = word.letters();
  for (size_t i = 0; i < ls.size(); ++i) {
    if (std::abs(ls[i]) == target) {
      ++occurrences;
      at = i;
      if (ls[i] < 0)
        throw NotInvertibleSubstitutionError("replacement word uses the target with exponent -1");
    }
  }
  if (occurrences != 1)
    throw NotInvertibleSubstitutionError("replacement word must use the target exactly once, found " +
                                         std::to_string(occurrences) + " uses");
  FreeWord u(std::vector<int>(ls.begin(), ls.begin() + at));
  FreeWord v(std::vector<int>(ls.begin() + at + 1, ls.end()));
  // target = u^-1 * G' * v^-1 in the new generating set.
  FreeWord target_expr = u.inverse() * FreeWord::generator(target) * v.inverse();

  auto substitute = [&](const FreeWord& w) {
    FreeWord out;
    for (int g : w.letters()) {
      if (g == target)
        out = out * target_expr;
      else if (g == -target)
        out = out * target_expr.inverse();
      else
        out.push(g);
    }
    return out;
  };

  Presentation q;
  q.n_generators = p.n_generators;
  q.mode = p.mode;
  q.relations.reserve(p.relations.size());
  for (const Relation& rel : p.relations)
    q.relations.push_back(Relation{substitute(rel.lhs), substitute(rel.rhs), rel.origin});
  return q;
}

// --- Reference presentations -------------------------------------------- //

// Realizes a GroupStructure as generators plus commutators: generators are
// partitioned into one block per free factor and a final abelian block;
// generators from different blocks commute, and the abelian block commutes
// internally.
inline Presentation reference_presentation(const GroupStructure& s) {
  Presentation p;
  p.n_generators = s.generator_count();
  std::vector<int> block_of(p.n_generators, 0);
  int g = 0, block = 0;
  for (int k : s.free_ranks) {
    for (int i = 0; i < k; ++i) block_of[g++] = block;
    ++block;
  }
  int abelian_block = block;
  for (int i = 0; i < s.abelian_rank; ++i) block_of[g++] = abelian_block;

  for (int i = 1; i <= p.n_generators; ++i)
    for (int j = i + 1; j <= p.n_generators; ++j) {
      bool cross = block_of[i - 1] != block_of[j - 1];
      bool both_abelian =
          s.abelian_rank > 0 && block_of[i - 1] == abelian_block && block_of[j - 1] == abelian_block;
      if (!cross && !both_abelian) continue;
      FreeWord a = FreeWord::generator(i), b = FreeWord::generator(j);
      p.relations.push_back(Relation{a * b, b * a, 0});
    }
  return p;
}

// --- Finite quotient counting ------------------------------------------- //

// A finite group given by its multiplication table. Element 0..order-1;
// mul[a * order + b] = a * b.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<int> mul;
  std::vector<int> inv;
  int identity = 0;

  int times(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
};

namespace detail {

inline FiniteGroup finish_group(std::string name, int order, std::vector<int> mul) {
  FiniteGroup g;
  g.name = std::move(name);
  g.order = order;
  g.mul = std::move(mul);
  // Identity: the unique e with e*x == x for all x.
  g.identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      ok = g.times(e, x) == x && g.times(x, e) == x;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw ParseError("multiplication table has no identity element");
  g.inv.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (g.times(a, b) == g.identity && g.times(b, a) == g.identity) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0) throw ParseError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c)))
          throw ParseError("multiplication table is not associative");
  return g;
}

inline std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::vector<std::vector<int>> all;
  do {
    all.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return all;
}

}  // namespace detail

// Symmetric group on n symbols, elements indexed lexicographically.
// Composition acts left to right: (p*q)(x) = q(p(x)).
inline FiniteGroup symmetric_group(int n) {
  auto perms = detail::permutations_of(n);
  int order = static_cast<int>(perms.size());
  std::vector<int> mul(static_cast<size_t>(order) * order);
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[b][perms[a][x]];
      mul[static_cast<size_t>(a) * order + b] = index_of(comp);
    }
  return detail::finish_group("S" + std::to_string(n), order, std::move(mul));
}

// Dihedral group of order 8. Element a + 4b encodes r^a s^b.
inline FiniteGroup dihedral_8() {
  int order = 8;
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int r1 = a % 4, s1 = a / 4, r2 = b % 4, s2 = b / 4;
      int r = ((s2 ? (r2 - r1) : (r1 + r2)) % 4 + 4) % 4;  // s r = r^-1 s
      int s = (s1 + s2) % 2;
      mul[static_cast<size_t>(a) * 8 + b] = r + 4 * s;
    }
  return detail::finish_group("D4", order, std::move(mul));
}

inline FiniteGroup klein_four() {
  int order = 4;
  std::vector<int> mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[static_cast<size_t>(a) * 4 + b] = a ^ b;
  return detail::finish_group("Z2xZ2", order, std::move(mul));
}

inline FiniteGroup probe_by_name(const std::string& name) {
  if (name == "s3" || name == "S3") return symmetric_group(3);
  if (name == "s4" || name == "S4") return symmetric_group(4);
  if (name == "d4" || name == "D4") return dihedral_8();
  if (name == "z2z2" || name == "Z2xZ2") return klein_four();
  throw ParseError("unknown probe group '" + name + "'");
}

// Text format: the order N followed by N*N entries of the multiplication
// table, row-major, all whitespace separated, elements numbered from 0.
inline FiniteGroup load_probe(std::istream& in, const std::string& name = "custom") {
  int order = 0;
  if (!(in >> order) || order <= 0) throw ParseError("probe table: bad order");
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (auto& entry : mul) {
    if (!(in >> entry) || entry < 0 || entry >= order)
      throw ParseError("probe table: bad or missing entry");
  }
  return detail::finish_group(name, order, std::move(mul));
}

inline constexpr long long kDefaultHomBudget = 100'000'000;

// Number of homomorphisms from the presented group into the probe, by
// exhaustive search over generator images with backtracking. A relation is
// checked as soon as every generator it mentions has been assigned. The
// search order is fixed, so the count is deterministic.
inline long long hom_count(const Presentation& p, const FiniteGroup& probe,
                           long long budget = kDefaultHomBudget) {
  Int total = 1;
  for (int i = 0; i < p.n_generators; ++i) total *= probe.order;
  if (total > budget)
    throw BudgetExceededError("search space " + total.str() + " exceeds budget " +
                                  std::to_string(budget),
                              total > Int(1) << 62 ? (1LL << 62) : total.convert_to<long long>());

  // relators_by_depth[d]: relators whose highest generator is d.
  std::vector<std::vector<std::vector<int>>> relators_by_depth(p.n_generators + 1);
  for (const Relation& rel : p.relations) {
    FreeWord r = rel.relator();
    if (r.empty()) continue;
    int d = r.max_generator();
    if (d > p.n_generators) throw IndexOutOfRangeError("relation mentions unknown generator");
    relators_by_depth[d].push_back(r.letters());
  }

  std::vector<int> image(p.n_generators + 1, probe.identity);
  long long count = 0;
  std::function<void(int)> assign = [&](int depth) {
    if (depth > p.n_generators) {
      ++count;
      return;
    }
    for (int g = 0; g < probe.order; ++g) {
      image[depth] = g;
      bool ok = true;
      for (const auto& rel : relators_by_depth[depth]) {
        int acc = probe.identity;
        for (int letter : rel) {
          int im = image[std::abs(letter)];
          acc = probe.times(acc, letter > 0 ? im : probe.inv[im]);
        }
        if (acc != probe.identity) {
          ok = false;
          break;
        }
      }
      if (ok) assign(depth + 1);
    }
  };
  assign(1);
  return count;
}

}  // namespace arrpi
