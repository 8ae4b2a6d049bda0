#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "arrpi/errors.hpp"
#include "arrpi/geometry.hpp"

namespace arrpi {

// A freely reduced word in the free-group generators G_1, G_2, ... Letters
// are signed indices: +i stands for G_i and -i for its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters) {
    for (int g : letters) push(g);
  }

  static FreeWord generator(int i, int sign = +1) {
    FreeWord w;
    w.push(sign >= 0 ? i : -i);
    return w;
  }

  void push(int letter) {
    if (letter == 0) throw IndexOutOfRangeError("zero is not a generator letter");
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
  }

  FreeWord operator*(const FreeWord& o) const {
    FreeWord w = *this;
    for (int g : o.letters_) w.push(g);
    return w;
  }

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }

  int max_generator() const {
    int m = 0;
    for (int g : letters_) m = std::max(m, std::abs(g));
    return m;
  }

  // Total exponent of each generator 1..n.
  std::vector<long long> exponent_vector(int n) const {
    std::vector<long long> e(n, 0);
    for (int g : letters_) {
      int i = std::abs(g);
      if (i > n) throw IndexOutOfRangeError("generator index " + std::to_string(i) +
                                            " exceeds generator count " + std::to_string(n));
      e[i - 1] += g > 0 ? 1 : -1;
    }
    return e;
  }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += ' ';
      int g = letters_[i];
      s += 'G';
      s += std::to_string(std::abs(g));
      if (g < 0) s += "^-1";
    }
    return s;
  }

 private:
  std::vector<int> letters_;
};

// A word in the Artin generators s_1 .. s_{n-1} of the braid group on n
// strands. Letters are signed: +i is s_i, -i its inverse. Words compose left
// to right: in u * v the braid u acts first.
struct BraidWord {
  int n = 0;
  std::vector<int> word;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> w) : n(strands), word(std::move(w)) {
    for (int g : word) {
      int i = std::abs(g);
      if (i < 1 || i > n - 1)
        throw IndexOutOfRangeError("braid letter " + std::to_string(g) + " out of range for " +
                                   std::to_string(n) + " strands");
    }
  }

  BraidWord inverse() const {
    std::vector<int> w;
    w.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) w.push_back(-*it);
    return BraidWord(n, std::move(w));
  }

  BraidWord operator*(const BraidWord& o) const {
    if (n != o.n) throw StrandMismatchError("cannot compose braids on different strand counts");
    std::vector<int> w = word;
    w.insert(w.end(), o.word.begin(), o.word.end());
    return BraidWord(n, std::move(w));
  }

  long long exponent_sum() const {
    long long s = 0;
    for (int g : word) s += g > 0 ? 1 : -1;
    return s;
  }
};

// The positive half-twist on strands k..l, as the Artin word
// (s_k s_{k+1} ... s_{l-1})(s_k ... s_{l-2}) ... (s_k). Its length is
// C(l-k+1, 2) and its permutation reverses the block k..l.
inline BraidWord half_twist_word(int k, int l, int n) {
  if (!(1 <= k && k < l && l <= n))
    throw IndexOutOfRangeError("half twist needs 1 <= k < l <= n, got k=" + std::to_string(k) +
                               " l=" + std::to_string(l) + " n=" + std::to_string(n));
  std::vector<int> w;
  w.reserve(static_cast<size_t>(l - k + 1) * (l - k) / 2);
  for (int top = l - 1; top >= k; --top)
    for (int i = k; i <= top; ++i) w.push_back(i);
  return BraidWord(n, std::move(w));
}

// Applies the action of a braid to a free word, letter by letter over the
// braid, left to right. The generator s_i acts by
//   G_i |-> G_i G_{i+1} G_i^-1,   G_{i+1} |-> G_i,
// and its inverse by
//   G_i |-> G_{i+1},              G_{i+1} |-> G_{i+1}^-1 G_i G_{i+1}.
inline FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
  if (w.max_generator() > b.n)
    throw IndexOutOfRangeError("free word uses a generator beyond the strand count");
  std::vector<int> cur = w.letters();
  std::vector<int> next;
  for (int g : b.word) {
    int i = std::abs(g);
    next.clear();
    next.reserve(cur.size() * 2);
    auto push = [&next](int letter) {
      if (!next.empty() && next.back() == -letter)
        next.pop_back();
      else
        next.push_back(letter);
    };
    for (int x : cur) {
      if (g > 0) {
        if (x == i) {
          push(i);
          push(i + 1);
          push(-i);
        } else if (x == -i) {
          push(i);
          push(-(i + 1));
          push(-i);
        } else if (x == i + 1) {
          push(i);
        } else if (x == -(i + 1)) {
          push(-i);
        } else {
          push(x);
        }
      } else {
        if (x == i) {
          push(i + 1);
        } else if (x == -i) {
          push(-(i + 1));
        } else if (x == i + 1) {
          push(-(i + 1));
          push(i);
          push(i + 1);
        } else if (x == -(i + 1)) {
          push(-(i + 1));
          push(-i);
          push(i + 1);
        } else {
          push(x);
        }
      }
    }
    cur.swap(next);
  }
  return FreeWord(std::move(cur));
}

// The Artin action is faithful, so braids are equal iff they act identically
// on all generators.
inline bool braid_equal(const BraidWord& b1, const BraidWord& b2) {
  if (b1.n != b2.n)
    throw StrandMismatchError("braid words on " + std::to_string(b1.n) + " and " +
                              std::to_string(b2.n) + " strands are not comparable");
  for (int i = 1; i <= b1.n; ++i) {
    FreeWord g = FreeWord::generator(i);
    if (artin_action(b1, g) != artin_action(b2, g)) return false;
  }
  return true;
}

// Image of each strand under the underlying permutation; entry s-1 holds the
// final position of the strand that starts at position s.
inline std::vector<int> induced_permutation(const BraidWord& b) {
  std::vector<int> strand_at_pos(b.n);
  for (int p = 0; p < b.n; ++p) strand_at_pos[p] = p + 1;
  for (int g : b.word) {
    int i = std::abs(g);
    std::swap(strand_at_pos[i - 1], strand_at_pos[i]);
  }
  std::vector<int> image(b.n, 0);
  for (int p = 0; p < b.n; ++p) image[strand_at_pos[p] - 1] = p + 1;
  return image;
}

inline bool is_identity_permutation(const std::vector<int>& perm) {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i) + 1) return false;
  return true;
}

namespace detail {

// Conjugating word C_j for point j: the product of the half twists of all
// points with larger x, nearest first. Points must be sorted by index.
inline BraidWord transport_word(const std::vector<SingularPoint>& points, int j, int n) {
  BraidWord c(n, {});
  for (int m = j - 1; m >= 1; --m) {
    const LefschetzPair& p = points[m - 1].pair;
    c = c * half_twist_word(p.k, p.l, n);
  }
  return c;
}

}  // namespace detail

// Braid monodromy of the arrangement: for point j the monodromy is the full
// twist on the block k_j..l_j transported past all points to its right,
//   C_j^-1 * halftwist(k_j, l_j)^2 * C_j,  C_j = D_{j-1} D_{j-2} ... D_1,
// where D_m is the half twist of point m. Every result is a pure braid with
// exponent sum m_j(m_j - 1).
inline std::vector<BraidWord> monodromy_braids(const std::vector<SingularPoint>& points, int n) {
  std::vector<BraidWord> out;
  out.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    const SingularPoint& pt = points[i];
    if (pt.index != static_cast<int>(i) + 1)
      throw IndexOutOfRangeError("singular points must be indexed consecutively from 1");
    if (pt.pair.width() != pt.multiplicity)
      throw InternalInconsistencyError("Lefschetz pair width does not match multiplicity at point " +
                                       std::to_string(pt.index));
    BraidWord local = half_twist_word(pt.pair.k, pt.pair.l, n);
    BraidWord c = detail::transport_word(points, pt.index, n);
    out.push_back(c.inverse() * local * local * c);
  }
  return out;
}

}  // namespace arrpi
