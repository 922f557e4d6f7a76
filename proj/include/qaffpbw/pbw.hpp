#pragma once

// Exponent vectors a = (a_k)_{k in Z} indexing simple modules through their
// cuspidal decomposition, the bi-lexicographic order, standard words and the
// window subcategories C^[a,b].

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaffpbw/cuspidal.hpp"

namespace qaff {

/// Finitely supported map Z -> Z_{>0}, kept sorted by index.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(const std::map<int, int>& entries);

  int at(int k) const;
  /// Setting 0 erases the entry. Negative values throw.
  void set(int k, int value);
  void add(int k, int delta);

  bool is_zero() const { return entries_.empty(); }
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }
  int total() const;

  bool operator==(const ExpVec&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::pair<int, int>> entries_;
};

enum class Order { Less, Greater, Equal, Incomparable };
const char* to_string(Order o);

/// a <_r a': at the smallest index where they differ, a_r < a'_r.
Order cmp_right(const ExpVec& a, const ExpVec& b);
/// a <_l a': at the largest index where they differ, a_s < a'_s.
Order cmp_left(const ExpVec& a, const ExpVec& b);
/// a < a' iff a <_l a' and a <_r a'; Incomparable when the two disagree.
Order cmp_bilex(const ExpVec& a, const ExpVec& b);

/// Largest (l) and smallest (r) index of the support. Throw on the zero vector.
int l_of(const ExpVec& a);
int r_of(const ExpVec& a);

/// Factors S_k repeated a_k times, k decreasing. Empty for the zero vector.
std::vector<ModuleExpr> standard_word(const ExpVec& a, const CuspidalSeq& seq);
/// Head of the standard word (the sequence is normal).
ModuleExpr standard_head(const ExpVec& a, const CuspidalSeq& seq);

/// Multiset of sigma_0 labels, kept sorted.
class DominantMultiset {
 public:
  DominantMultiset() = default;
  explicit DominantMultiset(std::vector<SigmaPoint> points);

  void insert(SigmaPoint x);
  const std::vector<SigmaPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  bool operator==(const DominantMultiset&) const = default;
  std::string to_string() const;

 private:
  std::vector<SigmaPoint> points_;
};

/// Index k with S_k labelled x, for a sequence whose S_1..S_l are
/// fundamentals meeting every D-orbit of sigma_0 exactly once.
class CuspidalIndex {
 public:
  explicit CuspidalIndex(const CuspidalSeq& seq);

  int index_of(SigmaPoint x) const;
  SigmaPoint point_at(int k) const;
  int length() const { return l_; }

 private:
  const CuspidalSeq* seq_;
  int l_;
  AffineTypeInfo type_;
  /// orbit representative -> (s, m) with S_s = D^m(rep)
  std::map<SigmaPoint, std::pair<int, int>> by_rep_;
};

ExpVec decompose(const DominantMultiset& m, const CuspidalSeq& seq);
DominantMultiset compose(const ExpVec& a, const CuspidalSeq& seq);

/// Support translated by m * l.
ExpVec dshift(const ExpVec& a, int m, int l);

/// Support inside [lo, hi]; true for the zero vector.
bool in_window(const ExpVec& a, int lo, int hi);

struct PeelReport {
  bool pass = true;
  bool vacuous = false;
  int top = 0;        // l(a)
  int expected = 0;   // a_top
  int observed = 0;   // sum over x in m of frak d(D S_top, x)
};

PeelReport peel_top_check(const DominantMultiset& m, const CuspidalSeq& seq);

}  // namespace qaff
