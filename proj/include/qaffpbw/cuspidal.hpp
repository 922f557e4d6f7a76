#pragma once

// Affine cuspidal sequences S_k, k in Z, of a duality datum and a reduced
// word of w0: S_k for 1 <= k <= l comes from the minimal-pair recursion, and
// S_{k+l} = D(S_k).

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qaffpbw/category.hpp"
#include "qaffpbw/duality.hpp"
#include "qaffpbw/modexpr.hpp"
#include "qaffpbw/rootsys.hpp"

namespace qaff {

/// Formal expression over the letters (simple modules) of the finite type.
struct CuspExpr {
  int letter = 0;  // node when this is a letter, 0 for a head
  std::shared_ptr<const CuspExpr> left;
  std::shared_ptr<const CuspExpr> right;

  bool is_letter() const { return letter != 0; }
  std::string to_string() const;
};

/// Letter(i) when beta_k = alpha_i, otherwise nabla of the minimal pair with
/// the smallest left index.
CuspExpr cuspidal_expr(const RootSystem& rs, const Word& w, int k);

class CuspidalSeq {
 public:
  /// The word must spell w0 for the Cartan matrix of the datum.
  CuspidalSeq(HLCategory cat, DualityDatum datum, Word word);

  CuspidalSeq(const CuspidalSeq& other);
  CuspidalSeq& operator=(const CuspidalSeq& other);

  const HLCategory& category() const { return cat_; }
  const DualityDatum& datum() const { return datum_; }
  const Word& word() const { return word_; }
  const RootSystem& roots() const { return roots_; }
  int length() const { return static_cast<int>(word_.size()); }

  /// S_k in normal form.
  ModuleExpr at(int k) const;
  /// Node i_k of the extended word.
  int letter(int k) const { return roots_.extend_letter(word_, k); }

 private:
  HLCategory cat_;
  DualityDatum datum_;
  Word word_;
  RootSystem roots_;
  mutable std::mutex mutex_;
  mutable std::map<int, ModuleExpr> memo_;
};

/// Convenience: CuspidalSeq(cat, datum, word).at(k).
ModuleExpr materialize(const HLCategory& cat, const DualityDatum& d, const Word& w, int k);

struct CuspCheck {
  std::string kind;  // "unmixed", "root", "adapted"
  int a = 0;
  int b = 0;
  int m = 0;
  std::string status;  // "fail" or "unknown"
};

struct CuspReport {
  CheckStatus overall = CheckStatus::Pass;
  int checked = 0;
  std::vector<CuspCheck> problems;

  bool pass() const { return overall == CheckStatus::Pass; }
};

/// For a > b in [lo, hi]: frak d(D^m S_a, S_b) = 0 for m >= 1 and each S_a is
/// a root module. With adapted set (the word is adapted to a Q-datum), also
/// d_{i_a, i_b} does not vanish at p_b - p_a. Checks on non-fundamental
/// members are Unknown.
CuspReport verify_cuspidal_axioms(const CuspidalSeq& seq, int lo, int hi, bool adapted = false);

struct ShiftReport {
  bool pass = true;
  Word rotated;
  DualityDatum reflected;
  /// k with S'_k and S_{k+1} not proven equal, with the verdict.
  std::vector<std::pair<int, Verdict>> mismatches;
};

/// S'_k = S_{k+1} for k in [lo, hi], where S' is the sequence of the datum
/// reflected at i_1 and the word s_{i_2} ... s_{i_l} s_{i_1*}.
ShiftReport refl_shift_check(const HLCategory& cat, const DualityDatum& d, const Word& w, int lo, int hi);
/// Default window [-l, 2l].
ShiftReport refl_shift_check(const HLCategory& cat, const DualityDatum& d, const Word& w);

}  // namespace qaff
