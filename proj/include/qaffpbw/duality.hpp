#pragma once

// Duality data {R_i}, their axiom checks and the reflections S_k, S_k^{-1}.

#include <optional>
#include <string>
#include <vector>

#include "qaffpbw/category.hpp"
#include "qaffpbw/modexpr.hpp"
#include "qaffpbw/rootsys.hpp"

namespace qaff {

enum class Origin { FromQ, Reflected, User };
enum class Completeness { Complete, Unknown };
enum class Strength { Verified, Inherited, Unverified, Failed };

const char* to_string(Origin o);
const char* to_string(Completeness c);
const char* to_string(Strength s);

class DualityDatum {
 public:
  DualityDatum() = default;
  /// A user-supplied datum: origin User, completeness Unknown, strength Unverified.
  explicit DualityDatum(std::vector<ModuleExpr> members);

  int size() const { return static_cast<int>(members_.size()); }
  /// 1-based.
  const ModuleExpr& member(int i) const;
  const std::vector<ModuleExpr>& members() const { return members_; }
  bool all_fundamental() const;

  const std::optional<CartanMatrix>& cartan() const { return cartan_; }
  Origin origin() const { return origin_; }
  /// Reflections applied since the seed datum: +k for S_k, -k for S_k^{-1}.
  const std::vector<int>& chain() const { return chain_; }
  Completeness completeness() const { return completeness_; }
  Strength strength() const { return strength_; }

  DualityDatum& set_cartan(CartanMatrix c);
  DualityDatum& set_origin(Origin o);
  DualityDatum& set_chain(std::vector<int> chain);
  DualityDatum& set_completeness(Completeness c);
  DualityDatum& set_strength(Strength s);

  std::string to_string() const;

 private:
  std::vector<ModuleExpr> members_;
  std::optional<CartanMatrix> cartan_;
  Origin origin_ = Origin::User;
  std::vector<int> chain_;
  Completeness completeness_ = Completeness::Unknown;
  Strength strength_ = Strength::Unverified;
};

enum class CheckStatus { Pass, Fail, Unknown };
const char* to_string(CheckStatus s);

/// One condition frak d(R_i, D^k R_j) = expected.
struct PairCheck {
  int i = 0;
  int j = 0;
  int k = 0;
  int expected = 0;
  std::optional<int> observed;
  CheckStatus status = CheckStatus::Unknown;
};

struct StrongReport {
  CheckStatus overall = CheckStatus::Unknown;
  std::optional<CartanMatrix> cartan;
  /// Conditions that failed or could not be decided. Passing checks are only counted.
  std::vector<PairCheck> problems;
  int checked = 0;
  std::string note;

  bool pass() const { return overall == CheckStatus::Pass; }
};

/// frak d(e, D^k f) where at least one of e, f is fundamental; nullopt when
/// neither is or the bound is not exact.
std::optional<int> d_expr(const HLCategory& cat, const ModuleExpr& e, const ModuleExpr& f);

/// Root-module pattern for each R_i and frak d(R_i, D^k R_j) = -delta(k=0) c_ij
/// for i != j, with c_ij = -frak d(R_i, R_j) forming a finite-type Cartan matrix.
StrongReport check_strong(const HLCategory& cat, const DualityDatum& d);

/// Diagonal 2, off-diagonal -frak d(R_i, R_j). Throws when a value is not
/// exact or the result is not finite simply-laced.
CartanMatrix induced_cartan(const HLCategory& cat, const DualityDatum& d);

/// The recorded Cartan matrix, computing it when absent.
CartanMatrix cartan_of(const HLCategory& cat, const DualityDatum& d);

DualityDatum reflect(const HLCategory& cat, const DualityDatum& d, int k);
DualityDatum reflect_inv(const HLCategory& cat, const DualityDatum& d, int k);

/// Member-wise verdict: Equal if every member is Equal, Distinct if some is Distinct.
Verdict equal(const HLCategory& cat, const DualityDatum& a, const DualityDatum& b);

}  // namespace qaff
