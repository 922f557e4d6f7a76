#pragma once

// Symbolic module expressions and their rewrite system.
//
// An expression is the trivial module, a fundamental label, a dual shift
// D^k(M), or the head of an ordered tensor product hd(M_1 (x) ... (x) M_r).
// Normal forms satisfy:
//   * no Dual directly above a Fund (folded into the label) or above One,
//   * no Head as a factor of a Head (flattened), no One factors, r >= 2,
//   * Dual only above a Head whose factor list could not be certified normal.
//
// Head rewriting rules, applied to a fixed point:
//   R1  hd(L, X..., D L) -> hd(X...) for a fundamental L, matched up to
//       swaps of commuting fundamentals (the four identities for real L
//       agree once the factor list is flattened);
//   R2  commuting adjacent fundamentals (frak d = 0) are put in a canonical
//       order: the lexicographically least rearrangement reachable by such
//       swaps, keyed on exponent and then the node of the D-orbit
//       representative (so that D preserves the order);
//   R3  two-factor heads covered by a fusion fact collapse to a fundamental;
//   R4  One factors are dropped.

#include <cstddef>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qaffpbw/category.hpp"
#include "qaffpbw/invariants.hpp"

namespace qaff {

class ModuleExpr {
 public:
  enum class Kind { One, Fund, Dual, Head };

  ModuleExpr();

  static ModuleExpr one() { return ModuleExpr(); }
  static ModuleExpr fund(SigmaPoint x);
  static ModuleExpr fund(int node, int exp) { return fund(SigmaPoint{node, exp}); }
  /// Raw constructors: no rewriting is applied.
  static ModuleExpr dual_node(int k, ModuleExpr inner);
  static ModuleExpr head_node(std::vector<ModuleExpr> factors, bool certified_normal = false);

  Kind kind() const;
  bool is_one() const { return kind() == Kind::One; }
  bool is_fund() const { return kind() == Kind::Fund; }
  bool is_head() const { return kind() == Kind::Head; }
  bool is_dual() const { return kind() == Kind::Dual; }

  SigmaPoint point() const;
  int shift() const;
  const ModuleExpr& inner() const;
  const std::vector<ModuleExpr>& factors() const;
  /// The factor list is known to be a normal sequence. Not part of identity.
  bool certified_normal() const;

  std::size_t node_count() const;
  int depth() const;
  /// Fundamental leaves, left to right.
  std::vector<SigmaPoint> leaves() const;
  std::string to_string() const;

  /// Structural equality; ignores the normality certificate.
  friend bool operator==(const ModuleExpr& a, const ModuleExpr& b);
  friend bool operator!=(const ModuleExpr& a, const ModuleExpr& b) { return !(a == b); }

 private:
  struct Node;
  explicit ModuleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline std::ostream& operator<<(std::ostream& os, const ModuleExpr& e) { return os << e.to_string(); }

/// Strongly-unmixed test: every factor is fundamental and, for each earlier
/// factor a and later factor b, frak d(D^m a, b) = 0 for all m >= 1.
bool certify_normal(const HLCategory& cat, const std::vector<ModuleExpr>& factors);

/// Both fundamental and frak d = 0. False without a denominator provider.
bool commute(const HLCategory& cat, const ModuleExpr& a, const ModuleExpr& b);

/// Normal form with the deterministic rule schedule.
ModuleExpr normalize(const HLCategory& cat, const ModuleExpr& e);
/// Normal form with rule applications chosen at random by `schedule`.
ModuleExpr normalize(const HLCategory& cat, const ModuleExpr& e, std::mt19937_64& schedule);

/// D^k(e), pushed through heads whose factor list is certified normal.
ModuleExpr dual(const HLCategory& cat, const ModuleExpr& e, int k);

/// Normal form of hd(factors). An empty list is One.
ModuleExpr head(const HLCategory& cat, std::vector<ModuleExpr> factors, bool certified_normal = false);

enum class Verdict { Equal, Distinct, Unknown };
const char* to_string(Verdict v);

/// Equal iff normal forms coincide; Distinct if two different fundamentals
/// or if the block functionals E differ; Unknown otherwise.
Verdict equal(const HLCategory& cat, const ModuleExpr& a, const ModuleExpr& b);

/// E(e). Exact: Lambda^infty is additive on products and flips sign under D.
BlockFunctional block_functional(const HLCategory& cat, const ModuleExpr& e);

/// Lambda^infty(e, y), exact.
int lambda_inf(const HLCategory& cat, const ModuleExpr& e, SigmaPoint y);

/// Lambda(e, y) and Lambda(y, e); exact when e is fundamental (after moving
/// dual shifts onto y), otherwise the subadditive upper bound.
InvariantValue lambda_bound(const HLCategory& cat, const ModuleExpr& e, SigmaPoint y);
InvariantValue lambda_bound(const HLCategory& cat, SigmaPoint x, const ModuleExpr& e);

/// frak d(e, y). An upper bound of 0 is reported as exact 0.
InvariantValue d_bound(const HLCategory& cat, const ModuleExpr& e, SigmaPoint y);

}  // namespace qaff
