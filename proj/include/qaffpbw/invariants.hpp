#pragma once

// Integer invariants between fundamental modules, computed from the zero
// multisets of the denominators. Every series over dual shifts D^k is finite:
// d(x, D^k y) vanishes once |k| * h exceeds the largest zero exponent plus
// |p_x - p_y|.

#include <map>
#include <vector>

#include "qaffpbw/category.hpp"
#include "qaffpbw/rootsys.hpp"

namespace qaff {

enum class Exactness { Exact, UpperBound };

struct InvariantValue {
  int value = 0;
  Exactness exactness = Exactness::Exact;

  bool exact() const { return exactness == Exactness::Exact; }
  bool operator==(const InvariantValue&) const = default;
};

/// Largest |k| for which d(x, D^k y) can be non-zero.
int shift_bound(const HLCategory& cat, SigmaPoint x, SigmaPoint y);

/// frak d(x, y): zero order at z = 1 of d_{x,y}(z) d_{y,x}(1/z).
int d_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y);

/// Lambda(x, y) = sum_k (-1)^{k + [k<0]} d(x, D^k y).
int lambda_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y);

/// Lambda^infty(x, y) = sum_k (-1)^k d(x, D^k y).
int lambda_inf_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y);

/// (Lambda - Lambda^infty) / 2 = sum_{k <= -1} (-1)^{k+1} d(x, D^k y).
int de_tilde_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y);

/// Zero order of c_{x,y}(z) at z = 1: sum_{k >= 0} (-1)^k d(x, D^k y).
int zero_c_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y);

/// (E(x), E(y)) = -Lambda^infty(x, y).
int pairing_E(const HLCategory& cat, SigmaPoint x, SigmaPoint y);

/// Coordinates of E(x) in the basis E(basis[0]), ..., E(basis[n-1]). The
/// basis pairings must form a finite simply-laced Cartan matrix.
Root root_coordinates(const HLCategory& cat, SigmaPoint x, const std::vector<SigmaPoint>& basis);

/// Lambda^infty is additive on tensor words: sum over all pairs.
int lambda_inf_word(const HLCategory& cat, const std::vector<SigmaPoint>& xs, const std::vector<SigmaPoint>& ys);

/// Lambda on tensor words. Exact for single fundamentals, otherwise the
/// subadditive upper bound for any simple subquotient of the products.
InvariantValue lambda_word(const HLCategory& cat, const std::vector<SigmaPoint>& xs, const std::vector<SigmaPoint>& ys);

/// E(M) for M a formal signed sum of fundamentals, stored over D-orbit
/// representatives (exponent in [0, h)): E(D^m r) = (-1)^m E(r).
class BlockFunctional {
 public:
  BlockFunctional() = default;
  static BlockFunctional of(const HLCategory& cat, SigmaPoint x);

  void add(const HLCategory& cat, SigmaPoint x, int sign = 1);
  BlockFunctional& operator+=(const BlockFunctional& other);
  BlockFunctional negated() const;

  /// E(M)(y) = Lambda^infty(M, V(y)).
  int value_at(const HLCategory& cat, SigmaPoint y) const;
  /// (E(M), E(N)) = -Lambda^infty(M, N).
  int pairing(const HLCategory& cat, const BlockFunctional& other) const;
  /// Evaluation on every sigma_0 representative; determines E completely.
  std::vector<int> profile(const HLCategory& cat) const;

  const std::map<SigmaPoint, int>& terms() const { return terms_; }

 private:
  std::map<SigmaPoint, int> terms_;
};

}  // namespace qaff
