#pragma once

// Affine type registry, the label set sigma_0 and R-matrix denominator data.
//
// A fundamental module V(varpi_i)_x with x = (-q)^p is labelled by the pair
// (i, p). Only integer powers of (-q) are modelled; the chosen connected
// component of the parameter set is the one containing (1, 0). Everything
// below is equivariant under a common shift of exponents.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qaffpbw/rootsys.hpp"

namespace qaff {

struct SigmaPoint {
  int node = 1;
  int exp = 0;

  auto operator<=>(const SigmaPoint&) const = default;
  bool operator==(const SigmaPoint&) const = default;

  std::string to_string() const;
};

/// One row of the affine-type table, instantiated for a concrete rank.
struct AffineTypeInfo {
  std::string name;  // e.g. "A2^1"
  char letter = 'A';
  int subscript = 1;  // as written in the name
  int twist = 1;      // 1, 2 or 3
  int rank = 1;       // |I_0|
  FinType fin_type = FinType::A;
  int fin_rank = 1;
  /// The integer h with p* = (-q)^h. Only modelled for untwisted ADE types.
  std::optional<int> dual_shift;
  /// star[i-1] = i*. Identity for rows where it is not modelled.
  std::vector<int> star;
  /// Parity of exponents at each node for the component of (1,0); absent for
  /// rows whose parameter lattice is not modelled.
  std::optional<std::vector<int>> parity;
  /// True when a built-in denominator table exists (A_n^(1) only).
  bool builtin_denominators = false;

  bool simply_laced_untwisted() const;
  int star_of(int i) const;
  bool in_sigma0(SigmaPoint x) const;
  void check_point(SigmaPoint x) const;
  /// D^k applied to a fundamental label. Throws when h is not modelled.
  SigmaPoint dual_point(SigmaPoint x, int k) const;
  int h() const;
  /// sigma_0 points with exponents in [lo, hi].
  std::vector<SigmaPoint> sigma0_window(int lo, int hi) const;
  /// Representative of the D-orbit of x with exponent in [0, h), together
  /// with the power m such that x = D^m(rep).
  std::pair<SigmaPoint, int> orbit_rep(SigmaPoint x) const;
};

/// Parses names such as "A2^1", "B3^1", "D4^3", "E6^2".
AffineTypeInfo type_info(std::string_view name);

/// One representative name per table row (smallest admissible rank).
std::vector<std::string> table_rows();

/// Zero multisets of d_{i,j}(z) at z = (-q)^m, multiplicities by repetition.
class DenominatorTable {
 public:
  DenominatorTable() = default;
  DenominatorTable(std::string type, int rank);

  /// d_{k,l}(z) = prod_{s=1}^{min(k,l,n+1-k,n+1-l)} (z - (-q)^{|k-l|+2s}).
  static DenominatorTable builtin_a(int n);
  /// Parses the provider format {"type":..., "zeros":{"i,j":[...]}}.
  static DenominatorTable from_json_text(std::string_view text);
  std::string to_json_text() const;

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<int>& zeros(int i, int j) const;
  void set_zeros(int i, int j, std::vector<int> exps);
  /// Order of vanishing of d_{i,j} at (-q)^m.
  int order_at(int i, int j, int m) const;
  /// Largest |exponent| of any zero in the table.
  int max_abs_zero() const { return max_abs_; }

 private:
  std::string type_;
  int rank_ = 0;
  std::map<std::pair<int, int>, std::vector<int>> zeros_;
  int max_abs_ = 0;
};

/// Denominator zeros for (i, j); convenience wrapper over the built-in table.
std::vector<int> denom_zeros(const AffineTypeInfo& type, int i, int j);

}  // namespace qaff
