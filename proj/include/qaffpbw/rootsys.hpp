#pragma once

// Finite simply-laced root systems and Weyl-word combinatorics.
//
// Node numbering follows Bourbaki throughout:
//
//   A_n  1 - 2 - ... - n
//   D_n  1 - 2 - ... - (n-2) - (n-1),  (n-2) - n
//   E_n  1 - 3 - 4 - 5 - ... - n,      2 - 4
//
// Nodes are 1-based in every public interface. Roots are coefficient vectors
// over the simple roots, stored 0-based (coefficient of alpha_i at index i-1).

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qaff {

enum class FinType { A, D, E };

char to_char(FinType t);
FinType fin_type_from_char(char c);

/// Symmetric integer matrix with 2 on the diagonal. Not necessarily of a
/// single irreducible type: the Cartan matrix induced by a duality datum can be
/// a product such as A1 x A1.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(int rank);

  /// Standard matrix for (type, rank). Throws qaff::Error on an invalid pair.
  static CartanMatrix standard(FinType type, int rank);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, int value);

  bool adjacent(int i, int j) const { return i != j && (*this)(i, j) != 0; }

  /// Symmetric, diagonal 2, off-diagonal in {0,-1}, positive definite.
  bool is_finite_simply_laced() const;

  const std::vector<int>& entries() const { return entries_; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const CartanMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * rank_ + (j - 1));
  }

  int rank_ = 0;
  std::vector<int> entries_;
};

/// Convenience wrapper for CartanMatrix::standard.
CartanMatrix cartan(FinType type, int rank);

/// Human-readable component decomposition such as "A2" or "A1xA1". Returns
/// nullopt when the matrix is not of finite simply-laced type.
std::optional<std::string> classify(const CartanMatrix& c);

struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  bool is_simple() const { return height() == 1 && is_positive(); }

  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

  std::string to_string() const;
};

using Word = std::vector<int>;

std::string to_string(const Word& w);

/// Weyl group of a finite simply-laced Cartan matrix acting on its root lattice.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix c);

  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }

  Root simple(int i) const;
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Number of positive roots, i.e. the length of w0.
  int longest_length() const { return static_cast<int>(positive_.size()); }

  /// Symmetric bilinear form with (alpha_i, alpha_j) = c_ij.
  int pairing(const Root& a, const Root& b) const;
  Root reflect(const Root& r, int i) const;
  /// s_{w_1} ... s_{w_m} (r), rightmost reflection applied first.
  Root apply(const Word& w, const Root& r) const;

  bool is_reduced(const Word& w) const;
  bool spells_longest(const Word& w) const;
  /// One fixed reduced word of w0.
  const Word& longest_word() const { return longest_word_; }
  /// All reduced words of w0. Throws for rank > 4.
  std::vector<Word> reduced_words_of_longest() const;

  /// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}). Throws on a non-reduced word.
  std::vector<Root> beta_sequence(const Word& w) const;

  /// The node i* with w0(alpha_i) = -alpha_{i*}.
  int star(int i) const { return star_[static_cast<std::size_t>(i - 1)]; }

  /// i_k of the Z-extended sequence, i_{k+l} = (i_k)*. Throws unless w spells w0.
  int extend_letter(const Word& w, int k) const;

  /// Minimal pairs (a, b), 1-based positions with a < k < b, of beta_k.
  std::vector<std::pair<int, int>> minimal_pairs(const Word& w, int k) const;

  void check_node(int i) const;

 private:
  CartanMatrix cartan_;
  std::vector<Root> positive_;
  Word longest_word_;
  std::vector<int> star_;
};

}  // namespace qaff
