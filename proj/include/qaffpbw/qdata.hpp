#pragma once

// Q-data (height functions on a Dynkin diagram), adapted reduced words of w0
// and the induced duality datum D_Q.

#include <optional>
#include <utility>
#include <vector>

#include "qaffpbw/category.hpp"
#include "qaffpbw/duality.hpp"
#include "qaffpbw/rootsys.hpp"

namespace qaff {

struct QDatum {
  FinType fin_type = FinType::A;
  int rank = 1;
  /// xi[i-1] is the height of node i.
  std::vector<int> xi;
  /// Diagram automorphism as a permutation of nodes; empty means identity.
  std::vector<int> automorphism;

  int height(int i) const { return xi.at(static_cast<std::size_t>(i - 1)); }
  CartanMatrix cartan() const { return CartanMatrix::standard(fin_type, rank); }
};

/// Throws Error on a non-unit height step and UnsupportedError on a
/// non-identity automorphism.
void validate(const QDatum& q);

/// Each letter is a strict local minimum of the running heights, which then
/// rise by 2 at that node, and the word spells w0.
bool is_adapted(const QDatum& q, const Word& w);

/// One adapted word (depth-first, smallest node first).
Word adapted_word(const QDatum& q);

/// Every adapted word. Throws for rank > 4.
std::vector<Word> adapted_words(const QDatum& q);

/// phi_Q(beta_k) = (i_k, running height of i_k at step k), listed in word
/// order. The word must be adapted; the points must lie in sigma_0.
std::vector<std::pair<Root, SigmaPoint>> phi(const HLCategory& cat, const QDatum& q, const Word& w);

/// R_i = phi_Q(alpha_i). Complete by construction; strength is verified when a
/// denominator provider exists.
DualityDatum datum_from_q(const HLCategory& cat, const QDatum& q);

/// hd(S_a (x) S_b) = S_k for every minimal pair (a, b) of beta_k, with the
/// labels read off phi. Both sides are fundamental for an adapted word.
FusionFacts adapted_fusion_facts(const HLCategory& cat, const QDatum& q, const Word& w);
HLCategory with_adapted_facts(const HLCategory& cat, const QDatum& q, const Word& w);

/// All valid Q-data of a finite type with xi(1) = 0.
std::vector<QDatum> all_q_data(FinType type, int rank);

}  // namespace qaff
