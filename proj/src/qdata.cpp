#include "qaffpbw/qdata.hpp"

#include <cstdlib>
#include <functional>

#include "qaffpbw/error.hpp"

namespace qaff {

void validate(const QDatum& q) {
  const CartanMatrix c = q.cartan();
  if (static_cast<int>(q.xi.size()) != q.rank)
    throw Error("Q-datum: expected " + std::to_string(q.rank) + " heights, got " + std::to_string(q.xi.size()));
  if (!q.automorphism.empty()) {
    for (int i = 1; i <= static_cast<int>(q.automorphism.size()); ++i)
      if (q.automorphism[static_cast<std::size_t>(i - 1)] != i)
        throw UnsupportedError("Q-datum: non-identity diagram automorphisms are not supported");
  }
  for (int i = 1; i <= q.rank; ++i)
    for (int j = i + 1; j <= q.rank; ++j)
      if (c.adjacent(i, j) && std::abs(q.height(i) - q.height(j)) != 1)
        throw Error("Q-datum: heights of adjacent nodes " + std::to_string(i) + " and " + std::to_string(j) +
                    " must differ by 1");
}

namespace {

bool local_min(const CartanMatrix& c, const std::vector<int>& heights, int i) {
  for (int j = 1; j <= c.rank(); ++j)
    if (c.adjacent(i, j) && heights[static_cast<std::size_t>(j - 1)] <= heights[static_cast<std::size_t>(i - 1)])
      return false;
  return true;
}

// Depth-first search over adapted reduced prefixes; `visit` returns false to stop.
void search(const RootSystem& rs, const QDatum& q, const std::function<bool(const Word&)>& visit) {
  const CartanMatrix& c = rs.cartan();
  Word w;
  std::vector<int> heights = q.xi;
  bool stop = false;
  std::function<void()> rec = [&] {
    if (stop) return;
    if (static_cast<int>(w.size()) == rs.longest_length()) {
      if (!visit(w)) stop = true;
      return;
    }
    for (int i = 1; i <= c.rank() && !stop; ++i) {
      if (!local_min(c, heights, i)) continue;
      if (!rs.apply(w, rs.simple(i)).is_positive()) continue;
      w.push_back(i);
      heights[static_cast<std::size_t>(i - 1)] += 2;
      rec();
      heights[static_cast<std::size_t>(i - 1)] -= 2;
      w.pop_back();
    }
  };
  rec();
}

}  // namespace

bool is_adapted(const QDatum& q, const Word& w) {
  validate(q);
  RootSystem rs(q.cartan());
  if (!rs.spells_longest(w)) return false;
  std::vector<int> heights = q.xi;
  for (int i : w) {
    rs.check_node(i);
    if (!local_min(rs.cartan(), heights, i)) return false;
    heights[static_cast<std::size_t>(i - 1)] += 2;
  }
  return true;
}

Word adapted_word(const QDatum& q) {
  validate(q);
  RootSystem rs(q.cartan());
  std::optional<Word> found;
  search(rs, q, [&](const Word& w) {
    found = w;
    return false;
  });
  if (!found) throw Error("Q-datum admits no adapted reduced word of w0");
  return *found;
}

std::vector<Word> adapted_words(const QDatum& q) {
  validate(q);
  if (q.rank > 4) throw Error("adapted_words: enumeration is limited to rank <= 4");
  RootSystem rs(q.cartan());
  std::vector<Word> out;
  search(rs, q, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

namespace {

void check_category(const HLCategory& cat, const QDatum& q) {
  const auto& t = cat.type();
  if (!t.simply_laced_untwisted())
    throw UnsupportedError("Q-data are only supported for untwisted simply-laced types, not " + t.name);
  if (t.fin_type != q.fin_type || t.fin_rank != q.rank)
    throw Error(std::string("Q-datum of type ") + to_char(q.fin_type) + std::to_string(q.rank) +
                " does not match " + t.name);
}

}  // namespace

std::vector<std::pair<Root, SigmaPoint>> phi(const HLCategory& cat, const QDatum& q, const Word& w) {
  check_category(cat, q);
  if (!is_adapted(q, w)) throw Error("word " + to_string(w) + " is not adapted to the Q-datum");
  RootSystem rs(q.cartan());
  auto betas = rs.beta_sequence(w);
  std::vector<int> heights = q.xi;
  std::vector<std::pair<Root, SigmaPoint>> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int i = w[k];
    SigmaPoint x{i, heights[static_cast<std::size_t>(i - 1)]};
    if (!cat.type().in_sigma0(x))
      throw Error("Q-datum heights put " + x.to_string() + " outside the component of (1,0)");
    out.emplace_back(betas[k], x);
    heights[static_cast<std::size_t>(i - 1)] += 2;
  }
  return out;
}

DualityDatum datum_from_q(const HLCategory& cat, const QDatum& q) {
  check_category(cat, q);
  auto map = phi(cat, q, adapted_word(q));
  std::vector<ModuleExpr> members(static_cast<std::size_t>(q.rank));
  for (const auto& [beta, x] : map)
    if (beta.is_simple())
      for (int i = 1; i <= q.rank; ++i)
        if (beta.coeffs[static_cast<std::size_t>(i - 1)] == 1) members[static_cast<std::size_t>(i - 1)] = ModuleExpr::fund(x);

  DualityDatum d(std::move(members));
  d.set_cartan(q.cartan());
  d.set_origin(Origin::FromQ);
  d.set_completeness(Completeness::Complete);
  if (cat.has_provider())
    d.set_strength(check_strong(cat, d).pass() ? Strength::Verified : Strength::Failed);
  else
    d.set_strength(Strength::Inherited);
  return d;
}

FusionFacts adapted_fusion_facts(const HLCategory& cat, const QDatum& q, const Word& w) {
  auto map = phi(cat, q, w);
  RootSystem rs(q.cartan());
  std::vector<FusionFact> facts;
  for (int k = 1; k <= static_cast<int>(w.size()); ++k)
    for (auto [a, b] : rs.minimal_pairs(w, k))
      facts.push_back({map[static_cast<std::size_t>(a - 1)].second, map[static_cast<std::size_t>(b - 1)].second,
                       map[static_cast<std::size_t>(k - 1)].second, true});
  return FusionFacts(cat.type().name, std::move(facts));
}

HLCategory with_adapted_facts(const HLCategory& cat, const QDatum& q, const Word& w) {
  return cat.with_facts(adapted_fusion_facts(cat, q, w));
}

std::vector<QDatum> all_q_data(FinType type, int rank) {
  const CartanMatrix c = CartanMatrix::standard(type, rank);
  // Dynkin diagrams are trees: orient each edge up or down from node 1.
  std::vector<std::pair<int, int>> edges;  // (parent, child) in BFS order
  std::vector<bool> seen(static_cast<std::size_t>(rank + 1), false);
  std::vector<int> queue{1};
  seen[1] = true;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int j = 1; j <= rank; ++j)
      if (c.adjacent(queue[h], j) && !seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        edges.emplace_back(queue[h], j);
        queue.push_back(j);
      }

  std::vector<QDatum> out;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    QDatum q{type, rank, std::vector<int>(static_cast<std::size_t>(rank), 0), {}};
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [p, ch] = edges[e];
      q.xi[static_cast<std::size_t>(ch - 1)] = q.height(p) + ((mask >> e) & 1u ? 1 : -1);
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace qaff
