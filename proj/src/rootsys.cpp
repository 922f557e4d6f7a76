#include "qaffpbw/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "qaffpbw/error.hpp"

namespace qaff {

char to_char(FinType t) {
  switch (t) {
    case FinType::A: return 'A';
    case FinType::D: return 'D';
    case FinType::E: return 'E';
  }
  return '?';
}

FinType fin_type_from_char(char c) {
  switch (c) {
    case 'A': return FinType::A;
    case 'D': return FinType::D;
    case 'E': return FinType::E;
    default: throw Error(std::string("unknown finite type letter '") + c + "'");
  }
}

CartanMatrix::CartanMatrix(int rank)
    : rank_(rank), entries_(static_cast<std::size_t>(rank * rank), 0) {
  for (int i = 1; i <= rank; ++i) entries_[index(i, i)] = 2;
}

void CartanMatrix::set(int i, int j, int value) { entries_[index(i, j)] = value; }

CartanMatrix CartanMatrix::standard(FinType type, int rank) {
  auto link = [](CartanMatrix& c, int i, int j) {
    c.set(i, j, -1);
    c.set(j, i, -1);
  };
  switch (type) {
    case FinType::A: {
      if (rank < 1) break;
      CartanMatrix c(rank);
      for (int i = 1; i < rank; ++i) link(c, i, i + 1);
      return c;
    }
    case FinType::D: {
      if (rank < 4) break;
      CartanMatrix c(rank);
      for (int i = 1; i < rank - 1; ++i) link(c, i, i + 1);
      link(c, rank - 2, rank);
      return c;
    }
    case FinType::E: {
      if (rank < 6 || rank > 8) break;
      CartanMatrix c(rank);
      link(c, 1, 3);
      link(c, 2, 4);
      for (int i = 3; i < rank; ++i) link(c, i, i + 1);
      return c;
    }
  }
  throw Error("invalid finite type " + std::string(1, to_char(type)) + std::to_string(rank));
}

CartanMatrix cartan(FinType type, int rank) { return CartanMatrix::standard(type, rank); }

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rank_));
  for (int i = 1; i <= rank_; ++i)
    for (int j = 1; j <= rank_; ++j) out[static_cast<std::size_t>(i - 1)].push_back((*this)(i, j));
  return out;
}

namespace {

// Leading principal minors by fraction-free elimination.
bool positive_definite(const CartanMatrix& c) {
  const int n = c.rank();
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i].push_back(c(i + 1, j + 1));
  std::int64_t prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return true;
}

}  // namespace

bool CartanMatrix::is_finite_simply_laced() const {
  if (rank_ < 1) return false;
  for (int i = 1; i <= rank_; ++i) {
    if ((*this)(i, i) != 2) return false;
    for (int j = 1; j <= rank_; ++j) {
      if (i == j) continue;
      if ((*this)(i, j) != (*this)(j, i)) return false;
      if ((*this)(i, j) != 0 && (*this)(i, j) != -1) return false;
    }
  }
  return positive_definite(*this);
}

std::optional<std::string> classify(const CartanMatrix& c) {
  if (!c.is_finite_simply_laced()) return std::nullopt;
  const int n = c.rank();
  std::vector<int> comp(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::string> names;
  int ncomp = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[s]) continue;
    ++ncomp;
    std::vector<int> nodes{s};
    comp[s] = ncomp;
    for (std::size_t q = 0; q < nodes.size(); ++q)
      for (int j = 1; j <= n; ++j)
        if (!comp[j] && c.adjacent(nodes[q], j)) {
          comp[j] = ncomp;
          nodes.push_back(j);
        }
    const int size = static_cast<int>(nodes.size());
    int branch = 0;
    for (int v : nodes) {
      int deg = 0;
      for (int j = 1; j <= n; ++j) deg += c.adjacent(v, j);
      if (deg >= 3) branch = v;
    }
    if (!branch) {
      names.push_back("A" + std::to_string(size));
      continue;
    }
    // Arm lengths from the branch node.
    std::vector<int> arms;
    for (int j = 1; j <= n; ++j) {
      if (!c.adjacent(branch, j)) continue;
      int len = 0, prev = branch, cur = j;
      while (true) {
        ++len;
        int next = 0;
        for (int t = 1; t <= n; ++t)
          if (t != prev && c.adjacent(cur, t)) next = t;
        if (!next) break;
        prev = cur;
        cur = next;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
      names.push_back("D" + std::to_string(size));
    else
      names.push_back("E" + std::to_string(size));
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& s : names) out += (out.empty() ? "" : "x") + s;
  return out;
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::is_positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    nonzero |= c != 0;
  }
  return nonzero;
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root Root::operator+(const Root& other) const {
  Root r = *this;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += other.coeffs[i];
  return r;
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

std::string Root::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ')';
  return os.str();
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  return os.str();
}

RootSystem::RootSystem(CartanMatrix c) : cartan_(std::move(c)) {
  if (!cartan_.is_finite_simply_laced())
    throw Error("Cartan matrix is not of finite simply-laced type");
  const int n = rank();

  std::set<Root> seen;
  std::vector<Root> queue;
  for (int i = 1; i <= n; ++i) {
    seen.insert(simple(i));
    queue.push_back(simple(i));
  }
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int i = 1; i <= n; ++i) {
      Root r = reflect(queue[q], i);
      if (r.is_positive() && seen.insert(r).second) queue.push_back(r);
    }
  positive_ = std::move(queue);
  std::stable_sort(positive_.begin(), positive_.end(),
                   [](const Root& a, const Root& b) { return a.height() < b.height(); });

  // Greedy extension: w s_i is longer than w iff w(alpha_i) > 0.
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 1; i <= n; ++i)
      if (apply(longest_word_, simple(i)).is_positive()) {
        longest_word_.push_back(i);
        grew = true;
        break;
      }
  }

  for (int i = 1; i <= n; ++i) {
    Root image = -apply(longest_word_, simple(i));
    int found = 0;
    for (int j = 1; j <= n; ++j)
      if (image == simple(j)) found = j;
    if (!found) throw Error("internal: w0 does not map simple roots to negative simple roots");
    star_.push_back(found);
  }
}

void RootSystem::check_node(int i) const {
  if (i < 1 || i > rank()) throw Error("node " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
}

Root RootSystem::simple(int i) const {
  check_node(i);
  Root r{std::vector<int>(static_cast<std::size_t>(rank()), 0)};
  r.coeffs[static_cast<std::size_t>(i - 1)] = 1;
  return r;
}

int RootSystem::pairing(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 1; i <= rank(); ++i)
    for (int j = 1; j <= rank(); ++j)
      s += a.coeffs[static_cast<std::size_t>(i - 1)] * cartan_(i, j) * b.coeffs[static_cast<std::size_t>(j - 1)];
  return s;
}

Root RootSystem::reflect(const Root& r, int i) const {
  check_node(i);
  int coroot = 0;
  for (int j = 1; j <= rank(); ++j) coroot += r.coeffs[static_cast<std::size_t>(j - 1)] * cartan_(j, i);
  Root out = r;
  out.coeffs[static_cast<std::size_t>(i - 1)] -= coroot;
  return out;
}

Root RootSystem::apply(const Word& w, const Root& r) const {
  Root out = r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(out, *it);
  return out;
}

bool RootSystem::is_reduced(const Word& w) const {
  for (int i : w)
    if (i < 1 || i > rank()) return false;
  // Exchange condition: s_{i_1}...s_{i_m} is reduced iff every beta_k is positive.
  Word prefix;
  for (int i : w) {
    if (!apply(prefix, simple(i)).is_positive()) return false;
    prefix.push_back(i);
  }
  return true;
}

bool RootSystem::spells_longest(const Word& w) const {
  return static_cast<int>(w.size()) == longest_length() && is_reduced(w);
}

std::vector<Word> RootSystem::reduced_words_of_longest() const {
  if (rank() > 4) throw Error("enumeration of reduced words of w0 is limited to rank <= 4");
  std::vector<Word> out;
  Word cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == longest_length()) {
      out.push_back(cur);
      return;
    }
    for (int i = 1; i <= rank(); ++i)
      if (apply(cur, simple(i)).is_positive()) {
        cur.push_back(i);
        rec();
        cur.pop_back();
      }
  };
  rec();
  return out;
}

std::vector<Root> RootSystem::beta_sequence(const Word& w) const {
  if (!is_reduced(w)) throw Error("word " + to_string(w) + " is not reduced");
  std::vector<Root> out;
  Word prefix;
  for (int i : w) {
    out.push_back(apply(prefix, simple(i)));
    prefix.push_back(i);
  }
  return out;
}

int RootSystem::extend_letter(const Word& w, int k) const {
  if (!spells_longest(w)) throw Error("word " + to_string(w) + " does not spell w0");
  const int len = longest_length();
  // k = s + m*len with s in [1, len]
  int m = (k - 1) >= 0 ? (k - 1) / len : -((len - k) / len);
  int s = k - m * len;
  int node = w[static_cast<std::size_t>(s - 1)];
  return (m % 2 == 0) ? node : star(node);
}

std::vector<std::pair<int, int>> RootSystem::minimal_pairs(const Word& w, int k) const {
  auto betas = beta_sequence(w);
  const int len = static_cast<int>(betas.size());
  if (k < 1 || k > len) throw Error("position " + std::to_string(k) + " out of range");
  const Root& target = betas[static_cast<std::size_t>(k - 1)];
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= len; ++a)
    for (int b = a + 1; b <= len; ++b)
      if (betas[a - 1] + betas[b - 1] == target) pairs.emplace_back(a, b);
  std::vector<std::pair<int, int>> minimal;
  for (auto [a, b] : pairs) {
    bool inner = false;
    for (auto [a2, b2] : pairs)
      if (a < a2 && b2 < b) inner = true;
    if (!inner) minimal.emplace_back(a, b);
  }
  return minimal;
}

}  // namespace qaff
