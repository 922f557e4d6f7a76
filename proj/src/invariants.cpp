#include "qaffpbw/invariants.hpp"

#include <cstdint>
#include <cstdlib>
#include <numeric>

#include "qaffpbw/error.hpp"

namespace qaff {

int shift_bound(const HLCategory& cat, SigmaPoint x, SigmaPoint y) {
  const int h = cat.type().h();
  return (cat.denominators().max_abs_zero() + std::abs(x.exp - y.exp)) / h + 1;
}

int d_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y) {
  const auto& table = cat.denominators();
  return table.order_at(x.node, y.node, y.exp - x.exp) + table.order_at(y.node, x.node, x.exp - y.exp);
}

namespace {

// sum_{k in [lo, hi]} sign(k) * d(x, D^k y), with [lo, hi] clipped to the support.
template <class Sign>
int shifted_sum(const HLCategory& cat, SigmaPoint x, SigmaPoint y, int lo, int hi, Sign sign) {
  const int bound = shift_bound(cat, x, y);
  lo = std::max(lo, -bound);
  hi = std::min(hi, bound);
  int total = 0;
  for (int k = lo; k <= hi; ++k) {
    int d = d_fund(cat, x, cat.type().dual_point(y, k));
    if (d) total += sign(k) * d;
  }
  return total;
}

int alt(int k) { return (k % 2 == 0) ? 1 : -1; }

constexpr int kAll = 1 << 20;

}  // namespace

int lambda_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y) {
  return shifted_sum(cat, x, y, -kAll, kAll, [](int k) { return alt(k + (k < 0 ? 1 : 0)); });
}

int lambda_inf_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y) {
  return shifted_sum(cat, x, y, -kAll, kAll, alt);
}

int de_tilde_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y) {
  return shifted_sum(cat, x, y, -kAll, -1, [](int k) { return alt(k + 1); });
}

int zero_c_fund(const HLCategory& cat, SigmaPoint x, SigmaPoint y) {
  return shifted_sum(cat, x, y, 0, kAll, alt);
}

int pairing_E(const HLCategory& cat, SigmaPoint x, SigmaPoint y) { return -lambda_inf_fund(cat, x, y); }

namespace {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d < 0) n = -n, d = -d;
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
    return {n, d};
  }
  Rational operator-(const Rational& o) const { return make(num * o.den - o.num * den, den * o.den); }
  Rational operator*(const Rational& o) const { return make(num * o.num, den * o.den); }
  Rational operator/(const Rational& o) const { return make(num * o.den, den * o.num); }
  bool zero() const { return num == 0; }
};

}  // namespace

Root root_coordinates(const HLCategory& cat, SigmaPoint x, const std::vector<SigmaPoint>& basis) {
  const int n = static_cast<int>(basis.size());
  if (n == 0) throw Error("root_coordinates: empty basis");
  CartanMatrix gram(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gram.set(i, j, pairing_E(cat, basis[i - 1], basis[j - 1]));
  if (!gram.is_finite_simply_laced())
    throw Error("root_coordinates: basis pairings do not form a finite simply-laced Cartan matrix");

  // Solve gram * c = v exactly.
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i].push_back({gram(i + 1, j + 1), 1});
    m[i].push_back({pairing_E(cat, x, basis[static_cast<std::size_t>(i)]), 1});
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col].zero()) ++pivot;
    if (pivot == n) throw Error("root_coordinates: degenerate basis");
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c <= n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  Root out{std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) {
    Rational v = m[i][n] / m[i][i];
    if (v.den != 1) throw Error("root_coordinates: " + x.to_string() + " has non-integral coordinates");
    out.coeffs[static_cast<std::size_t>(i)] = static_cast<int>(v.num);
  }
  return out;
}

int lambda_inf_word(const HLCategory& cat, const std::vector<SigmaPoint>& xs, const std::vector<SigmaPoint>& ys) {
  int total = 0;
  for (const auto& x : xs)
    for (const auto& y : ys) total += lambda_inf_fund(cat, x, y);
  return total;
}

InvariantValue lambda_word(const HLCategory& cat, const std::vector<SigmaPoint>& xs, const std::vector<SigmaPoint>& ys) {
  InvariantValue v;
  for (const auto& x : xs)
    for (const auto& y : ys) v.value += lambda_fund(cat, x, y);
  if (xs.size() > 1 || ys.size() > 1) v.exactness = Exactness::UpperBound;
  return v;
}

BlockFunctional BlockFunctional::of(const HLCategory& cat, SigmaPoint x) {
  BlockFunctional e;
  e.add(cat, x);
  return e;
}

void BlockFunctional::add(const HLCategory& cat, SigmaPoint x, int sign) {
  auto [rep, m] = cat.type().orbit_rep(x);
  int& slot = terms_[rep];
  slot += (m % 2 == 0) ? sign : -sign;
  if (slot == 0) terms_.erase(rep);
}

BlockFunctional& BlockFunctional::operator+=(const BlockFunctional& other) {
  for (const auto& [rep, c] : other.terms_) {
    int& slot = terms_[rep];
    slot += c;
    if (slot == 0) terms_.erase(rep);
  }
  return *this;
}

BlockFunctional BlockFunctional::negated() const {
  BlockFunctional out = *this;
  for (auto& [rep, c] : out.terms_) c = -c;
  return out;
}

int BlockFunctional::value_at(const HLCategory& cat, SigmaPoint y) const {
  int total = 0;
  for (const auto& [rep, c] : terms_) total += c * lambda_inf_fund(cat, rep, y);
  return total;
}

int BlockFunctional::pairing(const HLCategory& cat, const BlockFunctional& other) const {
  int total = 0;
  for (const auto& [rep, c] : other.terms_) total += c * value_at(cat, rep);
  return -total;
}

std::vector<int> BlockFunctional::profile(const HLCategory& cat) const {
  std::vector<int> out;
  for (const auto& y : cat.type().sigma0_window(0, cat.type().h() - 1)) out.push_back(value_at(cat, y));
  return out;
}

}  // namespace qaff
