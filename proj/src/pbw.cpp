#include "qaffpbw/pbw.hpp"

#include <algorithm>
#include <set>

#include "qaffpbw/error.hpp"

namespace qaff {

ExpVec::ExpVec(const std::map<int, int>& entries) {
  for (auto [k, v] : entries) set(k, v);
}

int ExpVec::at(int k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const std::pair<int, int>& e, int key) { return e.first < key; });
  return (it != entries_.end() && it->first == k) ? it->second : 0;
}

void ExpVec::set(int k, int value) {
  if (value < 0) throw Error("exponent vectors have non-negative entries");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const std::pair<int, int>& e, int key) { return e.first < key; });
  const bool found = it != entries_.end() && it->first == k;
  if (value == 0) {
    if (found) entries_.erase(it);
  } else if (found) {
    it->second = value;
  } else {
    entries_.insert(it, {k, value});
  }
}

void ExpVec::add(int k, int delta) { set(k, at(k) + delta); }

int ExpVec::total() const {
  int t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

std::string ExpVec::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s += (i ? ", " : "") + std::to_string(entries_[i].first) + ":" + std::to_string(entries_[i].second);
  return s + "}";
}

const char* to_string(Order o) {
  switch (o) {
    case Order::Less: return "Less";
    case Order::Greater: return "Greater";
    case Order::Equal: return "Equal";
    case Order::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

std::set<int> union_support(const ExpVec& a, const ExpVec& b) {
  std::set<int> keys;
  for (const auto& e : a.entries()) keys.insert(e.first);
  for (const auto& e : b.entries()) keys.insert(e.first);
  return keys;
}

template <class It>
Order first_difference(const ExpVec& a, const ExpVec& b, It first, It last) {
  for (; first != last; ++first) {
    int x = a.at(*first), y = b.at(*first);
    if (x != y) return x < y ? Order::Less : Order::Greater;
  }
  return Order::Equal;
}

}  // namespace

Order cmp_right(const ExpVec& a, const ExpVec& b) {
  auto keys = union_support(a, b);
  return first_difference(a, b, keys.begin(), keys.end());
}

Order cmp_left(const ExpVec& a, const ExpVec& b) {
  auto keys = union_support(a, b);
  return first_difference(a, b, keys.rbegin(), keys.rend());
}

Order cmp_bilex(const ExpVec& a, const ExpVec& b) {
  Order l = cmp_left(a, b), r = cmp_right(a, b);
  return l == r ? l : Order::Incomparable;
}

int l_of(const ExpVec& a) {
  if (a.is_zero()) throw Error("l(a) is undefined for the zero vector");
  return a.entries().back().first;
}

int r_of(const ExpVec& a) {
  if (a.is_zero()) throw Error("r(a) is undefined for the zero vector");
  return a.entries().front().first;
}

std::vector<ModuleExpr> standard_word(const ExpVec& a, const CuspidalSeq& seq) {
  std::vector<ModuleExpr> out;
  for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it)
    for (int t = 0; t < it->second; ++t) out.push_back(seq.at(it->first));
  return out;
}

ModuleExpr standard_head(const ExpVec& a, const CuspidalSeq& seq) {
  return head(seq.category(), standard_word(a, seq), true);
}

DominantMultiset::DominantMultiset(std::vector<SigmaPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
}

void DominantMultiset::insert(SigmaPoint x) { points_.insert(std::upper_bound(points_.begin(), points_.end(), x), x); }

std::string DominantMultiset::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < points_.size(); ++i) s += (i ? ", " : "") + points_[i].to_string();
  return s + "]";
}

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

CuspidalIndex::CuspidalIndex(const CuspidalSeq& seq) : seq_(&seq), l_(seq.length()), type_(seq.category().type()) {
  for (int s = 1; s <= l_; ++s) {
    ModuleExpr e = seq.at(s);
    if (!e.is_fund())
      throw Error("decompose needs fundamental cuspidal modules; S_" + std::to_string(s) + " = " + e.to_string());
    if (!type_.in_sigma0(e.point())) throw Error("S_" + std::to_string(s) + " is not in sigma_0");
    auto [rep, m] = type_.orbit_rep(e.point());
    if (!by_rep_.emplace(rep, std::pair{s, m}).second)
      throw Error("cuspidal modules S_1..S_l repeat a D-orbit of sigma_0");
  }
  if (by_rep_.size() != type_.sigma0_window(0, type_.h() - 1).size())
    throw Error("cuspidal modules S_1..S_l do not cover sigma_0");
}

int CuspidalIndex::index_of(SigmaPoint x) const {
  type_.check_point(x);
  auto [rep, mx] = type_.orbit_rep(x);
  auto it = by_rep_.find(rep);
  if (it == by_rep_.end()) throw Error("no cuspidal module is labelled " + x.to_string());
  auto [s, ms] = it->second;
  // x = D^{mx} rep and S_s = D^{ms} rep, so x = D^{mx - ms} S_s = S_{s + (mx - ms) l}.
  return s + (mx - ms) * l_;
}

SigmaPoint CuspidalIndex::point_at(int k) const {
  const int m = floor_div(k - 1, l_);
  const ModuleExpr e = seq_->at(k - m * l_);
  return type_.dual_point(e.point(), m);
}

ExpVec decompose(const DominantMultiset& m, const CuspidalSeq& seq) {
  CuspidalIndex index(seq);
  ExpVec a;
  for (const auto& x : m.points()) a.add(index.index_of(x), 1);
  return a;
}

DominantMultiset compose(const ExpVec& a, const CuspidalSeq& seq) {
  DominantMultiset out;
  for (const auto& [k, mult] : a.entries()) {
    ModuleExpr e = seq.at(k);
    if (!e.is_fund()) throw Error("S_" + std::to_string(k) + " = " + e.to_string() + " is not a fundamental label");
    for (int t = 0; t < mult; ++t) out.insert(e.point());
  }
  return out;
}

ExpVec dshift(const ExpVec& a, int m, int l) {
  ExpVec out;
  for (const auto& [k, v] : a.entries()) out.set(k + m * l, v);
  return out;
}

bool in_window(const ExpVec& a, int lo, int hi) { return a.is_zero() || (r_of(a) >= lo && l_of(a) <= hi); }

PeelReport peel_top_check(const DominantMultiset& m, const CuspidalSeq& seq) {
  PeelReport report;
  if (m.empty()) {
    report.vacuous = true;
    return report;
  }
  const ExpVec a = decompose(m, seq);
  const HLCategory& cat = seq.category();
  report.top = l_of(a);
  report.expected = a.at(report.top);
  const SigmaPoint top = cat.type().dual_point(seq.at(report.top).point(), 1);
  for (const auto& x : m.points()) report.observed += d_fund(cat, top, x);
  report.pass = report.observed == report.expected;
  return report;
}

}  // namespace qaff
