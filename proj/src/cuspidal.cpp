#include "qaffpbw/cuspidal.hpp"

#include <algorithm>

#include "qaffpbw/error.hpp"

namespace qaff {

std::string CuspExpr::to_string() const {
  if (is_letter()) return "L(" + std::to_string(letter) + ")";
  return "(" + left->to_string() + " nabla " + right->to_string() + ")";
}

CuspExpr cuspidal_expr(const RootSystem& rs, const Word& w, int k) {
  if (!rs.spells_longest(w)) throw Error("word " + to_string(w) + " does not spell w0");
  if (k < 1 || k > static_cast<int>(w.size())) throw Error("cuspidal_expr: index out of range");
  const Root beta = rs.beta_sequence(w)[static_cast<std::size_t>(k - 1)];
  if (beta.is_simple()) {
    auto it = std::find(beta.coeffs.begin(), beta.coeffs.end(), 1);
    return CuspExpr{static_cast<int>(it - beta.coeffs.begin()) + 1, nullptr, nullptr};
  }
  auto pairs = rs.minimal_pairs(w, k);
  if (pairs.empty()) throw Error("no minimal pair for a non-simple root");
  auto [a, b] = *std::min_element(pairs.begin(), pairs.end());
  return CuspExpr{0, std::make_shared<const CuspExpr>(cuspidal_expr(rs, w, a)),
                  std::make_shared<const CuspExpr>(cuspidal_expr(rs, w, b))};
}

namespace {

RootSystem checked_roots(const HLCategory& cat, const DualityDatum& d, const Word& w) {
  RootSystem rs(cartan_of(cat, d));
  if (!rs.spells_longest(w))
    throw Error("word " + to_string(w) + " does not spell w0 for the Cartan matrix of the datum");
  return rs;
}

ModuleExpr substitute(const HLCategory& cat, const DualityDatum& d, const CuspExpr& e) {
  if (e.is_letter()) return d.member(e.letter);
  // Cuspidal modules are real, so a two-term product is a normal sequence.
  return head(cat, {substitute(cat, d, *e.left), substitute(cat, d, *e.right)}, true);
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

CuspidalSeq::CuspidalSeq(HLCategory cat, DualityDatum datum, Word word)
    : cat_(std::move(cat)), datum_(std::move(datum)), word_(std::move(word)), roots_(checked_roots(cat_, datum_, word_)) {}

CuspidalSeq::CuspidalSeq(const CuspidalSeq& other)
    : cat_(other.cat_), datum_(other.datum_), word_(other.word_), roots_(other.roots_) {
  std::lock_guard lock(other.mutex_);
  memo_ = other.memo_;
}

CuspidalSeq& CuspidalSeq::operator=(const CuspidalSeq& other) {
  if (this == &other) return *this;
  std::map<int, ModuleExpr> memo;
  {
    std::lock_guard lock(other.mutex_);
    memo = other.memo_;
  }
  cat_ = other.cat_;
  datum_ = other.datum_;
  word_ = other.word_;
  roots_ = other.roots_;
  std::lock_guard lock(mutex_);
  memo_ = std::move(memo);
  return *this;
}

ModuleExpr CuspidalSeq::at(int k) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  }
  const int l = length();
  const int m = floor_div(k - 1, l);
  const int s = k - m * l;
  ModuleExpr value;
  if (m == 0)
    value = substitute(cat_, datum_, cuspidal_expr(roots_, word_, s));
  else
    value = dual(cat_, at(s), m);
  std::lock_guard lock(mutex_);
  return memo_.emplace(k, value).first->second;
}

ModuleExpr materialize(const HLCategory& cat, const DualityDatum& d, const Word& w, int k) {
  return CuspidalSeq(cat, d, w).at(k);
}

CuspReport verify_cuspidal_axioms(const CuspidalSeq& seq, int lo, int hi, bool adapted) {
  const HLCategory& cat = seq.category();
  CuspReport report;
  auto record = [&](std::string kind, int a, int b, int m, std::optional<bool> ok) {
    ++report.checked;
    if (ok && *ok) return;
    report.problems.push_back({std::move(kind), a, b, m, ok ? "fail" : "unknown"});
    if (!ok) {
      if (report.overall == CheckStatus::Pass) report.overall = CheckStatus::Unknown;
    } else {
      report.overall = CheckStatus::Fail;
    }
  };

  std::map<int, ModuleExpr> s;
  for (int k = lo; k <= hi; ++k) s.emplace(k, seq.at(k));

  for (int a = lo; a <= hi; ++a) {
    const ModuleExpr& sa = s.at(a);
    if (!sa.is_fund()) {
      record("root", a, a, 0, std::nullopt);
    } else {
      const SigmaPoint x = sa.point();
      const int bound = shift_bound(cat, x, x);
      for (int m = -bound; m <= bound; ++m)
        record("root", a, a, m, d_fund(cat, x, cat.type().dual_point(x, m)) == ((m == 1 || m == -1) ? 1 : 0));
    }
    for (int b = lo; b < a; ++b) {
      const ModuleExpr& sb = s.at(b);
      if (!sa.is_fund() || !sb.is_fund()) {
        record("unmixed", a, b, 0, std::nullopt);
        if (adapted) record("adapted", a, b, 0, std::nullopt);
        continue;
      }
      const SigmaPoint x = sa.point(), y = sb.point();
      const int bound = shift_bound(cat, x, y) + 1;
      for (int m = 1; m <= bound; ++m) record("unmixed", a, b, m, d_fund(cat, cat.type().dual_point(x, m), y) == 0);
      if (adapted) record("adapted", a, b, 0, cat.denominators().order_at(x.node, y.node, y.exp - x.exp) == 0);
    }
  }
  return report;
}

ShiftReport refl_shift_check(const HLCategory& cat, const DualityDatum& d, const Word& w, int lo, int hi) {
  CuspidalSeq original(cat, d, w);
  const int i1 = w.front();
  ShiftReport report;
  report.rotated.assign(w.begin() + 1, w.end());
  report.rotated.push_back(original.roots().star(i1));
  report.reflected = reflect(cat, d, i1);
  CuspidalSeq shifted(cat, report.reflected, report.rotated);
  for (int k = lo; k <= hi; ++k) {
    Verdict v = equal(cat, shifted.at(k), original.at(k + 1));
    if (v != Verdict::Equal) {
      report.pass = false;
      report.mismatches.emplace_back(k, v);
    }
  }
  return report;
}

ShiftReport refl_shift_check(const HLCategory& cat, const DualityDatum& d, const Word& w) {
  const int l = static_cast<int>(w.size());
  return refl_shift_check(cat, d, w, -l, 2 * l);
}

}  // namespace qaff
