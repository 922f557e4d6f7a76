#include "qaffpbw/duality.hpp"

#include <algorithm>

#include "qaffpbw/error.hpp"

namespace qaff {

const char* to_string(Origin o) {
  switch (o) {
    case Origin::FromQ: return "from-Q";
    case Origin::Reflected: return "reflected";
    case Origin::User: return "user";
  }
  return "?";
}

const char* to_string(Completeness c) { return c == Completeness::Complete ? "complete" : "unknown"; }

const char* to_string(Strength s) {
  switch (s) {
    case Strength::Verified: return "verified";
    case Strength::Inherited: return "inherited";
    case Strength::Unverified: return "unverified";
    case Strength::Failed: return "failed";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unknown: return "unknown";
  }
  return "?";
}

DualityDatum::DualityDatum(std::vector<ModuleExpr> members) : members_(std::move(members)) {}

const ModuleExpr& DualityDatum::member(int i) const {
  if (i < 1 || i > size()) throw Error("datum has no member " + std::to_string(i));
  return members_[static_cast<std::size_t>(i - 1)];
}

bool DualityDatum::all_fundamental() const {
  return std::all_of(members_.begin(), members_.end(), [](const ModuleExpr& e) { return e.is_fund(); });
}

DualityDatum& DualityDatum::set_cartan(CartanMatrix c) {
  if (c.rank() != size()) throw Error("Cartan matrix rank does not match the datum");
  cartan_ = std::move(c);
  return *this;
}
DualityDatum& DualityDatum::set_origin(Origin o) {
  origin_ = o;
  return *this;
}
DualityDatum& DualityDatum::set_chain(std::vector<int> chain) {
  chain_ = std::move(chain);
  return *this;
}
DualityDatum& DualityDatum::set_completeness(Completeness c) {
  completeness_ = c;
  return *this;
}
DualityDatum& DualityDatum::set_strength(Strength s) {
  strength_ = s;
  return *this;
}

std::string DualityDatum::to_string() const {
  std::string s = "{";
  for (int i = 1; i <= size(); ++i) s += (i > 1 ? ", R" : "R") + std::to_string(i) + "=" + member(i).to_string();
  return s + "}";
}

namespace {

// Fundamental leaves with the enclosing dual shifts applied.
void effective_points(const HLCategory& cat, const ModuleExpr& e, int shift, std::vector<SigmaPoint>& out) {
  switch (e.kind()) {
    case ModuleExpr::Kind::One: return;
    case ModuleExpr::Kind::Fund: out.push_back(cat.type().dual_point(e.point(), shift)); return;
    case ModuleExpr::Kind::Dual: effective_points(cat, e.inner(), shift + e.shift(), out); return;
    case ModuleExpr::Kind::Head:
      for (const auto& f : e.factors()) effective_points(cat, f, shift, out);
      return;
  }
}

int pair_bound(const HLCategory& cat, const ModuleExpr& a, const ModuleExpr& b) {
  std::vector<SigmaPoint> xs, ys;
  effective_points(cat, a, 0, xs);
  effective_points(cat, b, 0, ys);
  int bound = 0;
  for (const auto& x : xs)
    for (const auto& y : ys) bound = std::max(bound, shift_bound(cat, x, y));
  return bound + 1;
}

}  // namespace

std::optional<int> d_expr(const HLCategory& cat, const ModuleExpr& e, const ModuleExpr& f) {
  if (e.is_one() || f.is_one()) return 0;
  if (e.is_fund() && f.is_fund()) return d_fund(cat, e.point(), f.point());
  InvariantValue v;
  if (e.is_fund())
    v = d_bound(cat, f, e.point());
  else if (f.is_fund())
    v = d_bound(cat, e, f.point());
  else
    return std::nullopt;
  if (!v.exact()) return std::nullopt;
  return v.value;
}

StrongReport check_strong(const HLCategory& cat, const DualityDatum& d) {
  cat.denominators();
  StrongReport report;
  const int n = d.size();
  if (n == 0) {
    report.overall = CheckStatus::Fail;
    report.note = "empty datum";
    return report;
  }

  CartanMatrix c(n);
  bool cartan_known = true;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto v = d_expr(cat, d.member(i), d.member(j));
      if (!v) {
        cartan_known = false;
        continue;
      }
      c.set(i, j, -*v);
      c.set(j, i, -*v);
    }

  bool unknown = !cartan_known;
  bool failed = false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int bound = pair_bound(cat, d.member(i), d.member(j));
      for (int k = -bound; k <= bound; ++k) {
        PairCheck pc{i, j, k, 0, std::nullopt, CheckStatus::Unknown};
        if (i == j)
          pc.expected = (k == 1 || k == -1) ? 1 : 0;
        else if (k == 0) {
          // Defines c_ij; only its range is constrained.
          if (!cartan_known) continue;
          pc.expected = -c(i, j);
          if (pc.expected > 1) pc.expected = 1;
        }
        pc.observed = d_expr(cat, d.member(i), dual(cat, d.member(j), k));
        ++report.checked;
        if (!pc.observed) {
          unknown = true;
          report.problems.push_back(pc);
          continue;
        }
        pc.status = *pc.observed == pc.expected ? CheckStatus::Pass : CheckStatus::Fail;
        if (pc.status == CheckStatus::Fail) {
          failed = true;
          report.problems.push_back(pc);
        }
      }
    }

  if (cartan_known) {
    if (c.is_finite_simply_laced())
      report.cartan = c;
    else {
      failed = true;
      report.note = "induced matrix is not of finite simply-laced type";
    }
  }
  report.overall = failed ? CheckStatus::Fail : unknown ? CheckStatus::Unknown : CheckStatus::Pass;
  return report;
}

CartanMatrix induced_cartan(const HLCategory& cat, const DualityDatum& d) {
  const int n = d.size();
  CartanMatrix c(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto v = d_expr(cat, d.member(i), d.member(j));
      if (!v)
        throw Error("induced_cartan: d(R" + std::to_string(i) + ", R" + std::to_string(j) + ") is not determined");
      if (*v > 1)
        throw Error("induced_cartan: d(R" + std::to_string(i) + ", R" + std::to_string(j) +
                    ") = " + std::to_string(*v) + " is not simply-laced");
      c.set(i, j, -*v);
      c.set(j, i, -*v);
    }
  if (!c.is_finite_simply_laced()) throw Error("induced_cartan: matrix is not of finite type");
  return c;
}

CartanMatrix cartan_of(const HLCategory& cat, const DualityDatum& d) {
  if (d.cartan()) return *d.cartan();
  return induced_cartan(cat, d);
}

namespace {

DualityDatum reflected(const HLCategory& cat, const DualityDatum& d, int k, bool inverse) {
  const CartanMatrix c = cartan_of(cat, d);
  if (k < 1 || k > d.size()) throw Error("reflection at a node outside the datum: " + std::to_string(k));
  const ModuleExpr& rk = d.member(k);
  std::vector<ModuleExpr> members;
  for (int i = 1; i <= d.size(); ++i) {
    const ModuleExpr& ri = d.member(i);
    if (i == k)
      members.push_back(dual(cat, ri, inverse ? -1 : 1));
    else if (c(i, k) == -1)
      // Both factors are real, so the pair is a normal sequence.
      members.push_back(inverse ? head(cat, {ri, rk}, true) : head(cat, {rk, ri}, true));
    else
      members.push_back(ri);
  }

  DualityDatum out(std::move(members));
  out.set_cartan(c);
  out.set_origin(Origin::Reflected);
  auto chain = d.chain();
  chain.push_back(inverse ? -k : k);
  out.set_chain(std::move(chain));
  out.set_completeness(d.completeness());

  const bool parent_strong = d.strength() == Strength::Verified || d.strength() == Strength::Inherited;
  if (out.all_fundamental() && cat.has_provider()) {
    auto report = check_strong(cat, out);
    out.set_strength(report.pass() ? Strength::Verified : Strength::Failed);
  } else {
    out.set_strength(parent_strong ? Strength::Inherited : Strength::Unverified);
  }
  return out;
}

}  // namespace

DualityDatum reflect(const HLCategory& cat, const DualityDatum& d, int k) { return reflected(cat, d, k, false); }

DualityDatum reflect_inv(const HLCategory& cat, const DualityDatum& d, int k) { return reflected(cat, d, k, true); }

Verdict equal(const HLCategory& cat, const DualityDatum& a, const DualityDatum& b) {
  if (a.size() != b.size()) return Verdict::Distinct;
  Verdict out = Verdict::Equal;
  for (int i = 1; i <= a.size(); ++i) {
    Verdict v = equal(cat, a.member(i), b.member(i));
    if (v == Verdict::Distinct) return v;
    if (v == Verdict::Unknown) out = Verdict::Unknown;
  }
  return out;
}

}  // namespace qaff
