#include "qaffpbw/modexpr.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "qaffpbw/error.hpp"

namespace qaff {

struct ModuleExpr::Node {
  Kind kind = Kind::One;
  SigmaPoint point;
  int shift = 0;
  std::vector<ModuleExpr> children;
  bool certified = false;
};

ModuleExpr::ModuleExpr() : node_(std::make_shared<const Node>()) {}

ModuleExpr ModuleExpr::fund(SigmaPoint x) {
  Node n;
  n.kind = Kind::Fund;
  n.point = x;
  return ModuleExpr(std::make_shared<const Node>(std::move(n)));
}

ModuleExpr ModuleExpr::dual_node(int k, ModuleExpr inner) {
  Node n;
  n.kind = Kind::Dual;
  n.shift = k;
  n.children.push_back(std::move(inner));
  return ModuleExpr(std::make_shared<const Node>(std::move(n)));
}

ModuleExpr ModuleExpr::head_node(std::vector<ModuleExpr> factors, bool certified_normal) {
  Node n;
  n.kind = Kind::Head;
  n.children = std::move(factors);
  n.certified = certified_normal;
  return ModuleExpr(std::make_shared<const Node>(std::move(n)));
}

ModuleExpr::Kind ModuleExpr::kind() const { return node_->kind; }

SigmaPoint ModuleExpr::point() const {
  if (!is_fund()) throw Error("expression " + to_string() + " is not a fundamental label");
  return node_->point;
}

int ModuleExpr::shift() const { return node_->shift; }

const ModuleExpr& ModuleExpr::inner() const {
  if (!is_dual()) throw Error("expression " + to_string() + " is not a dual shift");
  return node_->children.front();
}

const std::vector<ModuleExpr>& ModuleExpr::factors() const { return node_->children; }

bool ModuleExpr::certified_normal() const { return node_->certified; }

std::size_t ModuleExpr::node_count() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.node_count();
  return n;
}

int ModuleExpr::depth() const {
  int d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

std::vector<SigmaPoint> ModuleExpr::leaves() const {
  if (is_fund()) return {node_->point};
  std::vector<SigmaPoint> out;
  for (const auto& c : node_->children) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string ModuleExpr::to_string() const {
  switch (kind()) {
    case Kind::One: return "1";
    case Kind::Fund: return node_->point.to_string();
    case Kind::Dual: return "D^" + std::to_string(node_->shift) + "(" + inner().to_string() + ")";
    case Kind::Head: {
      std::string s = "hd[";
      for (std::size_t i = 0; i < factors().size(); ++i) s += (i ? "," : "") + factors()[i].to_string();
      return s + "]";
    }
  }
  return "?";
}

bool operator==(const ModuleExpr& a, const ModuleExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ModuleExpr::Kind::One: return true;
    case ModuleExpr::Kind::Fund: return a.node_->point == b.node_->point;
    case ModuleExpr::Kind::Dual: return a.node_->shift == b.node_->shift && a.inner() == b.inner();
    case ModuleExpr::Kind::Head: return a.factors() == b.factors();
  }
  return false;
}

bool commute(const HLCategory& cat, const ModuleExpr& a, const ModuleExpr& b) {
  if (!a.is_fund() || !b.is_fund() || !cat.has_provider()) return false;
  return d_fund(cat, a.point(), b.point()) == 0;
}

bool certify_normal(const HLCategory& cat, const std::vector<ModuleExpr>& factors) {
  if (!cat.has_provider() || !cat.type().dual_shift) return false;
  for (const auto& f : factors)
    if (!f.is_fund()) return false;
  for (std::size_t a = 0; a < factors.size(); ++a)
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      SigmaPoint x = factors[a].point(), y = factors[b].point();
      const int bound = shift_bound(cat, x, y);
      for (int m = 1; m <= bound; ++m)
        if (d_fund(cat, cat.type().dual_point(x, m), y) != 0) return false;
    }
  return true;
}

namespace {

class Normalizer {
 public:
  Normalizer(const HLCategory& cat, std::mt19937_64* schedule) : cat_(cat), rng_(schedule) {}

  ModuleExpr norm(const ModuleExpr& e) {
    switch (e.kind()) {
      case ModuleExpr::Kind::One:
      case ModuleExpr::Kind::Fund: return e;
      case ModuleExpr::Kind::Dual: return apply_dual(norm(e.inner()), e.shift());
      case ModuleExpr::Kind::Head: {
        std::vector<ModuleExpr> kids(e.factors().size());
        std::vector<std::size_t> order(kids.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (rng_) std::shuffle(order.begin(), order.end(), *rng_);
        for (auto i : order) kids[i] = norm(e.factors()[i]);
        return norm_head(std::move(kids), e.certified_normal());
      }
    }
    return e;
  }

  // e must already be in normal form.
  ModuleExpr apply_dual(const ModuleExpr& e, int k) {
    if (k == 0) return e;
    switch (e.kind()) {
      case ModuleExpr::Kind::One: return e;
      case ModuleExpr::Kind::Fund: return ModuleExpr::fund(cat_.type().dual_point(e.point(), k));
      case ModuleExpr::Kind::Dual: {
        int total = e.shift() + k;
        return total == 0 ? e.inner() : ModuleExpr::dual_node(total, e.inner());
      }
      case ModuleExpr::Kind::Head: {
        if (!e.certified_normal() && !certify_normal(cat_, e.factors())) return ModuleExpr::dual_node(k, e);
        std::vector<ModuleExpr> kids;
        for (const auto& f : e.factors()) kids.push_back(apply_dual(f, k));
        // The D-image of a normal sequence is normal.
        return norm_head(std::move(kids), true);
      }
    }
    return e;
  }

  // Factors must already be in normal form.
  ModuleExpr norm_head(std::vector<ModuleExpr> list, bool certified) {
    while (true) {
      if (step_structural(list, certified)) continue;
      if (list.empty()) return ModuleExpr::one();
      if (list.size() == 1) return list.front();
      if (step_mndm(list)) {
        certified = false;
        continue;
      }
      if (auto fused = fuse(list)) return *fused;
      if (rng_ && shuffle_commuting(list)) continue;
      break;
    }
    auto sorted = canonical_order(list);
    if (sorted != list) certified = false;
    if (auto fused = fuse(sorted)) return *fused;
    return ModuleExpr::head_node(std::move(sorted), certified);
  }

 private:
  // Flattening of Head factors and removal of One factors (R4). With a
  // schedule, only one randomly chosen such step is applied per call.
  bool step_structural(std::vector<ModuleExpr>& list, bool& certified) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i].is_head() || list[i].is_one()) candidates.push_back(i);
    if (candidates.empty()) return false;
    if (rng_) {
      std::size_t pick = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng_)];
      candidates = {pick};
    }
    std::vector<ModuleExpr> out;
    std::size_t c = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (c < candidates.size() && candidates[c] == i) {
        ++c;
        if (list[i].is_head()) {
          certified = false;
          out.insert(out.end(), list[i].factors().begin(), list[i].factors().end());
        }
        continue;
      }
      out.push_back(list[i]);
    }
    list = std::move(out);
    return true;
  }

  bool movable_to_front(const std::vector<ModuleExpr>& list, std::size_t i) {
    for (std::size_t t = 0; t < i; ++t)
      if (!commute(cat_, list[t], list[i])) return false;
    return true;
  }

  bool movable_to_back(const std::vector<ModuleExpr>& list, std::size_t j) {
    for (std::size_t t = j + 1; t < list.size(); ++t)
      if (!commute(cat_, list[j], list[t])) return false;
    return true;
  }

  // R1 up to commuting swaps.
  bool step_mndm(std::vector<ModuleExpr>& list) {
    if (!cat_.type().dual_shift) return false;
    std::vector<std::pair<std::size_t, std::size_t>> matches;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_fund() || !movable_to_front(list, i)) continue;
      const ModuleExpr target = ModuleExpr::fund(cat_.type().dual_point(list[i].point(), 1));
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (list[j] == target && movable_to_back(list, j)) matches.emplace_back(i, j);
    }
    if (matches.empty()) return false;
    auto [i, j] = rng_ ? matches[std::uniform_int_distribution<std::size_t>(0, matches.size() - 1)(*rng_)]
                       : matches.front();
    list.erase(list.begin() + static_cast<std::ptrdiff_t>(j));
    list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
    return true;
  }

  // R3
  std::optional<ModuleExpr> fuse(const std::vector<ModuleExpr>& list) {
    if (list.size() != 2 || !list[0].is_fund() || !list[1].is_fund()) return std::nullopt;
    if (auto c = cat_.fusion().lookup(cat_.type(), list[0].point(), list[1].point())) return ModuleExpr::fund(*c);
    return std::nullopt;
  }

  // A few random swaps of commuting neighbours, in either direction. Used by
  // the randomized schedule only; the canonical sort undoes them.
  bool shuffle_commuting(std::vector<ModuleExpr>& list) {
    if (shuffles_left_ == 0) return false;
    --shuffles_left_;
    bool any = false;
    for (std::size_t t = 0; t + 1 < list.size(); ++t)
      if (commute(cat_, list[t], list[t + 1]) && std::bernoulli_distribution(0.5)(*rng_)) {
        std::swap(list[t], list[t + 1]);
        any = true;
      }
    return any;
  }

  // R2: least rearrangement under swaps of commuting neighbours. Picks, at
  // each position, the smallest fundamental among those that commute with
  // every factor still ahead of them.
  // Exponent first, then the node of the D-orbit representative, so that
  // D^k moves every key by the same amount and preserves the order.
  std::pair<int, int> order_key(SigmaPoint x) const {
    if (!cat_.type().dual_shift) return {x.exp, x.node};
    return {x.exp, cat_.type().orbit_rep(x).first.node};
  }

  std::vector<ModuleExpr> canonical_order(std::vector<ModuleExpr> rest) {
    std::vector<ModuleExpr> out;
    while (!rest.empty()) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < rest.size(); ++i) {
        if (!rest[i].is_fund() || !rest[best].is_fund()) continue;
        if (!(order_key(rest[i].point()) < order_key(rest[best].point()))) continue;
        if (movable_to_front(rest, i)) best = i;
      }
      out.push_back(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
  }

  const HLCategory& cat_;
  std::mt19937_64* rng_;
  int shuffles_left_ = 4;
};

}  // namespace

ModuleExpr normalize(const HLCategory& cat, const ModuleExpr& e) { return Normalizer(cat, nullptr).norm(e); }

ModuleExpr normalize(const HLCategory& cat, const ModuleExpr& e, std::mt19937_64& schedule) {
  return Normalizer(cat, &schedule).norm(e);
}

ModuleExpr dual(const HLCategory& cat, const ModuleExpr& e, int k) {
  Normalizer n(cat, nullptr);
  return n.apply_dual(n.norm(e), k);
}

ModuleExpr head(const HLCategory& cat, std::vector<ModuleExpr> factors, bool certified_normal) {
  Normalizer n(cat, nullptr);
  for (auto& f : factors) f = n.norm(f);
  return n.norm_head(std::move(factors), certified_normal);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

BlockFunctional block_functional(const HLCategory& cat, const ModuleExpr& e) {
  switch (e.kind()) {
    case ModuleExpr::Kind::One: return {};
    case ModuleExpr::Kind::Fund: return BlockFunctional::of(cat, e.point());
    case ModuleExpr::Kind::Dual: {
      auto inner = block_functional(cat, e.inner());
      return (e.shift() % 2 == 0) ? inner : inner.negated();
    }
    case ModuleExpr::Kind::Head: {
      BlockFunctional sum;
      for (const auto& f : e.factors()) sum += block_functional(cat, f);
      return sum;
    }
  }
  return {};
}

Verdict equal(const HLCategory& cat, const ModuleExpr& a, const ModuleExpr& b) {
  const ModuleExpr na = normalize(cat, a), nb = normalize(cat, b);
  if (na == nb) return Verdict::Equal;
  // Distinct labels in sigma are non-isomorphic fundamentals.
  if (na.is_fund() && nb.is_fund()) return Verdict::Distinct;
  if (cat.has_provider() && cat.type().dual_shift &&
      block_functional(cat, na).profile(cat) != block_functional(cat, nb).profile(cat))
    return Verdict::Distinct;
  return Verdict::Unknown;
}

int lambda_inf(const HLCategory& cat, const ModuleExpr& e, SigmaPoint y) {
  return block_functional(cat, e).value_at(cat, y);
}

InvariantValue lambda_bound(const HLCategory& cat, const ModuleExpr& e, SigmaPoint y) {
  switch (e.kind()) {
    case ModuleExpr::Kind::One: return {0, Exactness::Exact};
    case ModuleExpr::Kind::Fund: return {lambda_fund(cat, e.point(), y), Exactness::Exact};
    // Lambda(D^k M, N) = Lambda(M, D^{-k} N)
    case ModuleExpr::Kind::Dual: return lambda_bound(cat, e.inner(), cat.type().dual_point(y, -e.shift()));
    case ModuleExpr::Kind::Head: {
      InvariantValue sum{0, Exactness::UpperBound};
      for (const auto& f : e.factors()) sum.value += lambda_bound(cat, f, y).value;
      return sum;
    }
  }
  return {};
}

InvariantValue lambda_bound(const HLCategory& cat, SigmaPoint x, const ModuleExpr& e) {
  switch (e.kind()) {
    case ModuleExpr::Kind::One: return {0, Exactness::Exact};
    case ModuleExpr::Kind::Fund: return {lambda_fund(cat, x, e.point()), Exactness::Exact};
    // Lambda(M, D^k N) = Lambda(D^{-k} M, N)
    case ModuleExpr::Kind::Dual: return lambda_bound(cat, cat.type().dual_point(x, -e.shift()), e.inner());
    case ModuleExpr::Kind::Head: {
      InvariantValue sum{0, Exactness::UpperBound};
      for (const auto& f : e.factors()) sum.value += lambda_bound(cat, x, f).value;
      return sum;
    }
  }
  return {};
}

InvariantValue d_bound(const HLCategory& cat, const ModuleExpr& e, SigmaPoint y) {
  auto a = lambda_bound(cat, e, y);
  auto b = lambda_bound(cat, y, e);
  int twice = a.value + b.value;
  int value = twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
  if (a.exact() && b.exact()) return {value, Exactness::Exact};
  if (value <= 0) return {0, Exactness::Exact};
  return {value, Exactness::UpperBound};
}

}  // namespace qaff
