#include "qaffpbw/affine.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "qaffpbw/category.hpp"
#include "qaffpbw/error.hpp"

namespace qaff {

std::string SigmaPoint::to_string() const {
  return "(" + std::to_string(node) + "," + std::to_string(exp) + ")";
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod2(int a) { return ((a % 2) + 2) % 2; }

// Bipartite colouring of a connected Dynkin diagram with node 1 even.
std::vector<int> bipartite_parity(const CartanMatrix& c) {
  std::vector<int> parity(static_cast<std::size_t>(c.rank()), -1);
  parity[0] = 0;
  std::vector<int> queue{1};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int j = 1; j <= c.rank(); ++j)
      if (c.adjacent(queue[q], j) && parity[j - 1] < 0) {
        parity[j - 1] = 1 - parity[queue[q] - 1];
        queue.push_back(j);
      }
  return parity;
}

struct Row {
  char letter;
  int twist;
  // Maps the written subscript N to (n, |I_0|, finite type, finite rank);
  // returns false when N is not admissible for the row.
  bool (*resolve)(int N, int& rank, FinType& fin, int& fin_rank);
};

const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      {'A', 1, [](int N, int& r, FinType& f, int& fr) { r = N; f = FinType::A; fr = N; return N >= 1; }},
      {'B', 1, [](int N, int& r, FinType& f, int& fr) { r = N; f = FinType::A; fr = 2 * N - 1; return N >= 2; }},
      {'C', 1, [](int N, int& r, FinType& f, int& fr) { r = N; f = FinType::D; fr = N + 1; return N >= 3; }},
      {'D', 1, [](int N, int& r, FinType& f, int& fr) { r = N; f = FinType::D; fr = N; return N >= 4; }},
      // A_{2n}^(2) -> A_{2n} and A_{2n-1}^(2) -> A_{2n-1}; |I_0| = n in both.
      {'A', 2, [](int N, int& r, FinType& f, int& fr) { r = (N + 1) / 2; f = FinType::A; fr = N; return N >= 2 && (N % 2 == 0 || N >= 3); }},
      // D_{n+1}^(2), n >= 3 -> D_{n+1}
      {'D', 2, [](int N, int& r, FinType& f, int& fr) { r = N - 1; f = FinType::D; fr = N; return N >= 4; }},
      {'E', 1, [](int N, int& r, FinType& f, int& fr) { r = N; f = FinType::E; fr = N; return N >= 6 && N <= 8; }},
      {'F', 1, [](int N, int& r, FinType& f, int& fr) { r = 4; f = FinType::E; fr = 6; return N == 4; }},
      {'G', 1, [](int N, int& r, FinType& f, int& fr) { r = 2; f = FinType::D; fr = 4; return N == 2; }},
      {'E', 2, [](int N, int& r, FinType& f, int& fr) { r = 4; f = FinType::E; fr = 6; return N == 6; }},
      {'D', 3, [](int N, int& r, FinType& f, int& fr) { r = 2; f = FinType::D; fr = 4; return N == 4; }},
  };
  return table;
}

}  // namespace

bool AffineTypeInfo::simply_laced_untwisted() const {
  return twist == 1 && (letter == 'A' || letter == 'D' || letter == 'E');
}

int AffineTypeInfo::star_of(int i) const {
  if (i < 1 || i > rank) throw Error("node " + std::to_string(i) + " out of range for " + name);
  return star[static_cast<std::size_t>(i - 1)];
}

bool AffineTypeInfo::in_sigma0(SigmaPoint x) const {
  if (x.node < 1 || x.node > rank) return false;
  if (!parity) return false;
  return mod2(x.exp) == (*parity)[static_cast<std::size_t>(x.node - 1)];
}

void AffineTypeInfo::check_point(SigmaPoint x) const {
  if (!in_sigma0(x)) throw Error("label " + x.to_string() + " is not in sigma_0 of " + name);
}

int AffineTypeInfo::h() const {
  if (!dual_shift) throw UnsupportedError("dual shift of " + name + " is not modelled");
  return *dual_shift;
}

SigmaPoint AffineTypeInfo::dual_point(SigmaPoint x, int k) const {
  SigmaPoint out{x.node, x.exp + k * h()};
  if (k % 2 != 0) out.node = star_of(x.node);
  return out;
}

std::vector<SigmaPoint> AffineTypeInfo::sigma0_window(int lo, int hi) const {
  std::vector<SigmaPoint> out;
  for (int p = lo; p <= hi; ++p)
    for (int i = 1; i <= rank; ++i)
      if (in_sigma0({i, p})) out.push_back({i, p});
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<SigmaPoint, int> AffineTypeInfo::orbit_rep(SigmaPoint x) const {
  int m = floor_div(x.exp, h());
  return {dual_point(x, -m), m};
}

AffineTypeInfo type_info(std::string_view name) {
  auto bad = [&]() { return Error("unknown affine type '" + std::string(name) + "'"); };
  auto caret = name.find('^');
  if (name.size() < 4 || caret == std::string_view::npos || caret < 2) throw bad();
  char letter = name[0];
  int N = 0, twist = 0;
  auto r1 = std::from_chars(name.data() + 1, name.data() + caret, N);
  auto r2 = std::from_chars(name.data() + caret + 1, name.data() + name.size(), twist);
  if (r1.ec != std::errc() || r1.ptr != name.data() + caret || r2.ec != std::errc() ||
      r2.ptr != name.data() + name.size())
    throw bad();

  for (const auto& row : rows()) {
    if (row.letter != letter || row.twist != twist) continue;
    AffineTypeInfo info;
    if (!row.resolve(N, info.rank, info.fin_type, info.fin_rank)) throw bad();
    info.name = std::string(name);
    info.letter = letter;
    info.subscript = N;
    info.twist = twist;
    info.star.resize(static_cast<std::size_t>(info.rank));
    for (int i = 1; i <= info.rank; ++i) info.star[i - 1] = i;
    if (info.simply_laced_untwisted()) {
      // Untwisted ADE: I_0 = I_fin and p* = (-q)^h with h the Coxeter number.
      RootSystem rs(cartan(info.fin_type, info.fin_rank));
      info.dual_shift = 2 * rs.longest_length() / rs.rank();
      for (int i = 1; i <= info.rank; ++i) info.star[i - 1] = rs.star(i);
      info.parity = bipartite_parity(rs.cartan());
      info.builtin_denominators = letter == 'A';
    }
    return info;
  }
  throw bad();
}

std::vector<std::string> table_rows() {
  return {"A1^1", "B2^1", "C3^1", "D4^1", "A2^2", "A3^2", "D4^2",
          "E6^1", "E7^1", "E8^1", "F4^1", "G2^1", "E6^2", "D4^3"};
}

DenominatorTable::DenominatorTable(std::string type, int rank) : type_(std::move(type)), rank_(rank) {}

DenominatorTable DenominatorTable::builtin_a(int n) {
  DenominatorTable t("A" + std::to_string(n) + "^1", n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      std::vector<int> zs;
      int top = std::min({k, l, n + 1 - k, n + 1 - l});
      for (int s = 1; s <= top; ++s) zs.push_back(std::abs(k - l) + 2 * s);
      t.set_zeros(k, l, std::move(zs));
    }
  return t;
}

const std::vector<int>& DenominatorTable::zeros(int i, int j) const {
  static const std::vector<int> empty;
  auto it = zeros_.find({i, j});
  return it == zeros_.end() ? empty : it->second;
}

void DenominatorTable::set_zeros(int i, int j, std::vector<int> exps) {
  std::sort(exps.begin(), exps.end());
  for (int e : exps) max_abs_ = std::max(max_abs_, std::abs(e));
  zeros_[{i, j}] = std::move(exps);
}

int DenominatorTable::order_at(int i, int j, int m) const {
  const auto& zs = zeros(i, j);
  return static_cast<int>(std::count(zs.begin(), zs.end(), m));
}

DenominatorTable DenominatorTable::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("denominator provider: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j.contains("zeros"))
    throw Error("denominator provider: expected {\"type\":..., \"zeros\":{...}}");
  auto info = type_info(j["type"].get<std::string>());
  DenominatorTable t(info.name, info.rank);
  for (const auto& [key, value] : j["zeros"].items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw Error("denominator provider: bad key '" + key + "'");
    int a = std::stoi(key.substr(0, comma));
    int b = std::stoi(key.substr(comma + 1));
    if (a < 1 || b < 1 || a > info.rank || b > info.rank)
      throw Error("denominator provider: node out of range in '" + key + "'");
    t.set_zeros(a, b, value.get<std::vector<int>>());
  }
  return t;
}

std::string DenominatorTable::to_json_text() const {
  nlohmann::json z = nlohmann::json::object();
  for (const auto& [key, value] : zeros_)
    z[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
  return nlohmann::json{{"type", type_}, {"zeros", z}}.dump();
}

std::vector<int> denom_zeros(const AffineTypeInfo& type, int i, int j) {
  if (!type.builtin_denominators)
    throw NoProviderError("no built-in denominator provider for " + type.name);
  if (i < 1 || j < 1 || i > type.rank || j > type.rank) throw Error("node out of range");
  return DenominatorTable::builtin_a(type.rank).zeros(i, j);
}

HLCategory::HLCategory(AffineTypeInfo type) : type_(std::move(type)) {
  if (type_.builtin_denominators) table_ = DenominatorTable::builtin_a(type_.rank);
}

HLCategory::HLCategory(AffineTypeInfo type, DenominatorTable table) : type_(std::move(type)) {
  if (table.type() != type_.name)
    throw Error("denominator provider is for " + table.type() + ", not " + type_.name);
  table_ = std::move(table);
}

HLCategory HLCategory::with_builtin_facts(std::string_view name) {
  HLCategory cat = make(name);
  cat.fusion_ = FusionFacts::builtin(cat.type_);
  return cat;
}

HLCategory HLCategory::with_facts(FusionFacts facts) const {
  if (!facts.empty() && facts.type() != type_.name)
    throw Error("fusion facts are for " + facts.type() + ", not " + type_.name);
  HLCategory out = *this;
  out.fusion_.merge(facts);
  return out;
}

const DenominatorTable& HLCategory::denominators() const {
  if (!table_) throw NoProviderError("no denominator provider for " + type_.name);
  return *table_;
}

SigmaQuiver sigma_quiver(const HLCategory& cat, int lo, int hi) {
  const auto& table = cat.denominators();
  SigmaQuiver q;
  q.vertices = cat.type().sigma0_window(lo, hi);
  for (const auto& x : q.vertices)
    for (const auto& y : q.vertices) {
      int d = table.order_at(x.node, y.node, y.exp - x.exp);
      if (d > 0) q.arrows.push_back({x, y, d});
    }
  return q;
}

std::string SigmaQuiver::to_dot() const {
  auto id = [](const SigmaPoint& p) {
    return "\"" + std::to_string(p.node) + "_" + std::to_string(p.exp) + "\"";
  };
  std::ostringstream os;
  os << "digraph sigma {\n";
  for (const auto& v : vertices) os << "  " << id(v) << ";\n";
  for (const auto& a : arrows)
    for (int m = 0; m < a.multiplicity; ++m) os << "  " << id(a.from) << " -> " << id(a.to) << ";\n";
  os << "}\n";
  return os.str();
}

bool SigmaQuiver::connected() const {
  if (vertices.empty()) return true;
  std::map<SigmaPoint, std::vector<SigmaPoint>> adj;
  for (const auto& a : arrows) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  std::vector<SigmaPoint> queue{vertices.front()};
  std::map<SigmaPoint, bool> seen{{vertices.front(), true}};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& n : adj[queue[i]])
      if (!seen[n]) {
        seen[n] = true;
        queue.push_back(n);
      }
  return queue.size() == vertices.size();
}

}  // namespace qaff
