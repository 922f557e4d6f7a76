#include "qaffpbw/serialize.hpp"

#include "qaffpbw/error.hpp"

namespace qaff::json {

namespace {

int to_int_key(const std::string& key, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw Error(what + ": key '" + key + "' is not an integer");
  }
}

template <class F>
auto guarded(const std::string& what, F f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(what + ": " + e.what());
  }
}

}  // namespace

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(what + ": " + e.what());
  }
}

json to_json(SigmaPoint x) { return json::array({x.node, x.exp}); }

SigmaPoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error("expected a label [node, exponent], got " + j.dump());
  return {j[0].get<int>(), j[1].get<int>()};
}

json to_json(const Root& r) { return r.coeffs; }

json to_json(const CartanMatrix& c) { return c.rows(); }

json to_json(const ModuleExpr& e) {
  switch (e.kind()) {
    case ModuleExpr::Kind::One: return {{"one", true}};
    case ModuleExpr::Kind::Fund: return {{"fund", to_json(e.point())}};
    case ModuleExpr::Kind::Dual: return {{"dual", e.shift()}, {"of", to_json(e.inner())}};
    case ModuleExpr::Kind::Head: {
      json list = json::array();
      for (const auto& f : e.factors()) list.push_back(to_json(f));
      return {{"head", list}};
    }
  }
  return nullptr;
}

ModuleExpr expr_from_json(const json& j) {
  return guarded("module expression", [&] {
    if (j.is_array()) return ModuleExpr::fund(point_from_json(j));
    if (!j.is_object()) throw Error("module expression: expected an object, got " + j.dump());
    if (j.contains("one")) return ModuleExpr::one();
    if (j.contains("fund")) return ModuleExpr::fund(point_from_json(j.at("fund")));
    if (j.contains("dual")) return ModuleExpr::dual_node(j.at("dual").get<int>(), expr_from_json(j.at("of")));
    if (j.contains("head")) {
      std::vector<ModuleExpr> factors;
      for (const auto& f : j.at("head")) factors.push_back(expr_from_json(f));
      return ModuleExpr::head_node(std::move(factors));
    }
    throw Error("module expression: unrecognised form " + j.dump());
  });
}

json to_json(const DualityDatum& d, const std::string& affine) {
  json members = json::object();
  for (int i = 1; i <= d.size(); ++i) members[std::to_string(i)] = to_json(d.member(i));
  json out = {{"affine", affine},
              {"members", members},
              {"provenance", to_string(d.origin())},
              {"completeness", to_string(d.completeness())},
              {"strength", to_string(d.strength())}};
  if (!d.chain().empty()) out["chain"] = d.chain();
  if (d.cartan()) out["cartan"] = to_json(*d.cartan());
  return out;
}

DualityDatum datum_from_json(const json& j, const std::string& affine) {
  return guarded("duality datum", [&] {
    if (!j.is_object() || !j.contains("members")) throw Error("duality datum: expected {\"members\":{...}}");
    if (j.contains("affine") && type_info(j.at("affine").get<std::string>()).name != affine)
      throw Error("duality datum is for " + j.at("affine").get<std::string>() + ", not " + affine);
    std::map<int, ModuleExpr> by_index;
    for (const auto& [key, value] : j.at("members").items())
      by_index[to_int_key(key, "duality datum")] = expr_from_json(value);
    std::vector<ModuleExpr> members;
    int expect = 1;
    for (auto& [i, e] : by_index) {
      if (i != expect) throw Error("duality datum: members must be numbered 1..n");
      members.push_back(e);
      ++expect;
    }
    // Only the flags the caller can vouch for are accepted; the rest are recomputed.
    DualityDatum d(std::move(members));
    if (j.contains("cartan")) {
      auto rows = j.at("cartan").get<std::vector<std::vector<int>>>();
      CartanMatrix c(static_cast<int>(rows.size()));
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t s = 0; s < rows[r].size(); ++s)
          c.set(static_cast<int>(r + 1), static_cast<int>(s + 1), rows[r][s]);
      d.set_cartan(c);
    }
    return d;
  });
}

json to_json(const QDatum& q) {
  json xi = json::object();
  for (int i = 1; i <= q.rank; ++i) xi[std::to_string(i)] = q.height(i);
  return {{"fin_type", std::string(1, to_char(q.fin_type))}, {"rank", q.rank}, {"xi", xi}};
}

QDatum qdatum_from_json(const json& j, const std::optional<AffineTypeInfo>& fallback) {
  return guarded("Q-datum", [&] {
    if (!j.is_object() || !j.contains("xi")) throw Error("Q-datum: expected {\"xi\":{...}}");
    QDatum q;
    if (j.contains("fin_type")) {
      auto s = j.at("fin_type").get<std::string>();
      if (s.size() != 1) throw Error("Q-datum: fin_type must be one of A, D, E");
      q.fin_type = fin_type_from_char(s[0]);
    } else if (fallback) {
      q.fin_type = fallback->fin_type;
    } else {
      throw Error("Q-datum: fin_type missing");
    }
    if (j.contains("rank"))
      q.rank = j.at("rank").get<int>();
    else if (fallback)
      q.rank = fallback->fin_rank;
    else
      throw Error("Q-datum: rank missing");
    q.xi.assign(static_cast<std::size_t>(q.rank), 0);
    std::vector<bool> seen(static_cast<std::size_t>(q.rank), false);
    for (const auto& [key, value] : j.at("xi").items()) {
      int i = to_int_key(key, "Q-datum");
      if (i < 1 || i > q.rank) throw Error("Q-datum: node " + key + " out of range");
      q.xi[static_cast<std::size_t>(i - 1)] = value.get<int>();
      seen[static_cast<std::size_t>(i - 1)] = true;
    }
    for (int i = 1; i <= q.rank; ++i)
      if (!seen[static_cast<std::size_t>(i - 1)]) throw Error("Q-datum: no height for node " + std::to_string(i));
    if (j.contains("automorphism")) q.automorphism = j.at("automorphism").get<std::vector<int>>();
    return q;
  });
}

json to_json(const ExpVec& a) {
  json support = json::object();
  for (const auto& [k, v] : a.entries()) support[std::to_string(k)] = v;
  return {{"support", support}};
}

ExpVec expvec_from_json(const json& j) {
  return guarded("exponent vector", [&] {
    if (!j.is_object() || !j.contains("support")) throw Error("exponent vector: expected {\"support\":{...}}");
    ExpVec a;
    for (const auto& [key, value] : j.at("support").items()) {
      int v = value.get<int>();
      if (v < 0) throw Error("exponent vector: negative entry at " + key);
      a.add(to_int_key(key, "exponent vector"), v);
    }
    return a;
  });
}

json to_json(const DominantMultiset& m) {
  json out = json::array();
  for (const auto& x : m.points()) out.push_back(to_json(x));
  return out;
}

DominantMultiset multiset_from_json(const json& j) {
  if (!j.is_array()) throw Error("multiset: expected a list of labels");
  std::vector<SigmaPoint> points;
  for (const auto& x : j) points.push_back(point_from_json(x));
  return DominantMultiset(std::move(points));
}

json to_json(const StrongReport& r) {
  json problems = json::array();
  for (const auto& p : r.problems) {
    json item = {{"i", p.i}, {"j", p.j}, {"k", p.k}, {"expected", p.expected}, {"status", to_string(p.status)}};
    item["observed"] = p.observed ? json(*p.observed) : json(nullptr);
    problems.push_back(item);
  }
  json out = {{"status", to_string(r.overall)}, {"pass", r.pass()}, {"checked", r.checked}, {"problems", problems}};
  if (r.cartan) {
    out["cartan"] = to_json(*r.cartan);
    if (auto name = classify(*r.cartan)) out["cartan_type"] = *name;
  }
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json to_json(const CuspReport& r) {
  json problems = json::array();
  for (const auto& p : r.problems)
    problems.push_back({{"kind", p.kind}, {"a", p.a}, {"b", p.b}, {"m", p.m}, {"status", p.status}});
  return {{"status", to_string(r.overall)}, {"pass", r.pass()}, {"checked", r.checked}, {"problems", problems}};
}

}  // namespace qaff::json
