#include "qaffpbw/fusion.hpp"

#include "json.hpp"

#include "qaffpbw/error.hpp"

namespace qaff {

namespace {

// V(1) hd V(1)_{(-q)^2} = V(2)_{-q} in type A2^1.
constexpr const char* kBuiltinA2 =
    R"({"type":"A2^1","facts":[{"head":[[1,0],[1,2]],"eq":[2,1],"shift_equivariant":true}]})";

SigmaPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("fusion facts: expected a [node, exponent] pair");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

FusionFacts::FusionFacts(std::string type, std::vector<FusionFact> facts)
    : type_(std::move(type)), facts_(std::move(facts)) {}

FusionFacts FusionFacts::builtin(const AffineTypeInfo& type) {
  if (type.name == "A2^1") return from_json_text(kBuiltinA2);
  return FusionFacts(type.name, {});
}

FusionFacts FusionFacts::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("type") || !j.contains("facts"))
      throw Error("fusion facts: expected {\"type\":..., \"facts\":[...]}");
    std::vector<FusionFact> facts;
    for (const auto& f : j["facts"]) {
      const auto& head = f.at("head");
      if (!head.is_array() || head.size() != 2) throw Error("fusion facts: \"head\" must list two labels");
      FusionFact fact{point_from_json(head[0]), point_from_json(head[1]), point_from_json(f.at("eq")),
                      f.value("shift_equivariant", true)};
      facts.push_back(fact);
    }
    auto info = type_info(j["type"].get<std::string>());
    return FusionFacts(info.name, std::move(facts));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("fusion facts: ") + e.what());
  }
}

std::string FusionFacts::to_json_text() const {
  nlohmann::json facts = nlohmann::json::array();
  for (const auto& f : facts_)
    facts.push_back({{"head", {{f.left.node, f.left.exp}, {f.right.node, f.right.exp}}},
                     {"eq", {f.result.node, f.result.exp}},
                     {"shift_equivariant", f.shift_equivariant}});
  return nlohmann::json{{"type", type_}, {"facts", facts}}.dump();
}

void FusionFacts::merge(const FusionFacts& other) {
  if (other.facts_.empty()) return;
  if (type_.empty()) type_ = other.type_;
  if (other.type_ != type_) throw Error("cannot merge fusion facts of " + other.type_ + " into " + type_);
  facts_.insert(facts_.end(), other.facts_.begin(), other.facts_.end());
}

std::optional<SigmaPoint> FusionFacts::lookup(const AffineTypeInfo& type, SigmaPoint a, SigmaPoint b) const {
  for (const auto& f : facts_) {
    if (!f.shift_equivariant) {
      if (f.left == a && f.right == b) return f.result;
      continue;
    }
    // D acts on labels by starring nodes and translating exponents, so the
    // orbit of a fact is: nodes starred an even or odd number of times, plus a
    // common translation.
    for (int starred = 0; starred < 2; ++starred) {
      auto node = [&](int i) { return starred ? type.star_of(i) : i; };
      if (node(f.left.node) != a.node || node(f.right.node) != b.node) continue;
      if (b.exp - a.exp != f.right.exp - f.left.exp) continue;
      int shift = a.exp - f.left.exp;
      return SigmaPoint{node(f.result.node), f.result.exp + shift};
    }
  }
  return std::nullopt;
}

}  // namespace qaff
