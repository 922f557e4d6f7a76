#include <functional>

#include "qaffpbw/cli.hpp"
#include "qaffpbw/serialize.hpp"

namespace qaff::cli {

namespace {

ModuleExpr f(int i, int p) { return ModuleExpr::fund(i, p); }

bool same_members(const DualityDatum& d, const std::vector<ModuleExpr>& expected) {
  return d.members() == expected;
}

}  // namespace

bool verify_examples(std::ostream& out) {
  const HLCategory cat = HLCategory::with_builtin_facts("A2^1");
  const QDatum q{FinType::A, 2, {0, 1}, {}};
  const DualityDatum d = datum_from_q(cat, q);
  const Word w121{1, 2, 1}, w212{2, 1, 2};

  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"datum-from-q", [&] { return same_members(d, {f(1, 0), f(1, 2)}); }},
      {"strong-datum-A2",
       [&] {
         auto r = check_strong(cat, d);
         return r.pass() && r.cartan == cartan(FinType::A, 2);
       }},
      {"adapted-words", [&] { return is_adapted(q, w121) && !is_adapted(q, w212); }},
      {"phi",
       [&] {
         auto m = phi(cat, q, w121);
         return m.size() == 3 && m[0].second == SigmaPoint{1, 0} && m[1].second == SigmaPoint{2, 1} &&
                m[2].second == SigmaPoint{1, 2};
       }},
      {"cuspidal-121",
       [&] {
         CuspidalSeq seq(cat, d, w121);
         std::vector<ModuleExpr> want{f(1, 0), f(2, 1), f(1, 2), f(2, 3), f(1, 4), f(2, 5)};
         for (int k = 1; k <= 6; ++k)
           if (seq.at(k) != want[static_cast<std::size_t>(k - 1)]) return false;
         return true;
       }},
      {"cuspidal-212",
       [&] {
         CuspidalSeq seq(cat, d, w212);
         return seq.at(1) == f(1, 2) && seq.at(2) == ModuleExpr::head_node({f(1, 2), f(1, 0)}) && seq.at(3) == f(1, 0);
       }},
      {"reflect-1", [&] { return same_members(reflect(cat, d, 1), {f(2, 3), f(2, 1)}); }},
      {"reflect-2",
       [&] { return same_members(reflect(cat, d, 2), {ModuleExpr::head_node({f(1, 2), f(1, 0)}), f(2, 5)}); }},
      {"reflect-1-is-from-q",
       [&] { return same_members(datum_from_q(cat, QDatum{FinType::A, 2, {2, 1}, {}}), reflect(cat, d, 1).members()); }},
      {"mndm-rewrite",
       [&] {
         auto e = ModuleExpr::head_node({ModuleExpr::head_node({f(1, 2), f(1, 0)}), f(2, 5)});
         return normalize(cat, e) == f(1, 0);
       }},
      {"refl-shift-1", [&] { return refl_shift_check(cat, d, w121).pass; }},
      {"refl-shift-2", [&] { return refl_shift_check(cat, d, w212).pass; }},
      {"inverse-reflection",
       [&] { return equal(cat, reflect_inv(cat, reflect(cat, d, 1), 1), d) == Verdict::Equal; }},
  };

  json::json report = json::json::array();
  bool all = true;
  for (const auto& [name, check] : checks) {
    bool ok = false;
    std::string error;
    try {
      ok = check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    all = all && ok;
    json::json item = {{"name", name}, {"pass", ok}};
    if (!error.empty()) item["error"] = error;
    report.push_back(item);
  }
  out << json::json{{"checks", report}, {"pass", all}}.dump(2) << "\n";
  return all;
}

}  // namespace qaff::cli
