#include "qaffpbw/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "qaffpbw/error.hpp"
#include "qaffpbw/serialize.hpp"

namespace qaff::cli {

namespace {

using qaff::json::json;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string type;
  std::string denoms;
  std::string fusion;
  bool no_builtin_fusion = false;
  std::string format = "json";

  std::string q;
  std::string datum;
  std::string word;
  std::string range;
  std::string kind;
  std::string x;
  std::string y;
  std::string basis;
  std::string multiset;
  std::string vector;
  std::string a;
  std::string b;
  std::string lhs;
  std::string rhs;
  int node = 0;
  bool inverse = false;
  bool verify = false;
};

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError(what + ": '" + std::string(s) + "' is not an integer");
  return v;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
  return out;
}

SigmaPoint parse_point(const std::string& s, const std::string& what) {
  auto v = parse_int_list(s, what);
  if (v.size() != 2) throw UsageError(what + ": expected 'node,exponent'");
  return {v[0], v[1]};
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("--range: expected 'lo..hi'");
  int lo = parse_int(std::string_view(s).substr(0, dots), "--range");
  int hi = parse_int(std::string_view(s).substr(dots + 2), "--range");
  if (lo > hi) throw UsageError("--range: empty range");
  return {lo, hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON or the path of a JSON file.
json load_json(const std::string& arg, const std::string& what) {
  auto first = arg.find_first_not_of(" \t\n");
  bool inline_doc = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  return qaff::json::parse(inline_doc ? arg : read_file(arg), what);
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {}

  const HLCategory& category() {
    if (!cat_) {
      if (o_.type.empty()) throw UsageError("--type is required");
      AffineTypeInfo info = type_info(o_.type);
      HLCategory cat = o_.denoms.empty() ? HLCategory(info)
                                         : HLCategory(info, DenominatorTable::from_json_text(read_file(o_.denoms)));
      if (!o_.no_builtin_fusion) cat = cat.with_facts(FusionFacts::builtin(info));
      if (!o_.fusion.empty()) cat = cat.with_facts(FusionFacts::from_json_text(read_file(o_.fusion)));
      cat_ = std::move(cat);
    }
    return *cat_;
  }

  QDatum qdatum() {
    if (o_.q.empty()) throw UsageError("--q is required");
    std::optional<AffineTypeInfo> info;
    if (!o_.type.empty()) info = category().type();
    QDatum q = qaff::json::qdatum_from_json(load_json(o_.q, "--q"), info);
    validate(q);
    return q;
  }

  // --datum, or the datum of --q.
  DualityDatum datum() {
    if (!o_.datum.empty()) return qaff::json::datum_from_json(load_json(o_.datum, "--datum"), category().type().name);
    if (!o_.q.empty()) return datum_from_q(category(), qdatum());
    throw UsageError("one of --datum or --q is required");
  }

  // --word, or an adapted word of --q.
  Word word(const DualityDatum& d) {
    if (!o_.word.empty()) return parse_int_list(o_.word, "--word");
    if (!o_.q.empty()) return adapted_word(qdatum());
    return RootSystem(cartan_of(category(), d)).longest_word();
  }

  CuspidalSeq sequence() {
    DualityDatum d = datum();
    Word w = word(d);
    // For a datum of --q and an adapted word, phi tells which heads are fundamental.
    if (o_.datum.empty() && !o_.no_builtin_fusion && is_adapted(qdatum(), w)) {
      HLCategory cat = with_adapted_facts(category(), qdatum(), w);
      return CuspidalSeq(std::move(cat), std::move(d), std::move(w));
    }
    return CuspidalSeq(category(), std::move(d), std::move(w));
  }

 private:
  const Options& o_;
  std::optional<HLCategory> cat_;
};

RootSystem finite_roots(Session& s, const Options& o) {
  if (!o.q.empty()) return RootSystem(s.qdatum().cartan());
  const auto& t = s.category().type();
  return RootSystem(CartanMatrix::standard(t.fin_type, t.fin_rank));
}

json cmd_roots(Session& s, const Options& o) {
  RootSystem rs = finite_roots(s, o);
  json out;
  out["cartan"] = qaff::json::to_json(rs.cartan());
  json pos = json::array();
  for (const auto& r : rs.positive_roots()) pos.push_back(qaff::json::to_json(r));
  out["positive_roots"] = pos;
  json star = json::object();
  for (int i = 1; i <= rs.rank(); ++i) star[std::to_string(i)] = rs.star(i);
  out["star"] = star;
  Word w = o.word.empty() ? rs.longest_word() : parse_int_list(o.word, "--word");
  for (int i : w) rs.check_node(i);
  out["word"] = w;
  out["reduced"] = rs.is_reduced(w);
  out["spells_w0"] = rs.spells_longest(w);
  if (rs.is_reduced(w)) {
    json betas = json::array();
    for (const auto& r : rs.beta_sequence(w)) betas.push_back(qaff::json::to_json(r));
    out["betas"] = betas;
  }
  if (rs.spells_longest(w)) {
    json pairs = json::object();
    for (int k = 1; k <= static_cast<int>(w.size()); ++k) {
      json list = json::array();
      for (auto [a, b] : rs.minimal_pairs(w, k)) list.push_back({a, b});
      pairs[std::to_string(k)] = list;
    }
    out["minimal_pairs"] = pairs;
  }
  return out;
}

json cmd_adapted(Session& s, const Options& o) {
  QDatum q = s.qdatum();
  json out;
  out["q"] = qaff::json::to_json(q);
  if (!o.word.empty()) {
    Word w = parse_int_list(o.word, "--word");
    out["word"] = w;
    out["adapted"] = is_adapted(q, w);
  } else {
    out["adapted_words"] = adapted_words(q);
  }
  return out;
}

json cmd_phi(Session& s, const Options& o) {
  QDatum q = s.qdatum();
  Word w = o.word.empty() ? adapted_word(q) : parse_int_list(o.word, "--word");
  json list = json::array();
  for (const auto& [root, x] : phi(s.category(), q, w))
    list.push_back({{"root", qaff::json::to_json(root)}, {"label", qaff::json::to_json(x)}});
  return {{"word", w}, {"phi", list}};
}

json cmd_datum(Session& s, const Options&) {
  DualityDatum d = s.datum();
  return qaff::json::to_json(d, s.category().type().name);
}

json cmd_reflect(Session& s, const Options& o) {
  DualityDatum d = s.datum();
  if (o.node == 0) throw UsageError("--node is required");
  DualityDatum r = o.inverse ? reflect_inv(s.category(), d, o.node) : reflect(s.category(), d, o.node);
  return qaff::json::to_json(r, s.category().type().name);
}

json cmd_cuspidal(Session& s, const Options& o) {
  CuspidalSeq seq = s.sequence();
  const int l = seq.length();
  auto [lo, hi] = o.range.empty() ? std::pair{1, l} : parse_range(o.range);
  json list = json::array();
  for (int k = lo; k <= hi; ++k) {
    ModuleExpr e = seq.at(k);
    list.push_back({{"k", k}, {"expr", qaff::json::to_json(e)}, {"label", e.to_string()}});
  }
  json out = {{"word", seq.word()}, {"sequence", list}};
  if (o.verify) {
    const bool adapted = !o.q.empty() && o.datum.empty() && is_adapted(s.qdatum(), seq.word());
    out["axioms"] = qaff::json::to_json(verify_cuspidal_axioms(seq, lo, hi, adapted));
  }
  return out;
}

json cmd_invariant(Session& s, const Options& o) {
  const HLCategory& cat = s.category();
  if (o.kind.empty() || o.x.empty()) throw UsageError("--kind and --x are required");
  SigmaPoint x = parse_point(o.x, "--x");
  cat.type().check_point(x);
  json out = {{"kind", o.kind}, {"x", qaff::json::to_json(x)}};
  if (o.kind == "root-coordinates") {
    if (o.basis.empty()) throw UsageError("--basis is required for root-coordinates");
    std::vector<SigmaPoint> basis;
    for (const auto& p : load_json(o.basis, "--basis")) basis.push_back(qaff::json::point_from_json(p));
    out["basis"] = load_json(o.basis, "--basis");
    out["value"] = qaff::json::to_json(root_coordinates(cat, x, basis));
    return out;
  }
  if (o.y.empty()) throw UsageError("--y is required");
  SigmaPoint y = parse_point(o.y, "--y");
  cat.type().check_point(y);
  out["y"] = qaff::json::to_json(y);
  int value = 0;
  if (o.kind == "d")
    value = d_fund(cat, x, y);
  else if (o.kind == "lambda")
    value = lambda_fund(cat, x, y);
  else if (o.kind == "lambda-inf")
    value = lambda_inf_fund(cat, x, y);
  else if (o.kind == "de-tilde")
    value = de_tilde_fund(cat, x, y);
  else if (o.kind == "zero-c")
    value = zero_c_fund(cat, x, y);
  else if (o.kind == "pairing")
    value = pairing_E(cat, x, y);
  else
    throw UsageError("--kind: unknown invariant '" + o.kind + "'");
  out["value"] = value;
  return out;
}

json cmd_decompose(Session& s, const Options& o) {
  CuspidalSeq seq = s.sequence();
  json out = {{"word", seq.word()}};
  if (!o.multiset.empty()) {
    DominantMultiset m = qaff::json::multiset_from_json(load_json(o.multiset, "--multiset"));
    for (const auto& x : m.points()) s.category().type().check_point(x);
    ExpVec a = decompose(m, seq);
    PeelReport peel = peel_top_check(m, seq);
    out["multiset"] = qaff::json::to_json(m);
    out["vector"] = qaff::json::to_json(a);
    out["peel_top"] = {{"pass", peel.pass},
                       {"vacuous", peel.vacuous},
                       {"top", peel.top},
                       {"expected", peel.expected},
                       {"observed", peel.observed}};
  } else if (!o.vector.empty()) {
    ExpVec a = qaff::json::expvec_from_json(load_json(o.vector, "--vector"));
    out["vector"] = qaff::json::to_json(a);
    out["multiset"] = qaff::json::to_json(compose(a, seq));
    json word = json::array();
    for (const auto& e : standard_word(a, seq)) word.push_back(qaff::json::to_json(e));
    out["standard_word"] = word;
  } else {
    throw UsageError("one of --multiset or --vector is required");
  }
  return out;
}

json cmd_compare(Session& s, const Options& o) {
  if (!o.a.empty() || !o.b.empty()) {
    if (o.a.empty() || o.b.empty()) throw UsageError("--a and --b go together");
    ExpVec a = qaff::json::expvec_from_json(load_json(o.a, "--a"));
    ExpVec b = qaff::json::expvec_from_json(load_json(o.b, "--b"));
    return {{"a", qaff::json::to_json(a)},
            {"b", qaff::json::to_json(b)},
            {"bilex", to_string(cmp_bilex(a, b))},
            {"left", to_string(cmp_left(a, b))},
            {"right", to_string(cmp_right(a, b))}};
  }
  if (o.lhs.empty() || o.rhs.empty()) throw UsageError("compare needs --a/--b or --lhs/--rhs");
  const HLCategory& cat = s.category();
  ModuleExpr l = qaff::json::expr_from_json(load_json(o.lhs, "--lhs"));
  ModuleExpr r = qaff::json::expr_from_json(load_json(o.rhs, "--rhs"));
  return {{"lhs", qaff::json::to_json(normalize(cat, l))},
          {"rhs", qaff::json::to_json(normalize(cat, r))},
          {"verdict", to_string(equal(cat, l, r))}};
}

json cmd_check_strong(Session& s, const Options&) {
  DualityDatum d = s.datum();
  json out = qaff::json::to_json(check_strong(s.category(), d));
  out["datum"] = qaff::json::to_json(d, s.category().type().name);
  return out;
}

std::string text_of(const std::string& command, const json& doc) {
  if (command == "invariant") return doc.at("value").dump() + "\n";
  if (command == "compare") return (doc.contains("verdict") ? doc.at("verdict") : doc.at("bilex")).get<std::string>() + "\n";
  if (command == "check-strong") return doc.at("status").get<std::string>() + "\n";
  if (command == "cuspidal") {
    std::string s;
    for (const auto& item : doc.at("sequence"))
      s += "S_" + item.at("k").dump() + " = " + item.at("label").get<std::string>() + "\n";
    return s;
  }
  return doc.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Label-level PBW combinatorics for Hernandez-Leclerc categories", "qaffpbw"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "affine type, e.g. A2^1");
    sub->add_option("--denoms", o.denoms, "denominator provider (JSON file)");
    sub->add_option("--fusion", o.fusion, "extra fusion facts (JSON file)");
    sub->add_flag("--no-builtin-fusion", o.no_builtin_fusion, "do not load shipped fusion facts or facts read off phi");
    sub->add_option("--format", o.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  };
  auto with_q = [&](CLI::App* sub) { sub->add_option("--q", o.q, "Q-datum (inline JSON or file)"); };
  auto with_datum = [&](CLI::App* sub) {
    with_q(sub);
    sub->add_option("--datum", o.datum, "duality datum (inline JSON or file)");
  };
  auto with_word = [&](CLI::App* sub) { sub->add_option("--word", o.word, "reduced word, e.g. 1,2,1"); };

  std::map<std::string, std::function<json(Session&, const Options&)>> commands;
  auto sub = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    commands[name] = handler;
    return s;
  };

  {
    auto* s = sub("roots", "finite root system, beta sequence and minimal pairs", cmd_roots);
    with_q(s);
    with_word(s);
  }
  {
    auto* s = sub("adapted", "adapted reduced words of a Q-datum", cmd_adapted);
    with_q(s);
    with_word(s);
  }
  {
    auto* s = sub("phi", "the bijection from positive roots to labels", cmd_phi);
    with_q(s);
    with_word(s);
  }
  with_q(sub("datum-from-q", "duality datum of a Q-datum", cmd_datum));
  {
    auto* s = sub("reflect", "reflect a duality datum", cmd_reflect);
    with_datum(s);
    s->add_option("--node", o.node, "reflection node");
    s->add_flag("--inverse", o.inverse, "apply the inverse reflection");
  }
  {
    auto* s = sub("cuspidal", "affine cuspidal sequence", cmd_cuspidal);
    with_datum(s);
    with_word(s);
    s->add_option("--range", o.range, "index window lo..hi");
    s->add_flag("--verify", o.verify, "also check the cuspidal axioms on the window");
  }
  {
    auto* s = sub("invariant", "invariants between fundamental labels", cmd_invariant);
    s->add_option("--kind", o.kind, "d, lambda, lambda-inf, de-tilde, zero-c, pairing or root-coordinates");
    s->add_option("--x", o.x, "label node,exponent");
    s->add_option("--y", o.y, "label node,exponent");
    s->add_option("--basis", o.basis, "labels for root-coordinates, e.g. [[1,0],[1,2]]");
  }
  {
    auto* s = sub("decompose", "cuspidal decomposition of a dominant multiset, or its inverse", cmd_decompose);
    with_datum(s);
    with_word(s);
    s->add_option("--multiset", o.multiset, "labels, e.g. [[1,0],[2,3]]");
    s->add_option("--vector", o.vector, "exponent vector, e.g. {\"support\":{\"1\":2}}");
  }
  {
    auto* s = sub("compare", "bi-lexicographic comparison, or equality of module expressions", cmd_compare);
    s->add_option("--a", o.a, "exponent vector");
    s->add_option("--b", o.b, "exponent vector");
    s->add_option("--lhs", o.lhs, "module expression");
    s->add_option("--rhs", o.rhs, "module expression");
  }
  {
    auto* s = sub("sigma-quiver", "quiver on sigma_0 over an exponent window", nullptr);
    s->add_option("--range", o.range, "exponent window lo..hi")->required();
  }
  with_datum(sub("check-strong", "strong duality datum axioms", cmd_check_strong));
  app.add_subcommand("verify-examples", "reproduce the worked examples of type A2^1");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    if (name == "verify-examples") return verify_examples(out) ? 0 : 1;
    if (o.format == "dot" && name != "sigma-quiver") throw UsageError("--format dot is only for sigma-quiver");
    Session session(o);
    if (name == "sigma-quiver") {
      auto [lo, hi] = parse_range(o.range);
      SigmaQuiver q = sigma_quiver(session.category(), lo, hi);
      if (o.format == "dot") {
        out << q.to_dot();
        return 0;
      }
      json vertices = json::array(), arrows = json::array();
      for (const auto& v : q.vertices) vertices.push_back(qaff::json::to_json(v));
      for (const auto& a : q.arrows)
        arrows.push_back({{"from", qaff::json::to_json(a.from)}, {"to", qaff::json::to_json(a.to)}, {"multiplicity", a.multiplicity}});
      json doc = {{"vertices", vertices}, {"arrows", arrows}, {"connected", q.connected()}};
      out << (o.format == "text" ? text_of(name, doc) : doc.dump(2) + "\n");
      return 0;
    }
    json doc = commands.at(name)(session, o);
    out << (o.format == "text" ? text_of(name, doc) : doc.dump(2) + "\n");
    return 0;
  } catch (const UsageError& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace qaff::cli
