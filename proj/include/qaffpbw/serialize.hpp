#pragma once

// JSON forms of the library values.
//
//   SigmaPoint        [i, p]
//   ModuleExpr        {"one":true} | {"fund":[i,p]} | {"dual":k,"of":E} | {"head":[E,...]}
//   DualityDatum      {"affine":"A2^1","members":{"1":E,...},"provenance":"from-Q"}
//   QDatum            {"fin_type":"A","rank":2,"xi":{"1":0,"2":1}}
//   ExpVec            {"support":{"1":2,"4":1}}
//   DominantMultiset  [[i,p],...]

#include <optional>
#include <string>

#include "json.hpp"

#include "qaffpbw/cuspidal.hpp"
#include "qaffpbw/duality.hpp"
#include "qaffpbw/pbw.hpp"
#include "qaffpbw/qdata.hpp"
#include "qaffpbw/rootsys.hpp"

namespace qaff::json {

using nlohmann::json;

json to_json(SigmaPoint x);
SigmaPoint point_from_json(const json& j);

json to_json(const Root& r);
json to_json(const CartanMatrix& c);

json to_json(const ModuleExpr& e);
ModuleExpr expr_from_json(const json& j);

json to_json(const DualityDatum& d, const std::string& affine);
/// The affine type of the document must match `affine` when present.
DualityDatum datum_from_json(const json& j, const std::string& affine);

json to_json(const QDatum& q);
/// fin_type and rank default to the finite type of `fallback` when omitted.
QDatum qdatum_from_json(const json& j, const std::optional<AffineTypeInfo>& fallback);

json to_json(const ExpVec& a);
ExpVec expvec_from_json(const json& j);

json to_json(const DominantMultiset& m);
DominantMultiset multiset_from_json(const json& j);

json to_json(const StrongReport& r);
json to_json(const CuspReport& r);

/// Parses text as JSON, wrapping parse errors in qaff::Error.
json parse(const std::string& text, const std::string& what);

}  // namespace qaff::json
