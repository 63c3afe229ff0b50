#pragma once

#include <json.hpp>

#include "g3ss/cm_family.hpp"
#include "g3ss/search.hpp"

namespace g3ss {

using json = nlohmann::json;

// Field elements serialize as their length-k coefficient vector over F_p,
// ascending; a curve carries (p, k, modulus, f) and round-trips bit-exactly.

json to_json(const FieldElement& x);
json to_json(const Curve& C);
Curve curve_from_json(const json& j);

json to_json(const Mat3& M);
json to_json(const CartierData& cd);
json to_json(const ZetaData& z);
json to_json(const TouchpointReport& tp);
json to_json(const Classification& cls);
json to_json(const CmReport& r);
json to_json(const Hit& h);
json to_json(const SearchSummary& s);
json to_json(const SearchResult& r);
json to_json(const TableRowReport& r);
json to_json(const TableReport& r);

}  // namespace g3ss
