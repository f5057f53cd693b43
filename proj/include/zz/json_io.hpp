#pragma once

// JSON encodings of strips, posets, ZZ results and Kekule structures.
// Integers that fit in 64 bits are written as numbers, larger ones as
// decimal strings; readers accept both.

#include <nlohmann/json.hpp>
#include <optional>

#include "zz/kekule.hpp"
#include "zz/order_poly.hpp"
#include "zz/poset.hpp"
#include "zz/strip.hpp"

namespace zz {

using Json = nlohmann::json;

Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);  // throws ParseError

Json strip_to_json(const StripSpec& spec);
StripSpec strip_from_json(const Json& j);

Json poset_to_json(const DibPoset& poset);
DibPoset poset_from_json(const Json& j);

struct ZzResult {
  Polynomial zz;
  std::optional<ClosedForm> closed_form;

  friend bool operator==(const ZzResult&, const ZzResult&) = default;
};

Json zz_result_to_json(const ZzResult& r);
ZzResult zz_result_from_json(const Json& j);

// {"A":[{"k":..,"j":..}],"mu":[..],"pos":[[k,p],..],"aromatic":[..]}.
// "aromatic" lists DIBs and is only written for Clar covers.
Json kekule_to_json(const DibPoset& poset, const KekuleRecord& rec);
Json clar_to_json(const DibPoset& poset, const ClarCoverRecord& rec);

}  // namespace zz
