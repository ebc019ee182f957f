#pragma once

#include <nlohmann/json.hpp>

#include "swb/poly.hpp"
#include "swb/series.hpp"

namespace swb {

using Json = nlohmann::ordered_json;

/// {"vars": [...], "laurent": [...], "terms": [{"exp": [...], "num": "..", "den": ".."}, ...]}
/// with terms in the canonical monomial order.
Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, VarSetPtr vars = nullptr);

/// {"num": <poly>, "den": <poly>}
Json to_json(const RationalSeries& s);
RationalSeries series_from_json(const Json& j);

/// Canonical rendering "num/den".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Recursively sort object keys, so dumps are byte-stable.
Json canonical(const Json& j);
std::string dump_canonical(const Json& j, int indent = 2);

}  // namespace swb
