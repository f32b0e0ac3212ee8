#pragma once

// JSON forms used by the CLI. Rationals are strings in canonical "p/q" form
// so that values survive a round trip bit-exactly.

#include <json.hpp>

#include "ncs/ncpoly.hpp"
#include "ncs/rational_series.hpp"

namespace ncs::json {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// [{"word": "x0x1", "coeff": "1/2"}, ...]
json to_json(const NCPoly& p);
NCPoly poly_from_json(const Alphabet& a, const json& j);

// [{"left": "x0", "right": "", "coeff": "1"}, ...]
json to_json(const TensorPoly& t);
TensorPoly tensor_from_json(const Alphabet& a, const json& j);

// {"alphabet": "x2", "rank": n, "nu": [...], "mu": {"x0": [[...]], ...}, "eta": [...]}
json to_json(const LinRep& r);
// `fallback` is used when the document carries no "alphabet" key.
LinRep rep_from_json(const json& j, const std::optional<Alphabet>& fallback = std::nullopt);

// {"1,1": "1", "1,2": "1/2"}
PhiTable gamma_from_json(const json& j);

json to_json(const TruncSeries& s);

// Parses text, raising ValidationError with the parser's message.
json parse(const std::string& text);

}  // namespace ncs::json
