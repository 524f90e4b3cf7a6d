#pragma once

// JSON records shared by the CLI subcommands. Rationals are always strings
// in the "p/q" token form so values survive the round trip exactly.

#include "hdq/construct.hpp"
#include "hdq/hadamardesque.hpp"
#include "hdq/search.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace hdq::records {

using nlohmann::json;

json to_json(const CRVector& v);
json to_json(const PairDotVector& a);
json to_json(const SpanReport& report);
json to_json(const ClassificationReport& report);
json to_json(const Solution& solution);
json to_json(const SearchReport& report);
/// {m, columns: [[q, j, multiplicity], ...]} plus flavor/denominator/crv.
json multiset_record(const Realization& r, Flavor flavor);

std::string_view flavor_name(Flavor flavor);

/// Either a JSON record {m, v} or a plain list of rational tokens.
CRVector parse_crv(std::string_view text);
/// Either a JSON record {m, a} or a plain list of rational tokens.
PairDotVector parse_pair_dots(std::string_view text);
HadamardesqueMatrix parse_multiset(std::string_view text);

}  // namespace hdq::records
