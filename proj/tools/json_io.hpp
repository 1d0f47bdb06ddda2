#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "circuit/bounds.hpp"
#include "circuit/search.hpp"
#include "circuit/spread.hpp"

namespace circuit::cli {

using Json = nlohmann::ordered_json;

Json to_json(const TransitionSequence& seq);
Json to_json(const Witness& w);
Json to_json(const SpreadCheck& check);
Json to_json(const SpreadReport& report);
Json to_json(const search::SearchResult& res);
/// Exact integers are written as decimal strings.
Json to_json(const bounds::BoundRecord& rec);
Json to_json(const bounds::Decomposition& dec);
Json to_json(const bounds::SuperadditivityReport& rep);

/// Whitespace table files: "d k value" per line (base tables) or
/// "d value" per line (single-spread tables). '#' starts a comment line.
bounds::BaseTable read_base_table(const std::string& path);
std::map<int, bounds::BigInt> read_spread_table(const std::string& path);

} // namespace circuit::cli
