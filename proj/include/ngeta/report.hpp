#pragma once

#include <string>

#include "json.hpp"
#include "ngeta/eta.hpp"
#include "ngeta/graph.hpp"
#include "ngeta/laws.hpp"

namespace ngeta {

// Report schemas. Keys keep insertion order; every count is a decimal string.
using Json = nlohmann::ordered_json;

Json eta_json(const Graph& g, Count eta);
Json profile_json(const Graph& g, const EtaProfile& profile);
Json ng_json(const Graph& g, const NgReport& report);
Json graph_json(const Graph& g);
Json extremal_json(const ExtremalReport& report);
Json law_json(const LawReport& report);

std::string eta_tsv(const Graph& g, Count eta);
std::string profile_tsv(const Graph& g, const EtaProfile& profile);
std::string ng_tsv(const Graph& g, const NgReport& report);
std::string graph_tsv(const Graph& g);
std::string extremal_tsv(const ExtremalReport& report);
std::string law_tsv(const LawReport& report);

}  // namespace ngeta
