#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "kmatch/coupling.hpp"
#include "kmatch/extremal.hpp"
#include "kmatch/hypergraph.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/shifting.hpp"

namespace kmatch {

using Json = nlohmann::ordered_json;

// Hypergraph files are one JSON object {"n": int, "r": int, "edges": [[...]]}
// with 1-based, strictly increasing vertex lists. Edges are written in colex
// order; readers accept any order but reject duplicates, non-uniform edges
// and labels outside [1, n].

Hypergraph hypergraph_from_json(const Json& doc);
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph(const std::filesystem::path& path);
Json to_json(const Hypergraph& h);

/// 1-based vertex list.
Json to_json(const VertexSet& s);
Json to_json(const std::vector<VertexSet>& sets);
/// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json to_json(const BigCount& value);

Json to_json(const KSetFamily& family);
Json to_json(const NuResult& result);
Json to_json(const StabilizeResult& result);
Json to_json(const CouplingContext& ctx);
Json to_json(const CouplingReport& report);
Json to_json(const DisjointifyResult& result);
Json to_json(const ExtremalResult& result);
Json to_json(const ConjectureReport& report);
Json to_json(const Theorem3Report& report);

/// Parses a block written as 1-based labels, "1,2,3".
VertexSet parse_block(const std::string& text);

}  // namespace kmatch
