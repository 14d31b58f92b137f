#include "kmatch/io.hpp"

#include <fstream>
#include <sstream>

#include "kmatch/errors.hpp"

namespace kmatch {

Hypergraph hypergraph_from_json(const Json& doc) {
  if (!doc.is_object()) throw FormatError("hypergraph file must hold a JSON object");
  for (const char* key : {"n", "r", "edges"}) {
    if (!doc.contains(key)) throw FormatError(std::string("hypergraph file lacks \"") + key + "\"");
  }
  if (!doc["n"].is_number_integer() || !doc["r"].is_number_integer()) {
    throw FormatError("\"n\" and \"r\" must be integers");
  }
  const auto n = doc["n"].get<std::int64_t>();
  const auto r = doc["r"].get<std::int64_t>();
  if (n < 0 || n > VertexSet::kCapacity) throw FormatError("\"n\" must lie in [0, 128]");
  if (r < 0 || r > n) throw FormatError("\"r\" must lie in [0, n]");
  if (!doc["edges"].is_array()) throw FormatError("\"edges\" must be an array");

  std::vector<VertexSet> edges;
  for (const Json& edge : doc["edges"]) {
    if (!edge.is_array()) throw FormatError("each edge must be an array of vertex labels");
    if (static_cast<std::int64_t>(edge.size()) != r) throw FormatError("edge is not r-uniform");
    VertexSet set;
    std::int64_t previous = 0;
    for (const Json& label : edge) {
      if (!label.is_number_integer()) throw FormatError("vertex labels must be integers");
      const auto v = label.get<std::int64_t>();
      if (v < 1 || v > n) throw FormatError("vertex label " + std::to_string(v) + " outside [1, n]");
      if (v <= previous) throw FormatError("edge vertex lists must be strictly increasing");
      previous = v;
      set.insert(static_cast<int>(v - 1));
    }
    edges.push_back(set);
  }
  try {
    return Hypergraph::from_edges_strict(static_cast<int>(n), static_cast<int>(r), std::move(edges));
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
}

Hypergraph parse_hypergraph(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return hypergraph_from_json(doc);
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str());
}

Json to_json(const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](int v) { out.push_back(v + 1); });
  return out;
}

Json to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const VertexSet& s : sets) out.push_back(to_json(s));
  return out;
}

Json to_json(const Hypergraph& h) {
  Json out;
  out["n"] = h.vertex_count();
  out["r"] = h.uniformity();
  out["edges"] = to_json(std::vector<VertexSet>(h.edges().begin(), h.edges().end()));
  return out;
}

Json to_json(const BigCount& value) {
  if (auto small = to_u64(value)) return *small;
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) {
    return value.convert_to<std::int64_t>();
  }
  return to_string(value);
}

Json to_json(const KSetFamily& family) {
  Json out;
  out["n"] = family.vertex_count();
  out["block_size"] = family.block_size();
  out["blocks"] = to_json(family.sets());
  return out;
}

Json to_json(const NuResult& result) {
  Json out;
  out["k"] = result.witness.k;
  out["nu"] = result.nu;
  out["witness"] = to_json(result.witness.edges);
  return out;
}

Json to_json(const StabilizeResult& result) {
  Json out;
  out["effective_shifts"] = result.effective_shifts;
  out["hypergraph"] = to_json(result.hypergraph);
  return out;
}

Json to_json(const CouplingContext& ctx) {
  Json out;
  out["modified_block"] = ctx.modified + 1;
  out["partner_block"] = ctx.partner + 1;
  out["S"] = to_json(ctx.overlap);
  out["R"] = to_json(ctx.replacement);
  Json phi = Json::array();
  for (const auto& [s, r] : ctx.phi) phi.push_back(Json::array({s + 1, r + 1}));
  out["phi"] = std::move(phi);
  out["family"] = to_json(ctx.family.sets());
  out["star_family"] = to_json(ctx.star_family.sets());
  return out;
}

Json to_json(const CouplingReport& report) {
  Json out;
  out["countA1"] = to_json(report.count_a1);
  out["countA2"] = to_json(report.count_a2);
  out["countBoth"] = to_json(report.count_both);
  out["injective"] = report.injective;
  out["images_in_A2"] = report.images_in_a2;
  out["sizeT"] = to_json(report.size_family);
  out["sizeTstar"] = to_json(report.size_star);
  out["already_disjoint"] = report.already_disjoint;
  out["consistent"] = report.consistent();
  return out;
}

Json to_json(const DisjointifyResult& result) {
  Json out;
  out["family"] = to_json(result.family);
  Json trace = Json::array();
  for (const BigCount& c : result.trace) trace.push_back(to_json(c));
  out["trace"] = std::move(trace);
  out["monotone"] = result.monotone();
  Json steps = Json::array();
  for (const CouplingContext& ctx : result.steps) steps.push_back(to_json(ctx));
  out["steps"] = std::move(steps);
  return out;
}

Json to_json(const ExtremalResult& result) {
  Json out;
  out["value"] = result.value;
  out["witness"] = to_json(result.witness);
  return out;
}

Json to_json(const ConjectureReport& report) {
  Json out;
  out["n"] = report.params.n;
  out["r"] = report.params.r;
  out["k"] = report.params.k;
  out["a"] = report.params.a;
  out["n0"] = report.params.n0();
  out["hypotheses_hold"] = report.hypotheses_hold;
  Json candidates = Json::array();
  for (const CandidateValue& c : report.candidates) {
    Json row;
    row["name"] = c.name;
    row["applicable"] = c.applicable;
    row["size"] = to_json(c.size);
    row["nu"] = c.nu ? Json(*c.nu) : Json(nullptr);
    row["feasible"] = c.feasible ? Json(*c.feasible) : Json(nullptr);
    candidates.push_back(std::move(row));
  }
  out["candidates"] = std::move(candidates);
  out["paper_max"] = to_json(report.paper_max);
  out["feasible_max"] = to_json(report.feasible_max);
  out["exact_value"] = report.exact_value ? to_json(*report.exact_value) : Json(nullptr);
  out["search"] = report.stable_only ? "stable" : "all";
  out["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  if (!report.exact_note.empty()) out["exact_note"] = report.exact_note;
  out["agreement_paper"] = to_string(report.agreement_paper);
  out["agreement_feasible"] = to_string(report.agreement_feasible);
  return out;
}

namespace {

Json to_json(const InequalityCheck& c) {
  Json out;
  out["holds"] = c.holds;
  out["lhs"] = kmatch::to_json(c.lhs);
  out["rhs"] = kmatch::to_json(c.rhs);
  out["margin"] = kmatch::to_json(c.margin());
  return out;
}

}  // namespace

Json to_json(const Theorem3Report& report) {
  Json out;
  out["r"] = report.r;
  out["k"] = report.k;
  out["a"] = report.a;
  out["n"] = report.n;
  out["threshold"] = kmatch::to_json(report.threshold);
  out["disjoint_lower_bound"] = to_json(report.disjoint_lower_bound);
  out["binomial_ratio"] = to_json(report.binomial_ratio);
  out["degree_exceeds_blocked"] = to_json(report.degree_exceeds_blocked);
  Json sweep;
  sweep["from"] = report.sweep_from;
  sweep["to"] = report.sweep_to;
  sweep["holds"] = report.sweep_holds;
  sweep["first_failure"] = report.sweep_first_failure ? Json(*report.sweep_first_failure) : Json(nullptr);
  out["binomial_ratio_sweep"] = std::move(sweep);
  out["all_hold"] = report.all_hold();
  return out;
}

VertexSet parse_block(const std::string& text) {
  VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int label = 0;
    try {
      label = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParameterError("block label \"" + item + "\" is not an integer");
    }
    if (used != item.size()) throw ParameterError("block label \"" + item + "\" is not an integer");
    if (label < 1 || label > VertexSet::kCapacity) throw ParameterError("block label outside [1, 128]");
    if (out.contains(label - 1)) throw ParameterError("block repeats a vertex");
    out.insert(label - 1);
  }
  return out;
}

}  // namespace kmatch
