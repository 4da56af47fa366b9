#include "raag/serialize.hpp"

#include <algorithm>

namespace raag {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("JSON: missing field '") + key + "'");
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) {
    throw InvalidArgument(std::string("JSON: field '") + key +
                          "' is not a string");
  }
  return v.get<std::string>();
}

Json labels(const Graph& g, const VertexMap& m) {
  Json out = Json::array();
  for (auto v : m) {
    out.push_back(g.label(v));
  }
  return out;
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back({g.label(u), g.label(v)});
  }
  return {{"vertices", g.labels()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    Graph g(field(j, "vertices").get<std::vector<std::string>>());
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidArgument("JSON: an edge must be a pair");
      }
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("JSON graph: ") + ex.what());
  }
}

Json to_json(const EmbeddingCertificate& cert) {
  Json assignment = Json::array();
  for (std::size_t i = 0; i < cert.assignment.size(); ++i) {
    const auto& u = cert.assignment[i];
    assignment.push_back({{"lambda_vertex", cert.source.label(i)},
                          {"base", cert.target->label(u.base)},
                          {"rep_word", to_string(u.rep)}});
  }
  return {{"source", to_json(cert.source)},
          {"target", to_json(*cert.target)},
          {"assignment", assignment},
          {"note", cert.note}};
}

EmbeddingCertificate certificate_from_json(const Json& j) {
  EmbeddingCertificate cert{graph_from_json(field(j, "source")),
                            share(graph_from_json(field(j, "target"))),
                            {},
                            j.value("note", std::string{})};
  std::vector<std::optional<ExtVertex>> slots(cert.source.order());
  for (const auto& a : field(j, "assignment")) {
    const std::size_t v = cert.source.index(string_field(a, "lambda_vertex"));
    if (slots[v]) {
      throw InvalidArgument("JSON: vertex assigned twice");
    }
    slots[v] = ext_vertex(cert.target, string_field(a, "base"),
                          parse_element(cert.target, string_field(a, "rep_word")));
  }
  for (auto& s : slots) {
    if (!s) {
      throw InvalidArgument("JSON: assignment does not cover the source");
    }
    cert.assignment.push_back(*s);
  }
  return cert;
}

Json to_json(const ExtGraphApprox& approx) {
  Json provenance;
  if (const auto* r = std::get_if<RadiusProvenance>(&approx.provenance())) {
    provenance = {{"strategy", "radius"}, {"radius", r->radius}};
  } else {
    const auto& d = std::get<DoublingProvenance>(approx.provenance());
    provenance = {{"strategy", "doubling"}, {"chosen", d.chosen}};
  }
  Json vertices = Json::array();
  for (const auto& u : approx.vertices()) {
    vertices.push_back({{"base", approx.base()->label(u.base)},
                        {"rep", to_string(u.rep)}});
  }
  Json edges = Json::array();
  for (const auto& [u, v] : approx.graph().edges()) {
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return {{"base_graph", to_json(*approx.base())},
          {"provenance", provenance},
          {"vertices", vertices},
          {"edges", edges}};
}

ExtGraphApprox approximation_from_json(const Json& j) {
  const GraphPtr base = share(graph_from_json(field(j, "base_graph")));
  ExtGraphApprox approx(base);
  for (const auto& v : field(j, "vertices")) {
    const ExtVertex u = ext_vertex(base, string_field(v, "base"),
                                   parse_element(base, string_field(v, "rep")));
    if (approx.find(u)) {
      throw InvalidArgument("JSON: duplicate approximation vertex");
    }
    approx.add(u);
  }
  if (j.contains("provenance")) {
    const Json& p = j.at("provenance");
    if (p.value("strategy", std::string{}) == "doubling") {
      approx.set_provenance(DoublingProvenance{
          p.at("chosen").get<std::vector<std::string>>()});
    } else {
      approx.set_provenance(RadiusProvenance{p.value("radius", 0)});
    }
  }
  return approx;
}

std::vector<std::pair<std::size_t, std::size_t>> stored_edges(const Json& j) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  try {
    for (const auto& e : field(j, "edges")) {
      const auto a = e.at(0).get<std::size_t>();
      const auto b = e.at(1).get<std::size_t>();
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("JSON edges: ") + ex.what());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json to_json(const Obstruction& o) {
  Json j = {{"kind", to_string(o.kind)}, {"detail", o.detail}};
  if (o.witness) {
    j["witness"] = labels(o.source, *o.witness);
  }
  if (!o.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : o.parts) {
      parts.push_back(to_json(p));
    }
    j["parts"] = parts;
  }
  return j;
}

Json to_json(const UnknownReport& r) {
  return {{"strategies", r.strategies},
          {"radius_reached", r.radius_reached},
          {"largest_approximation", r.largest_approximation},
          {"budget_hit", r.budget_hit},
          {"budget",
           {{"max_radius", r.budget.max_radius},
            {"max_vertices", r.budget.max_vertices},
            {"max_nodes", r.budget.nodes.max_nodes}}}};
}

Json to_json(const Verdict& v) {
  if (v.yes()) {
    return {{"verdict", "yes"}, {"certificate", to_json(v.certificate())}};
  }
  if (v.no()) {
    return {{"verdict", "no"}, {"obstruction", to_json(v.obstruction())}};
  }
  return {{"verdict", "unknown"}, {"report", to_json(v.report())}};
}

Json to_json(const GraphClassReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.join_factors) {
    factors.push_back(f.labels());
  }
  Json j = {{"triangle_free", r.triangle_free},
            {"square_free", r.square_free},
            {"forest", r.forest},
            {"bipartite", r.bipartite},
            {"complete", r.complete},
            {"cograph", r.cograph},
            {"weakly_chordal", r.weakly_chordal},
            {"clique_number", r.clique_number},
            {"chromatic_number", r.chromatic_number},
            {"join_factors", factors},
            {"complete_bipartite_params", nullptr}};
  if (r.complete_bipartite_params) {
    j["complete_bipartite_params"] = {r.complete_bipartite_params->first,
                                      r.complete_bipartite_params->second};
  }
  return j;
}

Json to_json(const DiagnosticsReport& r, const ExtGraphApprox& approx) {
  const Graph& g = approx.graph();
  Json histogram = Json::object();
  for (const auto& [d, count] : r.distance_histogram) {
    histogram[std::to_string(d)] = count;
  }
  Json seps = Json::array();
  for (const auto& s : r.star_separation_checks) {
    seps.push_back({{"u", g.label(s.u)},
                    {"v", g.label(s.v)},
                    {"separator", s.separator ? Json(g.label(*s.separator))
                                              : Json(nullptr)}});
  }
  Json bigons = Json::array();
  for (const auto& b : r.thin_bigon_violations) {
    bigons.push_back({{"from", g.label(b.from)},
                      {"to", g.label(b.to)},
                      {"far_vertex", g.label(b.far_vertex)}});
  }
  return {{"order", g.order()},
          {"edges", g.size()},
          {"distance_histogram", histogram},
          {"star_separation", seps},
          {"bigon_pairs_checked", r.bigon_pairs_checked},
          {"thin_bigon_violations", bigons},
          {"chromatic_number", r.chromatic_number}};
}

Json to_json(const PureFactorDecomposition& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors) {
    factors.push_back({{"factor", to_string(f.factor)},
                       {"exponent", f.exponent}});
  }
  return {{"conjugator", to_string(d.conjugator)}, {"factors", factors}};
}

Json to_json(const GeneratorMapReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    Json j = {{"vertex", g.vertex},
              {"image", to_string(g.image)},
              {"clique", g.clique}};
    if (g.decomposition) {
      j["decomposition"] = to_json(*g.decomposition);
    }
    gens.push_back(j);
  }
  Json factors = Json::array();
  for (const auto& f : r.conjugated_factors) {
    factors.push_back(to_string(f));
  }
  Json violations = Json::array();
  for (const auto& v : r.relation_violations) {
    violations.push_back({{"u", v.u},
                          {"v", v.v},
                          {"adjacent_in_source", v.adjacent_in_source}});
  }
  return {{"generators", gens},
          {"conjugated_factors", factors},
          {"commutation", to_json(r.commutation)},
          {"clique_shape_ok", r.clique_shape_ok},
          {"relation_violations", violations}};
}

}  // namespace raag
