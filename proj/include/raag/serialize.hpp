#ifndef RAAG_SERIALIZE_HPP
#define RAAG_SERIALIZE_HPP

#include <json.hpp>

#include "raag/embed.hpp"
#include "raag/extension.hpp"
#include "raag/graph.hpp"
#include "raag/graph_algorithms.hpp"
#include "raag/words.hpp"

namespace raag {

using Json = nlohmann::ordered_json;

/// {"vertices": [labels], "edges": [[u, v], ...]} with labels in edges.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {source, target, assignment: [{lambda_vertex, base, rep_word}], note}
Json to_json(const EmbeddingCertificate& cert);
EmbeddingCertificate certificate_from_json(const Json& j);

/// {base_graph, provenance, vertices: [{base, rep}], edges: [[i, j]]}
Json to_json(const ExtGraphApprox& approx);
/// Rebuilds the approximation from its vertices; adjacency is recomputed,
/// not read.
ExtGraphApprox approximation_from_json(const Json& j);
/// Edges as stored in the JSON, as sorted index pairs.
std::vector<std::pair<std::size_t, std::size_t>> stored_edges(const Json& j);

Json to_json(const Obstruction& o);
Json to_json(const UnknownReport& r);
/// {"verdict": "yes"|"no"|"unknown", ...}
Json to_json(const Verdict& v);

Json to_json(const GraphClassReport& r);
Json to_json(const DiagnosticsReport& r, const ExtGraphApprox& approx);
Json to_json(const PureFactorDecomposition& d);
Json to_json(const GeneratorMapReport& r);

}  // namespace raag

#endif  // RAAG_SERIALIZE_HPP
