#ifndef RAAG_GRAPH_IO_HPP
#define RAAG_GRAPH_IO_HPP

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "raag/graph.hpp"

namespace raag {

/// Edge-list text: first non-blank line `vertices: a b c ...`, then one
/// `u v` pair per line. Blank lines and `#` comments are ignored.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Undirected DOT, one node statement per vertex so isolated vertices
/// survive.
void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G");
std::string to_dot(const Graph& g, std::string_view name = "G");

/// Inline builders: `path:4`, `cycle:5`, `complete:3`, `discrete:2`,
/// `complete_bipartite:2,3` (alias `kbip:2,3`), and `mycielskian:<spec>`,
/// `complement:<spec>`.
Graph parse_graph_spec(std::string_view spec);

/// parse_graph_spec if `arg` looks like a builder, otherwise reads the file.
Graph load_graph(const std::string& arg);

}  // namespace raag

#endif  // RAAG_GRAPH_IO_HPP
