#ifndef RAAG_GRAPH_HPP
#define RAAG_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace raag {

using VertexSet = boost::dynamic_bitset<>;

/// Finite simple graph with unique string labels. Vertices are addressed by
/// their index in insertion order; adjacency rows are bitsets so that the
/// solvers can intersect neighbourhoods cheaply.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  std::size_t add_vertex(std::string label);
  void add_edge(std::size_t u, std::size_t v);
  void add_edge(std::string_view u, std::string_view v);

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }
  const VertexSet& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  const std::string& label(std::size_t v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of `label`; throws InvalidArgument if absent.
  std::size_t index(std::string_view label) const;

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// st(v) as a vertex set.
  VertexSet star(std::size_t v) const;
  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet full_set() const { return ~VertexSet(order()); }

  /// Exact equality: same labels in the same order and same edges.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// Returns a label not used in `g`, starting from `base` and appending
/// primes, then a counter.
std::string fresh_label(const Graph& g, std::string base);

// ---------------------------------------------------------------- builders

enum class GraphKind { path, cycle, complete, complete_bipartite, discrete };

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);
Graph discrete_graph(int n);
Graph standard_graph(GraphKind kind, std::span<const int> params);

// -------------------------------------------------------------- transforms

enum class CombineMode { join, disjoint_union };

/// Join or disjoint union. If the label sets collide, every label of g1 is
/// prefixed with "L." and every label of g2 with "R.".
Graph combine(CombineMode mode, const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

/// Induced subgraph on the given vertices, in the given order.
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels);

/// Two copies of g glued along st(t). The first |V| vertices are g itself;
/// every vertex outside st(t) then gets a primed copy, in index order.
Graph double_along_star(const Graph& g, std::size_t t);
Graph double_along_star(const Graph& g, std::string_view t);

/// True iff `b` is nonempty and induces a connected subgraph of the
/// complement.
bool anticonnected(const Graph& g, const VertexSet& b);

/// Co-contraction: V \ B plus one vertex v_B adjacent to x iff B ⊆ lk(x).
/// v_B is appended last and labelled "{b1,b2,...}".
Graph cocontract(const Graph& g, const VertexSet& b);
Graph cocontract(const Graph& g, const std::vector<std::string>& b);
std::string cocontraction_label(const Graph& g, const VertexSet& b);

/// Contraction CO(g, B) for connected B, via CO(g,B) = co-contract of the
/// complement, complemented.
Graph contract(const Graph& g, const VertexSet& b);

/// Nonempty cliques of g as vertex sets, in a fixed order (by size, then
/// lexicographic on sorted index lists).
std::vector<std::vector<std::size_t>> all_cliques(const Graph& g);

/// Graph on the nonempty cliques; two cliques adjacent iff their union is a
/// clique.
Graph clique_graph(const Graph& g);

/// Mycielskian: g, one shadow u_i per vertex adjacent to N(v_i), one hub
/// adjacent to all shadows.
Graph mycielskian(const Graph& g);

}  // namespace raag

#endif  // RAAG_GRAPH_HPP
