#ifndef RAAG_GRAPH_ALGORITHMS_HPP
#define RAAG_GRAPH_ALGORITHMS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "raag/errors.hpp"
#include "raag/graph.hpp"

namespace raag {

/// Pattern vertex index -> target vertex index.
using VertexMap = std::vector<std::size_t>;

/// Backtracking induced-subgraph search. Returns a map preserving adjacency
/// and non-adjacency, or nullopt if none exists. Throws BudgetExceeded.
std::optional<VertexMap> find_induced_embedding(const Graph& pattern,
                                                const Graph& target,
                                                SearchBudget budget = {});

/// Calls `visit` on every induced embedding; stops early when `visit`
/// returns false. Returns the number of embeddings visited.
std::size_t for_each_induced_embedding(
    const Graph& pattern, const Graph& target,
    const std::function<bool(const VertexMap&)>& visit,
    SearchBudget budget = {});

bool contains_induced(const Graph& pattern, const Graph& target,
                      SearchBudget budget = {});

bool isomorphic(const Graph& a, const Graph& b, SearchBudget budget = {});

std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet& within);
bool is_connected(const Graph& g);

/// A maximum clique, as sorted vertex indices.
std::vector<std::size_t> max_clique(const Graph& g, SearchBudget budget = {});
std::size_t clique_number(const Graph& g, SearchBudget budget = {});

/// A proper k-colouring (colour per vertex) if one exists.
std::optional<std::vector<int>> k_coloring(const Graph& g, int k,
                                           SearchBudget budget = {});
bool k_colorable(const Graph& g, int k, SearchBudget budget = {});
int chromatic_number(const Graph& g, SearchBudget budget = {});

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool triangle_free(const Graph& g);
bool square_free(const Graph& g);
bool is_forest(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_cograph(const Graph& g);

/// n if g is isomorphic to C_n.
std::optional<int> cycle_length(const Graph& g);

/// True iff g has an induced cycle of length >= 5.
bool has_long_hole(const Graph& g);
/// No induced C_n or C_n^opp for n >= 5.
bool weakly_chordal(const Graph& g);

/// Length of the shortest induced cycle of length >= 5, if any.
std::optional<int> shortest_long_hole(const Graph& g,
                                      SearchBudget budget = {});

/// Induced subgraphs on the components of the complement, in order of
/// their smallest vertex.
std::vector<Graph> join_factors(const Graph& g);
std::vector<VertexSet> join_factor_sets(const Graph& g);

/// (p, q) with p <= q when g is K_{p,q} with p, q >= 1.
std::optional<std::pair<int, int>> complete_bipartite_params(const Graph& g);

struct GraphClassReport {
  bool triangle_free = false;
  bool square_free = false;
  bool forest = false;
  bool bipartite = false;
  bool complete = false;
  bool cograph = false;
  bool weakly_chordal = false;
  int clique_number = 0;
  int chromatic_number = 0;
  std::vector<Graph> join_factors;
  std::optional<std::pair<int, int>> complete_bipartite_params;
};

GraphClassReport classify(const Graph& g, SearchBudget budget = {});

}  // namespace raag

#endif  // RAAG_GRAPH_ALGORITHMS_HPP
