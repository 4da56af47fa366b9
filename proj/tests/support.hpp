#ifndef RAAG_TESTS_SUPPORT_HPP
#define RAAG_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "raag/graph.hpp"
#include "raag/words.hpp"

namespace raag::testing {

/// One representative per isomorphism class of graphs on n vertices
/// (n <= 6), labels v0..v{n-1}.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_graphs_up_to(int n);

/// Unlabelled trees on n vertices (n <= 10).
std::vector<Graph> all_trees(int n);
/// Every forest on at most n vertices, one per isomorphism class.
std::vector<Graph> all_forests_up_to(int n);

Graph random_graph(std::mt19937_64& rng, int n, double p);
/// Adds edges in random order, skipping any that would create an induced
/// square.
Graph random_square_free_graph(std::mt19937_64& rng, int n);
Word random_word(std::mt19937_64& rng, const Graph& g, int max_length);
VertexSet random_subset(std::mt19937_64& rng, std::size_t n);

/// Normal form computed from the presentation alone: close the word under
/// swaps of commuting neighbours, cancel any adjacent x x^-1 that appears,
/// repeat, and return the least word of the final class.
Word oracle_normal_form(const Graph& g, Word w);

/// z in <a><b>, decided by searching every word of z's commutation class
/// for a split into an a-part followed by a b-part. z must be reduced.
bool oracle_double_coset(const Graph& g, const Word& z, const VertexSet& a,
                         const VertexSet& b);

/// z in <a><b>, by breadth-first search from z over left multiplication
/// by a-letters and right multiplication by b-letters, never leaving the
/// ball of radius max_length. True iff the identity is reached.
bool oracle_double_coset_bfs(const NormalForm& z, const VertexSet& a,
                             const VertexSet& b, std::size_t max_length);

}  // namespace raag::testing

#endif  // RAAG_TESTS_SUPPORT_HPP
