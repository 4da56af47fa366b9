#ifndef RAAG_WORDS_HPP
#define RAAG_WORDS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

using GraphPtr = std::shared_ptr<const Graph>;

GraphPtr share(Graph g);

/// A generator or its inverse. Letters are ordered by vertex index, with
/// the positive letter before its inverse.
struct Letter {
  std::size_t vertex = 0;
  int sign = 1;

  Letter inverse() const { return {vertex, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.vertex <=> b.vertex; c != 0) {
      return c;
    }
    return b.sign <=> a.sign;
  }
};

using Word = std::vector<Letter>;

/// Canonical element of A(Γ): the shortest word for the element that is
/// lexicographically least under the letter order.
class NormalForm {
 public:
  /// The identity.
  explicit NormalForm(GraphPtr graph);
  /// Normalizes `word`. Throws InvalidArgument on an out-of-range vertex.
  NormalForm(GraphPtr graph, std::span<const Letter> word);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const Word& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  VertexSet support() const;

  friend bool operator==(const NormalForm& a, const NormalForm& b);

 private:
  GraphPtr graph_;
  Word letters_;
};

bool same_graph(const Graph& a, const Graph& b);
void require_same_graph(const NormalForm& a, const NormalForm& b);

NormalForm normalize(const GraphPtr& graph, std::span<const Letter> word);

/// Tokens separated by whitespace: `a`, `a^-1`, `a'`, `a^k`. A token equal
/// to a vertex label always means that vertex. `1` is the identity.
Word parse_word(const Graph& graph, std::string_view text);
NormalForm parse_element(const GraphPtr& graph, std::string_view text);

/// Space-separated letters, inverses as `x^-1`; empty for the identity.
std::string to_string(const NormalForm& g);
std::string word_to_string(const Graph& graph, std::span<const Letter> word);

NormalForm generator(const GraphPtr& graph, std::size_t v, int sign = 1);
NormalForm inverse(const NormalForm& g);
NormalForm product(const NormalForm& a, const NormalForm& b);
NormalForm power(const NormalForm& g, int k);
/// h^{-1} g h.
NormalForm conjugate(const NormalForm& g, const NormalForm& h);

struct CyclicReduction {
  NormalForm conjugator;  // p
  NormalForm core;        // g = p^{-1} core p
};
CyclicReduction cyclically_reduce(const NormalForm& g);
bool is_cyclically_reduced(const NormalForm& g);

struct HeadSplit {
  NormalForm head;
  NormalForm rest;
};
/// Maximal left divisor of g with support in s, and the remaining factor.
HeadSplit max_head(const NormalForm& g, const VertexSet& s);

/// z ∈ ⟨a⟩·⟨b⟩.
bool double_coset_member(const NormalForm& z, const VertexSet& a,
                         const VertexSet& b);
/// g ∈ ⟨s⟩.
bool parabolic_member(const NormalForm& g, const VertexSet& s);

struct PureFactor {
  NormalForm factor;
  int exponent = 1;
};
struct PureFactorDecomposition {
  NormalForm conjugator;
  std::vector<PureFactor> factors;
};
/// Throws InvalidArgument on the identity.
PureFactorDecomposition pure_factor_decomposition(const NormalForm& g);
NormalForm reassemble(const PureFactorDecomposition& d);
/// Largest e such that g = r^e, with r.
std::pair<NormalForm, int> maximal_root(const NormalForm& g);

/// Generators of the centralizer of g (Centralizer Theorem).
std::vector<NormalForm> centralizer_generators(const NormalForm& g);

bool commutes(const NormalForm& g, const NormalForm& h);

/// One vertex per word (labelled by the word, `1` for the identity), edges
/// between commuting words.
Graph commutation_graph(std::span<const NormalForm> words);

}  // namespace raag

template <>
struct std::hash<raag::NormalForm> {
  std::size_t operator()(const raag::NormalForm& g) const noexcept;
};

#endif  // RAAG_WORDS_HPP
