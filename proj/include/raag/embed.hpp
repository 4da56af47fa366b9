#ifndef RAAG_EMBED_HPP
#define RAAG_EMBED_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "raag/errors.hpp"
#include "raag/extension.hpp"
#include "raag/graph.hpp"
#include "raag/graph_algorithms.hpp"
#include "raag/words.hpp"

namespace raag {

enum class ObstructionKind {
  clique_rank,
  kambites_square,
  p4_theorem,
  forest_target,
  bipartite_target,
  triangle_free_cycle,
  complete_bipartite_class,
  cycle_arithmetic,
  chromatic_triangle_free,
  edge_plus_point,
  abelian_target,
  join_reduction,
};

/// CamelCase name used in reports, e.g. "CliqueRank".
std::string to_string(ObstructionKind kind);
std::optional<ObstructionKind> obstruction_kind_from_string(
    std::string_view name);

/// Why A(source) cannot embed in A(target). `witness`, when present, is an
/// induced embedding of a small pattern graph into the source (a clique, a
/// square, P4, a long cycle, or an edge plus a point).
struct Obstruction {
  ObstructionKind kind;
  std::string detail;
  Graph source;
  Graph target;
  std::optional<VertexMap> witness;
  /// join_reduction: one obstruction per join factor of the target.
  std::vector<Obstruction> parts;
};

/// Re-derives the obstruction from graph_core alone.
bool recheck(const Obstruction& o, SearchBudget budget = {});

/// Λ → Γ^e, checked pair by pair with ext_adjacent.
struct EmbeddingCertificate {
  Graph source;
  GraphPtr target;
  std::vector<ExtVertex> assignment;
  /// subgraph | search | forest_p4 | forest | complete_bipartite |
  /// cycle_cellulation | star_double | cocontraction
  std::string note;
};

/// Throws InvalidArgument if an assignment vertex lives over a different
/// graph than the target.
bool verify_certificate(const EmbeddingCertificate& cert);

struct UnknownReport {
  std::vector<std::string> strategies;
  int radius_reached = -1;
  std::size_t largest_approximation = 0;
  bool budget_hit = false;
  ExtensionSearchBudget budget;
};

struct Verdict {
  std::variant<EmbeddingCertificate, Obstruction, UnknownReport> outcome;

  bool yes() const { return outcome.index() == 0; }
  bool no() const { return outcome.index() == 1; }
  bool unknown() const { return outcome.index() == 2; }
  const EmbeddingCertificate& certificate() const {
    return std::get<EmbeddingCertificate>(outcome);
  }
  const Obstruction& obstruction() const {
    return std::get<Obstruction>(outcome);
  }
  const UnknownReport& report() const {
    return std::get<UnknownReport>(outcome);
  }
};

struct Budget {
  ExtensionSearchBudget search;
  SearchBudget solver{};
  /// Largest exponent tried when separating components by translation.
  int max_translation = 64;
};

std::optional<Obstruction> obstruction_scan(const Graph& lambda,
                                            const Graph& gamma,
                                            SearchBudget budget = {});

Verdict decide(const Graph& lambda, const Graph& gamma,
               const Budget& budget = {});

/// P4 labelled a - b - c - d.
Graph p4_target();

/// Throws InvalidArgument if f is not a forest.
EmbeddingCertificate embed_forest_in_p4e(const Graph& f);

/// m, n >= 3.
Verdict cycle_in_cycle(int m, int n);

/// True iff m = n + k(n - 4) for some k >= 0 (only m = 4 when n = 4).
bool cycle_arithmetic(int m, int n);

enum class CanonicalKind { star_double, cocontraction };

/// star_double: `arg` holds the one vertex t. cocontraction: `arg` is an
/// anticonnected set B.
EmbeddingCertificate canonical_certificate(CanonicalKind kind,
                                           const GraphPtr& gamma,
                                           const std::vector<std::string>& arg);

/// Carries a certificate into a larger graph along an induced embedding
/// `inclusion` of cert.target into `gamma`.
EmbeddingCertificate transport(const EmbeddingCertificate& cert,
                               const GraphPtr& gamma,
                               const VertexMap& inclusion);

struct GeneratorImageReport {
  std::string vertex;
  NormalForm image;
  std::optional<PureFactorDecomposition> decomposition;
  /// Indices into GeneratorMapReport::conjugated_factors.
  std::vector<std::size_t> clique;
};

struct RelationViolation {
  std::string u;
  std::string v;
  bool adjacent_in_source = false;
};

struct GeneratorMapReport {
  std::vector<GeneratorImageReport> generators;
  std::vector<NormalForm> conjugated_factors;
  Graph commutation;
  /// Each generator's factors form a clique and no clique contains another.
  bool clique_shape_ok = true;
  std::vector<RelationViolation> relation_violations;
  bool respects_relations() const { return relation_violations.empty(); }
};

/// Necessary-condition analysis of a proposed map V(Λ) → A(Γ).
GeneratorMapReport analyze_generator_map(
    const Graph& lambda, const GraphPtr& gamma,
    const std::vector<NormalForm>& images);

}  // namespace raag

#endif  // RAAG_EMBED_HPP
