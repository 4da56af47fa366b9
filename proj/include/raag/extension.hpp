#ifndef RAAG_EXTENSION_HPP
#define RAAG_EXTENSION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/words.hpp"

namespace raag {

/// The conjugate base^w of a vertex, stored as (base, rep) where rep is the
/// minimal representative of the coset ⟨st(base)⟩w.
struct ExtVertex {
  std::size_t base = 0;
  NormalForm rep;

  friend bool operator==(const ExtVertex& a, const ExtVertex& b) {
    return a.base == b.base && a.rep == b.rep;
  }
};

struct ExtVertexHash {
  std::size_t operator()(const ExtVertex& u) const noexcept {
    return std::hash<NormalForm>{}(u.rep) * 31 + u.base;
  }
};

ExtVertex ext_vertex(const GraphPtr& gamma, std::size_t v, const NormalForm& w);
ExtVertex ext_vertex(const GraphPtr& gamma, std::string_view v,
                     const NormalForm& w);
/// The identity conjugate of v.
ExtVertex base_vertex(const GraphPtr& gamma, std::size_t v);

bool ext_adjacent(const ExtVertex& u, const ExtVertex& v);

ExtVertex act(const ExtVertex& u, const NormalForm& g);
std::size_t retract(const ExtVertex& u);
/// The group element rep^{-1} · base · rep.
NormalForm element(const ExtVertex& u);

/// `v` for an identity conjugate, `v^(word)` otherwise.
std::string ext_label(const ExtVertex& u);

/// An element g with vs[i] = base_i^g for every i, if the vertices lie in
/// one conjugate of Γ.
std::optional<NormalForm> common_conjugator(std::span<const ExtVertex> vs);

struct DoublingProvenance {
  /// Labels of the chosen vertices, each a vertex of the approximation
  /// built so far.
  std::vector<std::string> chosen;
};
struct RadiusProvenance {
  int radius = 0;
};
using Provenance = std::variant<DoublingProvenance, RadiusProvenance>;

/// A finite induced subgraph of Γ^e.
class ExtGraphApprox {
 public:
  explicit ExtGraphApprox(GraphPtr base);

  const GraphPtr& base() const { return base_; }
  const Graph& graph() const { return graph_; }
  const std::vector<ExtVertex>& vertices() const { return vertices_; }
  const ExtVertex& vertex(std::size_t i) const { return vertices_[i]; }
  std::size_t order() const { return vertices_.size(); }
  const Provenance& provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  std::optional<std::size_t> find(const ExtVertex& u) const;
  /// Adds u (if new) and its edges to existing vertices. Returns its index.
  std::size_t add(const ExtVertex& u);

 private:
  GraphPtr base_;
  Graph graph_;
  std::vector<ExtVertex> vertices_;
  std::unordered_map<ExtVertex, std::size_t, ExtVertexHash> index_;
  Provenance provenance_ = RadiusProvenance{0};
};

struct GrowStrategy {
  /// Chosen vertex labels for the doubling strategy; ignored if empty and
  /// `radius` is set.
  std::optional<std::vector<std::string>> doubling;
  int radius = 0;

  static GrowStrategy by_radius(int r) { return {std::nullopt, r}; }
  static GrowStrategy by_doubling(std::vector<std::string> labels) {
    return {std::move(labels), 0};
  }
};

/// Throws BudgetExceeded when more than `max_vertices` vertices would be
/// needed.
ExtGraphApprox grow(const GraphPtr& gamma, const GrowStrategy& strategy,
                    std::size_t max_vertices = 2000);

/// Canonical reps of length exactly `len` for base vertex v.
std::vector<NormalForm> canonical_reps(const GraphPtr& gamma, std::size_t v,
                                       int len);

struct ExtensionSearchBudget {
  int max_radius = 3;
  std::size_t max_vertices = 2000;
  SearchBudget nodes{2'000'000};
};

struct ExtensionSearchResult {
  std::optional<std::vector<ExtVertex>> assignment;
  int radius_reached = -1;
  std::size_t largest_approximation = 0;
  bool budget_hit = false;
};

/// Searches grow(gamma, radius r) for r = 0, 1, ... within the budget.
/// Not finding anything proves nothing.
ExtensionSearchResult find_induced_in_extension(
    const Graph& lambda, const GraphPtr& gamma,
    const ExtensionSearchBudget& budget = {});

struct StarSeparation {
  std::size_t u = 0;
  std::size_t v = 0;
  std::optional<std::size_t> separator;
};

struct BigonViolation {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t far_vertex = 0;
};

struct DiagnosticsReport {
  /// Distance from each vertex to the base copy of Γ, -1 if unreachable.
  std::vector<int> distance_to_base;
  /// Number of vertices at each distance from the base copy.
  std::map<int, std::size_t> distance_histogram;
  std::vector<StarSeparation> star_separation_checks;
  std::vector<BigonViolation> thin_bigon_violations;
  std::size_t bigon_pairs_checked = 0;
  int chromatic_number = 0;
};

struct DiagnosticsOptions {
  std::size_t max_separation_pairs = 20;
  std::size_t max_bigon_pairs = 400;
  SearchBudget budget{};
};

DiagnosticsReport diagnostics(const ExtGraphApprox& approx,
                              const DiagnosticsOptions& options = {});

/// All-sources BFS distance from `source` within g; -1 if unreachable.
std::vector<int> bfs_distances(const Graph& g, std::size_t source);

}  // namespace raag

#endif  // RAAG_EXTENSION_HPP
