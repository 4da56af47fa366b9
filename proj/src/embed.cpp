#include "raag/embed.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace raag {

namespace {

constexpr std::array<std::pair<ObstructionKind, const char*>, 12> kind_names{{
    {ObstructionKind::clique_rank, "CliqueRank"},
    {ObstructionKind::kambites_square, "KambitesSquare"},
    {ObstructionKind::p4_theorem, "P4Theorem"},
    {ObstructionKind::forest_target, "ForestTarget"},
    {ObstructionKind::bipartite_target, "BipartiteTarget"},
    {ObstructionKind::triangle_free_cycle, "TriangleFreeCycle"},
    {ObstructionKind::complete_bipartite_class, "CompleteBipartiteClass"},
    {ObstructionKind::cycle_arithmetic, "CycleArithmetic"},
    {ObstructionKind::chromatic_triangle_free, "ChromaticTriangleFree"},
    {ObstructionKind::edge_plus_point, "EdgePlusPoint"},
    {ObstructionKind::abelian_target, "AbelianTarget"},
    {ObstructionKind::join_reduction, "JoinReduction"},
}};

Graph edge_plus_point() { return disjoint_union(path_graph(2), path_graph(1)); }

bool witness_valid(const Graph& pattern, const Graph& g,
                   const std::optional<VertexMap>& m) {
  if (!m || m->size() != pattern.order()) {
    return false;
  }
  for (std::size_t i = 0; i < m->size(); ++i) {
    if ((*m)[i] >= g.order()) {
      return false;
    }
    for (std::size_t j = i + 1; j < m->size(); ++j) {
      if ((*m)[i] == (*m)[j] ||
          pattern.adjacent(i, j) != g.adjacent((*m)[i], (*m)[j])) {
        return false;
      }
    }
  }
  return true;
}

std::string describe(const Graph& g, const VertexMap& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += (i ? ", " : "") + g.label(m[i]);
  }
  return out + "}";
}

// (p, q) with p <= q if g is K_{p,q}, counting edgeless graphs as K_{0,n}.
std::optional<std::pair<int, int>> bipartite_class(const Graph& g) {
  if (is_edgeless(g)) {
    return std::make_pair(0, static_cast<int>(g.order()));
  }
  return complete_bipartite_params(g);
}

bool allowed_in_complete_bipartite(const Graph& lambda, int m, int n) {
  const auto pq = bipartite_class(lambda);
  if (!pq) {
    return false;
  }
  const auto [p, q] = *pq;
  if (m >= 2) {
    return true;
  }
  if (n >= 2) {
    return p <= 1;
  }
  return p <= 1 && q <= 1;
}

bool has_central_vertex(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 == g.order()) {
      return true;
    }
  }
  return false;
}

Obstruction make(ObstructionKind kind, std::string detail, const Graph& lambda,
                 const Graph& gamma, std::optional<VertexMap> witness = {}) {
  return {kind, std::move(detail), lambda, gamma, std::move(witness), {}};
}

}  // namespace

std::string to_string(ObstructionKind kind) {
  for (const auto& [k, name] : kind_names) {
    if (k == kind) {
      return name;
    }
  }
  return "Unknown";
}

std::optional<ObstructionKind> obstruction_kind_from_string(
    std::string_view name) {
  for (const auto& [k, n] : kind_names) {
    if (name == n) {
      return k;
    }
  }
  return std::nullopt;
}

bool cycle_arithmetic(int m, int n) {
  if (m < 4 || n < 4) {
    return m == n;
  }
  if (n == 4) {
    return m == 4;
  }
  return m >= n && (m - n) % (n - 4) == 0;
}

bool recheck(const Obstruction& o, SearchBudget budget) {
  const Graph& l = o.source;
  const Graph& g = o.target;
  switch (o.kind) {
    case ObstructionKind::clique_rank: {
      if (!o.witness) {
        return false;
      }
      const Graph k = complete_graph(static_cast<int>(o.witness->size()));
      return witness_valid(k, l, o.witness) &&
             clique_number(g, budget) < o.witness->size();
    }
    case ObstructionKind::kambites_square:
      return witness_valid(cycle_graph(4), l, o.witness) && square_free(g);
    case ObstructionKind::p4_theorem:
      return witness_valid(path_graph(4), l, o.witness) &&
             !contains_induced(path_graph(4), g, budget);
    case ObstructionKind::forest_target:
      return is_forest(g) && !is_forest(l);
    case ObstructionKind::bipartite_target:
      return is_bipartite(g) && !is_bipartite(l);
    case ObstructionKind::triangle_free_cycle: {
      if (!o.witness || !triangle_free(g)) {
        return false;
      }
      const int n = static_cast<int>(o.witness->size());
      if (n < 5 || !witness_valid(cycle_graph(n), l, o.witness)) {
        return false;
      }
      for (int m = 5; m <= n; ++m) {
        if (contains_induced(cycle_graph(m), g, budget)) {
          return false;
        }
      }
      return true;
    }
    case ObstructionKind::complete_bipartite_class: {
      const auto mn = complete_bipartite_params(g);
      return mn && !allowed_in_complete_bipartite(l, mn->first, mn->second);
    }
    case ObstructionKind::cycle_arithmetic: {
      const auto m = cycle_length(l);
      const auto n = cycle_length(g);
      return m && n && *m >= 4 && *n >= 4 && !cycle_arithmetic(*m, *n);
    }
    case ObstructionKind::chromatic_triangle_free:
      return triangle_free(g) &&
             chromatic_number(l, budget) > chromatic_number(g, budget);
    case ObstructionKind::edge_plus_point:
      return witness_valid(edge_plus_point(), l, o.witness) &&
             !contains_induced(edge_plus_point(), g, budget);
    case ObstructionKind::abelian_target:
      return is_complete(g) && !is_complete(l);
    case ObstructionKind::join_reduction: {
      if (has_central_vertex(l) || !square_free(l)) {
        return false;
      }
      const auto factors = join_factors(g);
      if (factors.size() < 2 || factors.size() != o.parts.size()) {
        return false;
      }
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const Obstruction& p = o.parts[i];
        if (!(p.source == l) || !(p.target == factors[i]) ||
            !recheck(p, budget)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

std::optional<Obstruction> obstruction_scan(const Graph& lambda,
                                            const Graph& gamma,
                                            SearchBudget budget) {
  const auto clique = max_clique(lambda, budget);
  const std::size_t omega_gamma = clique_number(gamma, budget);
  if (clique.size() > omega_gamma) {
    return make(ObstructionKind::clique_rank,
                "source has a clique of size " + std::to_string(clique.size()) +
                    " " + describe(lambda, clique) + ", target clique number " +
                    std::to_string(omega_gamma),
                lambda, gamma, clique);
  }

  const bool gamma_tf = triangle_free(gamma);
  if (gamma_tf) {
    const int chi = chromatic_number(gamma, budget);
    if (chi >= 3 && !k_colorable(lambda, chi, budget)) {
      return make(ObstructionKind::chromatic_triangle_free,
                  "target is triangle-free with chromatic number " +
                      std::to_string(chi) + ", source needs more colours",
                  lambda, gamma);
    }
  }

  if (square_free(gamma)) {
    if (auto sq = find_induced_embedding(cycle_graph(4), lambda, budget)) {
      return make(ObstructionKind::kambites_square,
                  "source has an induced square " + describe(lambda, *sq) +
                      ", target is square-free",
                  lambda, gamma, sq);
    }
  }

  const auto m = cycle_length(lambda);
  const auto n = cycle_length(gamma);
  if (m && n && *m >= 4 && *n >= 4 && !cycle_arithmetic(*m, *n)) {
    return make(ObstructionKind::cycle_arithmetic,
                std::to_string(*m) + " is not " + std::to_string(*n) +
                    " + k(" + std::to_string(*n) + " - 4)",
                lambda, gamma);
  }

  if (is_bipartite(gamma) && !is_bipartite(lambda)) {
    return make(ObstructionKind::bipartite_target,
                "target is bipartite, source is not", lambda, gamma);
  }

  const Graph p4 = path_graph(4);
  if (auto w = find_induced_embedding(p4, lambda, budget)) {
    if (!contains_induced(p4, gamma, budget)) {
      return make(ObstructionKind::p4_theorem,
                  "source has an induced P4 " + describe(lambda, *w) +
                      ", target is P4-free",
                  lambda, gamma, w);
    }
  }

  if (is_forest(gamma) && !is_forest(lambda)) {
    return make(ObstructionKind::forest_target,
                "target is a forest, source is not", lambda, gamma);
  }

  const Graph ep = edge_plus_point();
  if (auto w = find_induced_embedding(ep, lambda, budget)) {
    if (!contains_induced(ep, gamma, budget)) {
      return make(ObstructionKind::edge_plus_point,
                  "source has an edge plus a point " + describe(lambda, *w) +
                      ", target does not",
                  lambda, gamma, w);
    }
  }

  if (const auto mn = complete_bipartite_params(gamma)) {
    if (!allowed_in_complete_bipartite(lambda, mn->first, mn->second)) {
      return make(ObstructionKind::complete_bipartite_class,
                  "target is K_{" + std::to_string(mn->first) + "," +
                      std::to_string(mn->second) +
                      "}, source is not an admissible complete bipartite graph",
                  lambda, gamma);
    }
  }

  if (gamma_tf) {
    if (const auto hole = shortest_long_hole(lambda, budget)) {
      bool gamma_has = false;
      for (int k = 5; k <= *hole && !gamma_has; ++k) {
        gamma_has = contains_induced(cycle_graph(k), gamma, budget);
      }
      if (!gamma_has) {
        auto w = find_induced_embedding(cycle_graph(*hole), lambda, budget);
        return make(ObstructionKind::triangle_free_cycle,
                    "source has an induced C" + std::to_string(*hole) +
                        ", triangle-free target has no C_m for 5 <= m <= " +
                        std::to_string(*hole),
                    lambda, gamma, w);
      }
    }
  }
  return std::nullopt;
}

bool verify_certificate(const EmbeddingCertificate& cert) {
  if (!cert.target) {
    throw InvalidArgument("certificate without a target graph");
  }
  const Graph& gamma = *cert.target;
  if (cert.assignment.size() != cert.source.order()) {
    return false;
  }
  std::vector<ExtVertex> canon;
  canon.reserve(cert.assignment.size());
  for (const auto& u : cert.assignment) {
    if (!same_graph(u.rep.graph(), gamma)) {
      throw InvalidArgument("certificate vertex over a different graph");
    }
    if (u.base >= gamma.order()) {
      return false;
    }
    canon.push_back(ext_vertex(cert.target, u.base, u.rep));
  }
  for (std::size_t i = 0; i < canon.size(); ++i) {
    for (std::size_t j = i + 1; j < canon.size(); ++j) {
      if (canon[i] == canon[j] ||
          cert.source.adjacent(i, j) != ext_adjacent(canon[i], canon[j])) {
        return false;
      }
    }
  }
  return true;
}

EmbeddingCertificate transport(const EmbeddingCertificate& cert,
                               const GraphPtr& gamma,
                               const VertexMap& inclusion) {
  EmbeddingCertificate out{cert.source, gamma, {}, cert.note};
  for (const auto& u : cert.assignment) {
    Word w;
    for (const auto& x : u.rep.letters()) {
      w.push_back({inclusion.at(x.vertex), x.sign});
    }
    out.assignment.push_back(
        ext_vertex(gamma, inclusion.at(u.base), NormalForm(gamma, w)));
  }
  return out;
}

namespace {

// cert.source is isomorphic to lambda via iso (cert index -> lambda index).
EmbeddingCertificate relabel_source(const EmbeddingCertificate& cert,
                                    const Graph& lambda, const VertexMap& iso) {
  EmbeddingCertificate out{lambda, cert.target, cert.assignment, cert.note};
  for (std::size_t i = 0; i < iso.size(); ++i) {
    out.assignment[iso[i]] = cert.assignment[i];
  }
  return out;
}

NormalForm letter_power(const GraphPtr& g, std::size_t v, int k) {
  return power(generator(g, v), k);
}

std::size_t count_letters(const NormalForm& w, std::size_t v) {
  return static_cast<std::size_t>(
      std::count_if(w.letters().begin(), w.letters().end(),
                    [v](const Letter& x) { return x.vertex == v; }));
}

bool cross_ok(const Graph& f, const std::vector<std::size_t>& old_vertices,
              const std::vector<std::size_t>& new_vertices,
              const std::vector<std::optional<ExtVertex>>& image) {
  for (auto i : old_vertices) {
    for (auto j : new_vertices) {
      if (*image[i] == *image[j] ||
          f.adjacent(i, j) != ext_adjacent(*image[i], *image[j])) {
        return false;
      }
    }
  }
  return true;
}

// Places the components of f one after another, translating each new one
// by shift^M for the least M that keeps the union induced.
bool place_components(
    const Graph& f, const std::vector<VertexSet>& comps,
    const NormalForm& shift, int max_translation,
    std::vector<std::optional<ExtVertex>>& image) {
  std::vector<std::size_t> placed;
  for (const auto& comp : comps) {
    std::vector<std::size_t> members;
    for (auto v = comp.find_first(); v != VertexSet::npos;
         v = comp.find_next(v)) {
      members.push_back(v);
    }
    if (!placed.empty()) {
      const auto original = image;
      bool ok = false;
      for (int m = 1; m <= max_translation && !ok; ++m) {
        const NormalForm t = power(shift, m);
        for (auto v : members) {
          image[v] = act(*original[v], t);
        }
        ok = cross_ok(f, placed, members, image);
      }
      if (!ok) {
        return false;
      }
    }
    placed.insert(placed.end(), members.begin(), members.end());
  }
  return true;
}

std::vector<VertexSet> components_in_order(const Graph& g) {
  auto comps = connected_components(g);
  std::sort(comps.begin(), comps.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.find_first() < b.find_first();
            });
  return comps;
}

}  // namespace

Graph p4_target() {
  Graph g({"a", "b", "c", "d"});
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("c", "d");
  return g;
}

EmbeddingCertificate embed_forest_in_p4e(const Graph& f) {
  if (!is_forest(f)) {
    throw InvalidArgument("embed_forest_in_p4e: input is not a forest");
  }
  const GraphPtr p4 = share(p4_target());
  constexpr std::size_t a = 0, b = 1, c = 2, d = 3;
  std::vector<std::optional<ExtVertex>> image(f.order());
  const auto comps = components_in_order(f);

  for (const auto& comp : comps) {
    const std::size_t root = comp.find_first();
    std::vector<std::size_t> members{root};
    image[root] = base_vertex(p4, b);
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const auto parent = q.front();
      q.pop();
      for (auto child = f.neighbours(parent).find_first();
           child != VertexSet::npos;
           child = f.neighbours(parent).find_next(child)) {
        if (image[child]) {
          continue;
        }
        // Move the parent to the identity conjugate of b or c.
        const NormalForm back = inverse(image[parent]->rep);
        for (auto v : members) {
          image[v] = act(*image[v], back);
        }
        const bool at_b = image[parent]->base == b;
        const std::size_t counted = at_b ? a : d;
        std::size_t most = 0;
        for (auto v : members) {
          most = std::max(most, count_letters(image[v]->rep, counted));
        }
        const int m = members.size() == 1 ? 0 : static_cast<int>(most) + 1;
        image[child] = at_b ? ext_vertex(p4, c, letter_power(p4, a, m))
                            : ext_vertex(p4, b, letter_power(p4, d, m));
        members.push_back(child);
        q.push(child);
      }
    }
  }

  const NormalForm ad = product(generator(p4, a), generator(p4, d));
  if (!place_components(f, comps, ad, 1 << 10, image)) {
    throw InvalidArgument("embed_forest_in_p4e: component separation failed");
  }
  EmbeddingCertificate cert{f, p4, {}, "forest_p4"};
  for (auto& u : image) {
    cert.assignment.push_back(*u);
  }
  if (!verify_certificate(cert)) {
    throw InvalidArgument("embed_forest_in_p4e: construction did not verify");
  }
  return cert;
}

namespace {

Obstruction cycle_obstruction(int m, int n) {
  const Graph lambda = cycle_graph(m);
  const Graph gamma = cycle_graph(n);
  if (m == 3) {
    VertexMap w{0, 1, 2};
    return make(ObstructionKind::clique_rank,
                "source is a triangle, target clique number 2", lambda, gamma,
                w);
  }
  if (n == 3) {
    return make(ObstructionKind::abelian_target,
                "target is complete, source is not", lambda, gamma);
  }
  return make(ObstructionKind::cycle_arithmetic,
              std::to_string(m) + " is not " + std::to_string(n) + " + k(" +
                  std::to_string(n) + " - 4)",
              lambda, gamma);
}

// Orders the vertices of an induced cycle by walking around it.
std::optional<std::vector<std::size_t>> walk_cycle(const Graph& g) {
  if (!cycle_length(g)) {
    return std::nullopt;
  }
  std::vector<std::size_t> order{0};
  std::size_t prev = 0;
  std::size_t cur = g.neighbours(0).find_first();
  while (cur != 0) {
    order.push_back(cur);
    VertexSet next = g.neighbours(cur);
    next[prev] = false;
    prev = cur;
    cur = next.find_first();
  }
  return order;
}

}  // namespace

Verdict cycle_in_cycle(int m, int n) {
  if (m < 3 || n < 3) {
    throw InvalidArgument("cycle_in_cycle: need m, n >= 3");
  }
  const GraphPtr target = share(cycle_graph(n));
  const Graph source = cycle_graph(m);
  if (m == n) {
    EmbeddingCertificate cert{source, target, {}, "subgraph"};
    for (int i = 0; i < n; ++i) {
      cert.assignment.push_back(base_vertex(target, static_cast<std::size_t>(i)));
    }
    return {cert};
  }
  if (m == 3 || n == 3 || !cycle_arithmetic(m, n)) {
    return {cycle_obstruction(m, n)};
  }
  const int k = (m - n) / (n - 4);
  // Copy i of the base cycle is its translate by g_i; copy i+1 is copy i
  // reflected through its vertex over base index centre_{i+1}.
  std::vector<ExtVertex> vertices;
  std::vector<ExtVertex> centres;
  NormalForm g(target);
  std::size_t centre = 0;
  auto add = [&](const ExtVertex& u) {
    if (std::find(vertices.begin(), vertices.end(), u) == vertices.end()) {
      vertices.push_back(u);
    }
  };
  for (int i = 0; i < n; ++i) {
    add(base_vertex(target, static_cast<std::size_t>(i)));
  }
  for (int step = 0; step < k; ++step) {
    if (step > 0) {
      centre = (centre + static_cast<std::size_t>(n / 2)) %
               static_cast<std::size_t>(n);
    }
    centres.push_back(ext_vertex(target, centre, g));
    g = product(generator(target, centre), g);
    for (int i = 0; i < n; ++i) {
      add(ext_vertex(target, static_cast<std::size_t>(i), g));
    }
  }
  std::vector<ExtVertex> kept;
  for (const auto& u : vertices) {
    if (std::find(centres.begin(), centres.end(), u) == centres.end()) {
      kept.push_back(u);
    }
  }
  Graph induced;
  for (const auto& u : kept) {
    induced.add_vertex(ext_label(u));
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (ext_adjacent(kept[i], kept[j])) {
        induced.add_edge(i, j);
      }
    }
  }
  const auto order = walk_cycle(induced);
  if (!order || static_cast<int>(order->size()) != m) {
    throw InvalidArgument("cycle_in_cycle: cellulation did not close up");
  }
  EmbeddingCertificate cert{source, target, {}, "cycle_cellulation"};
  for (auto i : *order) {
    cert.assignment.push_back(kept[i]);
  }
  if (!verify_certificate(cert)) {
    throw InvalidArgument("cycle_in_cycle: certificate did not verify");
  }
  return {cert};
}

EmbeddingCertificate canonical_certificate(
    CanonicalKind kind, const GraphPtr& gamma,
    const std::vector<std::string>& arg) {
  const Graph& g = *gamma;
  if (kind == CanonicalKind::star_double) {
    if (arg.size() != 1) {
      throw InvalidArgument("star_double takes exactly one vertex");
    }
    const std::size_t t = g.index(arg.front());
    const Graph lambda = double_along_star(g, t);
    EmbeddingCertificate cert{lambda, gamma, {}, "star_double"};
    for (std::size_t v = 0; v < g.order(); ++v) {
      cert.assignment.push_back(base_vertex(gamma, v));
    }
    const VertexSet st = g.star(t);
    const NormalForm tw = generator(gamma, t);
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (!st[v]) {
        cert.assignment.push_back(act(base_vertex(gamma, v), tw));
      }
    }
    if (!verify_certificate(cert)) {
      throw InvalidArgument("star_double certificate did not verify");
    }
    return cert;
  }

  VertexSet b(g.order());
  for (const auto& l : arg) {
    b[g.index(l)] = true;
  }
  const Graph lambda = cocontract(g, b);
  // Merge B one non-adjacent pair at a time, following a spanning tree of
  // the complement on B.
  const Graph co = complement(g);
  std::vector<std::size_t> order{b.find_first()};
  VertexSet seen(g.order());
  seen[order.front()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexSet next = (co.neighbours(order[i]) & b) - seen;
    for (auto v = next.find_first(); v != VertexSet::npos;
         v = next.find_next(v)) {
      seen[v] = true;
      order.push_back(v);
    }
  }
  ExtVertex merged = base_vertex(gamma, order.front());
  for (std::size_t i = 1; i < order.size(); ++i) {
    merged = act(base_vertex(gamma, order[i]), element(merged));
  }
  EmbeddingCertificate cert{lambda, gamma, {}, "cocontraction"};
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!b[v]) {
      cert.assignment.push_back(base_vertex(gamma, v));
    }
  }
  cert.assignment.push_back(merged);
  if (!verify_certificate(cert)) {
    throw InvalidArgument("cocontraction certificate did not verify");
  }
  return cert;
}

namespace {

std::optional<EmbeddingCertificate> complete_bipartite_certificate(
    const Graph& lambda, const GraphPtr& gamma) {
  const auto sides = join_factor_sets(*gamma);
  const auto pq = bipartite_class(lambda);
  if (sides.size() != 2 || !pq) {
    return std::nullopt;
  }
  // Side s realizes `count` pairwise non-adjacent vertices x^{y^i}, or the
  // single vertex x when it has only one vertex.
  auto side_images = [&](const VertexSet& side, int count)
      -> std::optional<std::vector<ExtVertex>> {
    std::vector<ExtVertex> out;
    const std::size_t x = side.find_first();
    const std::size_t y = side.find_next(x);
    if (count > 1 && y == VertexSet::npos) {
      return std::nullopt;
    }
    for (int i = 0; i < count; ++i) {
      out.push_back(i == 0 ? base_vertex(gamma, x)
                           : ext_vertex(gamma, x, letter_power(gamma, y, i)));
    }
    return out;
  };
  EmbeddingCertificate cert{lambda, gamma, {}, "complete_bipartite"};
  cert.assignment.assign(lambda.order(), base_vertex(gamma, 0));
  if (pq->first == 0) {
    const std::size_t big = sides[0].count() >= sides[1].count() ? 0 : 1;
    auto imgs = side_images(sides[big], pq->second);
    if (!imgs) {
      return std::nullopt;
    }
    cert.assignment = *imgs;
  } else {
    const auto lsides = join_factor_sets(lambda);
    // Larger source side goes to the larger target side.
    std::size_t ls_small = lsides[0].count() <= lsides[1].count() ? 0 : 1;
    std::size_t gs_small = sides[0].count() <= sides[1].count() ? 0 : 1;
    for (int s = 0; s < 2; ++s) {
      const auto& ls = lsides[s == 0 ? ls_small : 1 - ls_small];
      const auto& gs = sides[s == 0 ? gs_small : 1 - gs_small];
      auto imgs = side_images(gs, static_cast<int>(ls.count()));
      if (!imgs) {
        return std::nullopt;
      }
      std::size_t i = 0;
      for (auto v = ls.find_first(); v != VertexSet::npos;
           v = ls.find_next(v)) {
        cert.assignment[v] = (*imgs)[i++];
      }
    }
  }
  if (!verify_certificate(cert)) {
    return std::nullopt;
  }
  return cert;
}

int max_component_diameter(const Graph& f) {
  int best = 0;
  for (std::size_t v = 0; v < f.order(); ++v) {
    for (int d : bfs_distances(f, v)) {
      best = std::max(best, d);
    }
  }
  return best;
}

NormalForm product_of_all(const GraphPtr& gamma) {
  Word w;
  for (std::size_t v = 0; v < gamma->order(); ++v) {
    w.push_back({v, 1});
  }
  return NormalForm(gamma, w);
}

// Forests of diameter <= 2 into a P4-free target that does not split as a
// join: each component inside one copy of P3^e or of an edge plus a point,
// components pushed apart by powers of the product of all vertices.
std::optional<EmbeddingCertificate> small_forest_certificate(
    const Graph& lambda, const GraphPtr& gamma, int max_translation) {
  const Graph& g = *gamma;
  const auto comps = components_in_order(lambda);
  std::vector<std::optional<ExtVertex>> image(lambda.order());
  const int d = max_component_diameter(lambda);
  if (d == 2) {
    const auto p3 = find_induced_embedding(path_graph(3), g);
    if (!p3) {
      return std::nullopt;
    }
    const std::size_t x = (*p3)[0], c = (*p3)[1], y = (*p3)[2];
    for (const auto& comp : comps) {
      const std::size_t size = comp.count();
      std::size_t centre = comp.find_first();
      for (auto v = comp.find_first(); v != VertexSet::npos;
           v = comp.find_next(v)) {
        if (lambda.degree(v) > lambda.degree(centre)) {
          centre = v;
        }
      }
      if (size == 1) {
        image[centre] = base_vertex(gamma, x);
        continue;
      }
      image[centre] = base_vertex(gamma, c);
      int i = 0;
      for (auto v = comp.find_first(); v != VertexSet::npos;
           v = comp.find_next(v)) {
        if (v != centre) {
          image[v] = ext_vertex(gamma, x, letter_power(gamma, y, i++));
        }
      }
    }
  } else {
    std::optional<VertexMap> ep;
    if (!is_edgeless(lambda)) {
      ep = find_induced_embedding(edge_plus_point(), g);
      if (!ep) {
        return std::nullopt;
      }
    }
    if (is_edgeless(lambda)) {
      const auto pair = find_induced_embedding(discrete_graph(2), g);
      if (!pair) {
        return std::nullopt;
      }
      int i = 0;
      for (std::size_t v = 0; v < lambda.order(); ++v) {
        image[v] = ext_vertex(gamma, (*pair)[0],
                              letter_power(gamma, (*pair)[1], i++));
      }
    } else {
      const std::size_t x = (*ep)[0], y = (*ep)[1], z = (*ep)[2];
      int edges = 0;
      int points = 0;
      for (const auto& comp : comps) {
        const std::size_t u = comp.find_first();
        const std::size_t v = comp.find_next(u);
        if (v == VertexSet::npos) {
          image[u] = ext_vertex(gamma, z, letter_power(gamma, x, points++));
        } else {
          const NormalForm t = letter_power(gamma, z, edges++);
          image[u] = ext_vertex(gamma, x, t);
          image[v] = ext_vertex(gamma, y, t);
        }
      }
    }
    EmbeddingCertificate cert{lambda, gamma, {}, "forest"};
    for (auto& u : image) {
      cert.assignment.push_back(*u);
    }
    if (verify_certificate(cert)) {
      return cert;
    }
    return std::nullopt;
  }
  if (!place_components(lambda, comps, product_of_all(gamma), max_translation,
                        image)) {
    return std::nullopt;
  }
  EmbeddingCertificate cert{lambda, gamma, {}, "forest"};
  for (auto& u : image) {
    cert.assignment.push_back(*u);
  }
  if (!verify_certificate(cert)) {
    return std::nullopt;
  }
  return cert;
}

Verdict yes_checked(EmbeddingCertificate cert) {
  if (!verify_certificate(cert)) {
    throw InvalidArgument("internal error: unverified certificate");
  }
  return {std::move(cert)};
}

Verdict decide_impl(const Graph& lambda, const Graph& gamma,
                    const Budget& budget) {
  const GraphPtr target = share(gamma);
  UnknownReport report;
  report.budget = budget.search;

  if (auto m = find_induced_embedding(lambda, gamma, budget.solver)) {
    EmbeddingCertificate cert{lambda, target, {}, "subgraph"};
    for (auto v : *m) {
      cert.assignment.push_back(base_vertex(target, v));
    }
    return yes_checked(std::move(cert));
  }
  report.strategies.push_back("induced subgraph of target");

  if (auto o = obstruction_scan(lambda, gamma, budget.solver)) {
    return {*o};
  }
  report.strategies.push_back("obstruction scan");

  if (is_complete(gamma)) {
    return {make(ObstructionKind::abelian_target,
                 "target is complete, source is not", lambda, gamma)};
  }

  if (complete_bipartite_params(gamma)) {
    if (auto cert = complete_bipartite_certificate(lambda, target)) {
      return yes_checked(std::move(*cert));
    }
    report.strategies.push_back("complete bipartite target");
  }

  const auto m = cycle_length(lambda);
  const auto n = cycle_length(gamma);
  if (m && n) {
    Verdict v = cycle_in_cycle(*m, *n);
    if (v.no()) {
      Obstruction o = v.obstruction();
      o.source = lambda;
      o.target = gamma;
      return {o};
    }
    const auto to_gamma = find_induced_embedding(cycle_graph(*n), gamma);
    const auto from_lambda = find_induced_embedding(cycle_graph(*m), lambda);
    return yes_checked(relabel_source(
        transport(v.certificate(), target, *to_gamma), lambda, *from_lambda));
  }

  const auto factor_sets = join_factor_sets(gamma);
  if (factor_sets.size() >= 2 && !has_central_vertex(lambda) &&
      square_free(lambda)) {
    Obstruction joint = make(ObstructionKind::join_reduction,
                             "source is centerless and square-free, so it "
                             "embeds in a join factor or not at all",
                             lambda, gamma);
    bool all_no = true;
    for (const auto& s : factor_sets) {
      std::vector<std::size_t> inclusion;
      for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        inclusion.push_back(v);
      }
      const Graph factor = induced_subgraph(gamma, inclusion);
      Verdict sub = decide_impl(lambda, factor, budget);
      if (sub.yes()) {
        auto cert = transport(sub.certificate(), target, inclusion);
        return yes_checked(std::move(cert));
      }
      if (sub.no()) {
        joint.parts.push_back(sub.obstruction());
      } else {
        all_no = false;
      }
    }
    if (all_no) {
      return {joint};
    }
    report.strategies.push_back("join reduction");
  }

  if (is_forest(lambda)) {
    const Graph p4 = path_graph(4);
    if (auto inc = find_induced_embedding(p4, gamma)) {
      return yes_checked(transport(embed_forest_in_p4e(lambda), target, *inc));
    }
    if (auto cert =
            small_forest_certificate(lambda, target, budget.max_translation)) {
      return yes_checked(std::move(*cert));
    }
    report.strategies.push_back("forest construction");
  }

  const auto found = find_induced_in_extension(lambda, target, budget.search);
  report.strategies.push_back("extension graph search");
  report.radius_reached = found.radius_reached;
  report.largest_approximation = found.largest_approximation;
  report.budget_hit = found.budget_hit;
  if (found.assignment) {
    return yes_checked({lambda, target, *found.assignment, "search"});
  }
  return {report};
}

}  // namespace

Verdict decide(const Graph& lambda, const Graph& gamma, const Budget& budget) {
  if (lambda.empty() || gamma.empty()) {
    throw InvalidArgument("decide: graphs must be nonempty");
  }
  if (budget.search.max_radius < 0 || budget.search.max_vertices == 0 ||
      budget.max_translation < 1) {
    throw InvalidArgument("decide: invalid budget");
  }
  return decide_impl(lambda, gamma, budget);
}

GeneratorMapReport analyze_generator_map(
    const Graph& lambda, const GraphPtr& gamma,
    const std::vector<NormalForm>& images) {
  if (images.size() != lambda.order()) {
    throw InvalidArgument("one image per source vertex required");
  }
  GeneratorMapReport report;
  for (std::size_t v = 0; v < lambda.order(); ++v) {
    const NormalForm& img = images[v];
    if (!same_graph(img.graph(), *gamma)) {
      throw InvalidArgument("image not over the target graph");
    }
    GeneratorImageReport gen{lambda.label(v), img, std::nullopt, {}};
    if (!img.is_identity()) {
      gen.decomposition = pure_factor_decomposition(img);
      for (const auto& f : gen.decomposition->factors) {
        const NormalForm w = conjugate(f.factor, gen.decomposition->conjugator);
        const NormalForm w_inv = inverse(w);
        std::size_t idx = report.conjugated_factors.size();
        for (std::size_t i = 0; i < report.conjugated_factors.size(); ++i) {
          if (report.conjugated_factors[i] == w ||
              report.conjugated_factors[i] == w_inv) {
            idx = i;
          }
        }
        if (idx == report.conjugated_factors.size()) {
          report.conjugated_factors.push_back(w);
        }
        gen.clique.push_back(idx);
      }
      std::sort(gen.clique.begin(), gen.clique.end());
    }
    report.generators.push_back(std::move(gen));
  }
  if (!report.conjugated_factors.empty()) {
    report.commutation = commutation_graph(report.conjugated_factors);
  }
  for (const auto& gen : report.generators) {
    if (gen.clique.empty()) {
      report.clique_shape_ok = false;
    }
    for (std::size_t i = 0; i < gen.clique.size(); ++i) {
      for (std::size_t j = i + 1; j < gen.clique.size(); ++j) {
        if (!report.commutation.adjacent(gen.clique[i], gen.clique[j])) {
          report.clique_shape_ok = false;
        }
      }
    }
  }
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    for (std::size_t j = 0; j < report.generators.size(); ++j) {
      const auto& a = report.generators[i].clique;
      const auto& b = report.generators[j].clique;
      if (i != j && !a.empty() &&
          std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        report.clique_shape_ok = false;
      }
    }
  }
  for (std::size_t u = 0; u < lambda.order(); ++u) {
    for (std::size_t v = u + 1; v < lambda.order(); ++v) {
      if (commutes(images[u], images[v]) != lambda.adjacent(u, v)) {
        report.relation_violations.push_back(
            {lambda.label(u), lambda.label(v), lambda.adjacent(u, v)});
      }
    }
  }
  return report;
}

}  // namespace raag
