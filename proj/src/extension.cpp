#include "raag/extension.hpp"

#include <queue>
#include <unordered_set>

#include "raag/graph_algorithms.hpp"

namespace raag {

ExtVertex ext_vertex(const GraphPtr& gamma, std::size_t v, const NormalForm& w) {
  if (v >= gamma->order()) {
    throw InvalidArgument("ext_vertex: vertex out of range");
  }
  if (!same_graph(*gamma, w.graph())) {
    throw InvalidArgument("ext_vertex: word over a different graph");
  }
  return {v, max_head(w, gamma->star(v)).rest};
}

ExtVertex ext_vertex(const GraphPtr& gamma, std::string_view v,
                     const NormalForm& w) {
  return ext_vertex(gamma, gamma->index(v), w);
}

ExtVertex base_vertex(const GraphPtr& gamma, std::size_t v) {
  return ext_vertex(gamma, v, NormalForm(gamma));
}

bool ext_adjacent(const ExtVertex& u, const ExtVertex& v) {
  const Graph& g = u.rep.graph();
  require_same_graph(u.rep, v.rep);
  if (!g.adjacent(u.base, v.base)) {
    return false;
  }
  return double_coset_member(product(u.rep, inverse(v.rep)), g.star(u.base),
                             g.star(v.base));
}

ExtVertex act(const ExtVertex& u, const NormalForm& g) {
  require_same_graph(u.rep, g);
  const Graph& gr = u.rep.graph();
  return {u.base, max_head(product(u.rep, g), gr.star(u.base)).rest};
}

std::size_t retract(const ExtVertex& u) { return u.base; }

NormalForm element(const ExtVertex& u) {
  return conjugate(generator(u.rep.graph_ptr(), u.base), u.rep);
}

std::string ext_label(const ExtVertex& u) {
  const std::string& name = u.rep.graph().label(u.base);
  if (u.rep.is_identity()) {
    return name;
  }
  return name + "^(" + to_string(u.rep) + ")";
}

std::optional<NormalForm> common_conjugator(std::span<const ExtVertex> vs) {
  if (vs.empty()) {
    return std::nullopt;
  }
  const Graph& gr = vs.front().rep.graph();
  // The running intersection is the coset ⟨s⟩g.
  VertexSet s = gr.star(vs.front().base);
  NormalForm g = vs.front().rep;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const VertexSet t = gr.star(vs[i].base);
    const auto split = max_head(product(g, inverse(vs[i].rep)), s);
    if (!split.rest.support().is_subset_of(t)) {
      return std::nullopt;
    }
    g = product(inverse(split.head), g);
    s &= t;
  }
  return g;
}

ExtGraphApprox::ExtGraphApprox(GraphPtr base)
    : base_(std::move(base)) {}

std::optional<std::size_t> ExtGraphApprox::find(const ExtVertex& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t ExtGraphApprox::add(const ExtVertex& u) {
  if (auto i = find(u)) {
    return *i;
  }
  const std::size_t id = graph_.add_vertex(ext_label(u));
  vertices_.push_back(u);
  index_.emplace(u, id);
  const Graph& g = *base_;
  for (std::size_t j = 0; j < id; ++j) {
    if (g.adjacent(u.base, vertices_[j].base) &&
        ext_adjacent(u, vertices_[j])) {
      graph_.add_edge(id, j);
    }
  }
  return id;
}

namespace {

void check_budget(const ExtGraphApprox& approx, std::size_t max_vertices) {
  if (approx.order() >= max_vertices) {
    throw BudgetExceeded("extension graph approximation exceeds " +
                         std::to_string(max_vertices) + " vertices");
  }
}

// Canonical reps of length len+1 extending those of length len.
std::vector<NormalForm> extend_reps(const GraphPtr& gamma, std::size_t v,
                                    const std::vector<NormalForm>& reps) {
  const VertexSet st = gamma->star(v);
  std::vector<NormalForm> out;
  std::unordered_set<NormalForm> seen;
  for (const auto& rep : reps) {
    for (std::size_t x = 0; x < gamma->order(); ++x) {
      for (int sign : {1, -1}) {
        NormalForm w = product(rep, generator(gamma, x, sign));
        if (w.length() != rep.length() + 1 ||
            !max_head(w, st).head.is_identity()) {
          continue;
        }
        if (seen.insert(w).second) {
          out.push_back(std::move(w));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<NormalForm> canonical_reps(const GraphPtr& gamma, std::size_t v,
                                       int len) {
  std::vector<NormalForm> reps{NormalForm(gamma)};
  for (int k = 0; k < len; ++k) {
    reps = extend_reps(gamma, v, reps);
  }
  return reps;
}

ExtGraphApprox grow(const GraphPtr& gamma, const GrowStrategy& strategy,
                    std::size_t max_vertices) {
  if (max_vertices < gamma->order()) {
    throw InvalidArgument("grow: budget smaller than the base graph");
  }
  ExtGraphApprox approx(gamma);
  for (std::size_t v = 0; v < gamma->order(); ++v) {
    approx.add(base_vertex(gamma, v));
  }
  if (strategy.doubling) {
    for (const auto& label : *strategy.doubling) {
      const auto idx = approx.graph().find(label);
      if (!idx) {
        throw InvalidArgument("doubling: no vertex " + label +
                              " in the current approximation");
      }
      const NormalForm u = element(approx.vertex(*idx));
      const std::size_t n = approx.order();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == *idx || approx.graph().adjacent(*idx, j)) {
          continue;
        }
        ExtVertex y = act(approx.vertex(j), u);
        if (!approx.find(y)) {
          check_budget(approx, max_vertices);
          approx.add(y);
        }
      }
    }
    approx.set_provenance(DoublingProvenance{*strategy.doubling});
    return approx;
  }
  if (strategy.radius < 0) {
    throw InvalidArgument("grow: negative radius");
  }
  std::vector<std::vector<NormalForm>> frontier(gamma->order(),
                                                {NormalForm(gamma)});
  for (int k = 0; k < strategy.radius; ++k) {
    for (std::size_t v = 0; v < gamma->order(); ++v) {
      frontier[v] = extend_reps(gamma, v, frontier[v]);
      for (const auto& rep : frontier[v]) {
        check_budget(approx, max_vertices);
        approx.add(ExtVertex{v, rep});
      }
    }
  }
  approx.set_provenance(RadiusProvenance{strategy.radius});
  return approx;
}

ExtensionSearchResult find_induced_in_extension(
    const Graph& lambda, const GraphPtr& gamma,
    const ExtensionSearchBudget& budget) {
  ExtensionSearchResult result;
  for (int r = 0; r <= budget.max_radius; ++r) {
    std::optional<ExtGraphApprox> approx;
    try {
      approx.emplace(grow(gamma, GrowStrategy::by_radius(r),
                          budget.max_vertices));
    } catch (const BudgetExceeded&) {
      result.budget_hit = true;
      break;
    }
    result.radius_reached = r;
    result.largest_approximation = approx->order();
    try {
      if (auto m = find_induced_embedding(lambda, approx->graph(),
                                          budget.nodes)) {
        std::vector<ExtVertex> out;
        for (auto i : *m) {
          out.push_back(approx->vertex(i));
        }
        result.assignment = std::move(out);
        return result;
      }
    } catch (const BudgetExceeded&) {
      result.budget_hit = true;
      break;
    }
  }
  return result;
}

std::vector<int> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<std::size_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    const auto& row = g.neighbours(u);
    for (auto v = row.find_first(); v != VertexSet::npos;
         v = row.find_next(v)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

namespace {

// Vertices reachable from `start` inside `allowed`.
VertexSet reach(const Graph& g, std::size_t start, const VertexSet& allowed) {
  VertexSet seen(g.order());
  seen[start] = true;
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next(g.order());
    for (auto v = frontier.find_first(); v != VertexSet::npos;
         v = frontier.find_next(v)) {
      next |= g.neighbours(v);
    }
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::optional<std::size_t> separating_star(const Graph& g, std::size_t u,
                                           std::size_t v) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    VertexSet st = g.star(x);
    if (st[u] || st[v]) {
      continue;
    }
    if (!reach(g, u, ~st)[v]) {
      return x;
    }
  }
  return std::nullopt;
}

// A geodesic from `from` to `to` avoiding the 2-ball of some interval
// vertex breaks 2-thinness.
std::optional<std::size_t> bigon_violation(const Graph& g, std::size_t from,
                                           std::size_t to,
                                           const std::vector<int>& df,
                                           const std::vector<int>& dt) {
  const int d = df[to];
  std::vector<VertexSet> level(static_cast<std::size_t>(d) + 1,
                               VertexSet(g.order()));
  VertexSet interval(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (df[x] >= 0 && dt[x] >= 0 && df[x] + dt[x] == d) {
      interval[x] = true;
      level[static_cast<std::size_t>(df[x])][x] = true;
    }
  }
  for (auto p = interval.find_first(); p != VertexSet::npos;
       p = interval.find_next(p)) {
    VertexSet ball = g.star(p);
    for (auto y = g.neighbours(p).find_first(); y != VertexSet::npos;
         y = g.neighbours(p).find_next(y)) {
      ball |= g.neighbours(y);
    }
    if (ball[from] || ball[to]) {
      continue;
    }
    VertexSet current(g.order());
    current[from] = true;
    for (int t = 1; t <= d && current.any(); ++t) {
      VertexSet next(g.order());
      for (auto y = current.find_first(); y != VertexSet::npos;
           y = current.find_next(y)) {
        next |= g.neighbours(y);
      }
      current = (next & level[static_cast<std::size_t>(t)]) - ball;
    }
    if (current[to]) {
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace

DiagnosticsReport diagnostics(const ExtGraphApprox& approx,
                              const DiagnosticsOptions& options) {
  DiagnosticsReport report;
  const Graph& g = approx.graph();
  const std::size_t n = approx.order();
  std::vector<std::size_t> base_copy;
  for (std::size_t i = 0; i < n; ++i) {
    if (approx.vertex(i).rep.is_identity()) {
      base_copy.push_back(i);
    }
  }

  report.distance_to_base.assign(n, -1);
  {
    std::queue<std::size_t> q;
    for (auto i : base_copy) {
      report.distance_to_base[i] = 0;
      q.push(i);
    }
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v = g.neighbours(u).find_first(); v != VertexSet::npos;
           v = g.neighbours(u).find_next(v)) {
        if (report.distance_to_base[v] < 0) {
          report.distance_to_base[v] = report.distance_to_base[u] + 1;
          q.push(v);
        }
      }
    }
    for (int d : report.distance_to_base) {
      ++report.distance_histogram[d];
    }
  }

  for (std::size_t j = 0;
       j < n && report.star_separation_checks.size() <
                    options.max_separation_pairs;
       ++j) {
    for (auto i : base_copy) {
      if (report.star_separation_checks.size() >=
          options.max_separation_pairs) {
        break;
      }
      const ExtVertex pair[] = {approx.vertex(i), approx.vertex(j)};
      if (i == j || common_conjugator(pair)) {
        continue;
      }
      report.star_separation_checks.push_back(
          {i, j, separating_star(g, i, j)});
    }
  }

  for (auto i : base_copy) {
    if (report.bigon_pairs_checked >= options.max_bigon_pairs) {
      break;
    }
    const auto di = bfs_distances(g, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (report.bigon_pairs_checked >= options.max_bigon_pairs) {
        break;
      }
      if (di[j] < 2) {
        continue;
      }
      ++report.bigon_pairs_checked;
      const auto dj = bfs_distances(g, j);
      if (auto p = bigon_violation(g, i, j, di, dj)) {
        report.thin_bigon_violations.push_back({i, j, *p});
      }
    }
  }

  report.chromatic_number = chromatic_number(g, options.budget);
  return report;
}

}  // namespace raag
