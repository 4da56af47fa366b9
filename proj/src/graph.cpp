#include "raag/graph.hpp"

#include <algorithm>
#include <queue>

#include "raag/errors.hpp"

namespace raag {

Graph::Graph(std::vector<std::string> labels) {
  for (auto& l : labels) {
    add_vertex(std::move(l));
  }
}

std::size_t Graph::add_vertex(std::string label) {
  if (label.empty()) {
    throw InvalidArgument("vertex labels must be nonempty");
  }
  if (index_.contains(label)) {
    throw InvalidArgument("duplicate vertex label: " + label);
  }
  const std::size_t id = labels_.size();
  index_.emplace(label, id);
  labels_.push_back(std::move(label));
  for (auto& row : adj_) {
    row.push_back(false);
  }
  adj_.emplace_back(labels_.size());
  return id;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) {
    throw InvalidArgument("edge endpoint out of range");
  }
  if (u == v) {
    throw InvalidArgument("self-loop at " + labels_[u]);
  }
  if (!adj_[u][v]) {
    adj_[u][v] = true;
    adj_[v][u] = true;
    ++edge_count_;
  }
}

void Graph::add_edge(std::string_view u, std::string_view v) {
  add_edge(index(u), index(v));
}

std::optional<std::size_t> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t Graph::index(std::string_view label) const {
  if (auto i = find(label)) {
    return *i;
  }
  throw InvalidArgument("unknown vertex: " + std::string(label));
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos;
         v = adj_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::star(std::size_t v) const {
  VertexSet s = adj_[v];
  s[v] = true;
  return s;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.labels_ == b.labels_ && a.adj_ == b.adj_;
}

std::string fresh_label(const Graph& g, std::string base) {
  if (!g.find(base)) {
    return base;
  }
  std::string primed = base + "'";
  if (!g.find(primed)) {
    return primed;
  }
  for (int k = 2;; ++k) {
    std::string candidate = primed + std::to_string(k);
    if (!g.find(candidate)) {
      return candidate;
    }
  }
}

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back("v" + std::to_string(i));
  }
  return out;
}

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw InvalidArgument(std::string(what) + ": negative parameter");
  }
}

}  // namespace

Graph path_graph(int n) {
  if (n < 1) {
    throw InvalidArgument("path: need n >= 1");
  }
  Graph g(numbered_labels(n));
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw InvalidArgument("cycle: need n >= 3");
  }
  Graph g = path_graph(n);
  g.add_edge(static_cast<std::size_t>(n - 1), 0);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) {
    throw InvalidArgument("complete: need n >= 1");
  }
  Graph g(numbered_labels(n));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      g.add_edge(i, j);
    }
  }
  return g;
}

Graph complete_bipartite_graph(int p, int q) {
  require_nonnegative(p, "complete_bipartite");
  require_nonnegative(q, "complete_bipartite");
  Graph g(numbered_labels(p + q));
  for (int i = 0; i < p; ++i) {
    for (int j = p; j < p + q; ++j) {
      g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return g;
}

Graph discrete_graph(int n) {
  if (n < 1) {
    throw InvalidArgument("discrete: need n >= 1");
  }
  return Graph(numbered_labels(n));
}

Graph standard_graph(GraphKind kind, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw InvalidArgument("wrong number of graph parameters");
    }
  };
  switch (kind) {
    case GraphKind::path:
      need(1);
      return path_graph(params[0]);
    case GraphKind::cycle:
      need(1);
      return cycle_graph(params[0]);
    case GraphKind::complete:
      need(1);
      return complete_graph(params[0]);
    case GraphKind::complete_bipartite:
      need(2);
      return complete_bipartite_graph(params[0], params[1]);
    case GraphKind::discrete:
      need(1);
      return discrete_graph(params[0]);
  }
  throw InvalidArgument("unknown graph kind");
}

Graph combine(CombineMode mode, const Graph& g1, const Graph& g2) {
  bool collide = false;
  for (const auto& l : g2.labels()) {
    if (g1.find(l)) {
      collide = true;
      break;
    }
  }
  Graph out;
  for (const auto& l : g1.labels()) {
    out.add_vertex(collide ? "L." + l : l);
  }
  for (const auto& l : g2.labels()) {
    out.add_vertex(collide ? "R." + l : l);
  }
  const std::size_t offset = g1.order();
  for (auto [u, v] : g1.edges()) {
    out.add_edge(u, v);
  }
  for (auto [u, v] : g2.edges()) {
    out.add_edge(u + offset, v + offset);
  }
  if (mode == CombineMode::join) {
    for (std::size_t u = 0; u < g1.order(); ++u) {
      for (std::size_t v = 0; v < g2.order(); ++v) {
        out.add_edge(u, v + offset);
      }
    }
  }
  return out;
}

Graph join(const Graph& g1, const Graph& g2) {
  return combine(CombineMode::join, g1, g2);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return combine(CombineMode::disjoint_union, g1, g2);
}

Graph complement(const Graph& g) {
  Graph out(g.labels());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) {
        out.add_edge(u, v);
      }
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  Graph out;
  for (auto v : vertices) {
    if (v >= g.order()) {
      throw InvalidArgument("induced_subgraph: vertex out of range");
    }
    out.add_vertex(g.label(v));
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        out.add_edge(i, j);
      }
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<std::size_t> list;
  for (auto v = vertices.find_first(); v != VertexSet::npos;
       v = vertices.find_next(v)) {
    list.push_back(v);
  }
  return induced_subgraph(g, list);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<std::size_t> list;
  list.reserve(labels.size());
  for (const auto& l : labels) {
    list.push_back(g.index(l));
  }
  return induced_subgraph(g, list);
}

Graph double_along_star(const Graph& g, std::size_t t) {
  if (t >= g.order()) {
    throw InvalidArgument("double_along_star: vertex out of range");
  }
  const VertexSet st = g.star(t);
  Graph out(g.labels());
  for (auto [u, v] : g.edges()) {
    out.add_edge(u, v);
  }
  // copy[v] is the index of v's twin in the second copy.
  std::vector<std::size_t> copy(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    copy[v] = st[v] ? v : out.add_vertex(fresh_label(out, g.label(v) + "'"));
  }
  for (auto [u, v] : g.edges()) {
    if (!st[u] || !st[v]) {
      out.add_edge(copy[u], copy[v]);
    }
  }
  return out;
}

Graph double_along_star(const Graph& g, std::string_view t) {
  return double_along_star(g, g.index(t));
}

bool anticonnected(const Graph& g, const VertexSet& b) {
  const auto first = b.find_first();
  if (first == VertexSet::npos) {
    return false;
  }
  VertexSet seen(g.order());
  seen[first] = true;
  std::queue<std::size_t> q;
  q.push(first);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    // Complement neighbours of u inside b.
    VertexSet next = b - g.neighbours(u) - seen;
    next[u] = false;
    for (auto v = next.find_first(); v != VertexSet::npos;
         v = next.find_next(v)) {
      seen[v] = true;
      q.push(v);
    }
  }
  return seen == b;
}

std::string cocontraction_label(const Graph& g, const VertexSet& b) {
  std::string name = "{";
  bool first = true;
  for (auto v = b.find_first(); v != VertexSet::npos; v = b.find_next(v)) {
    if (!first) {
      name += ',';
    }
    name += g.label(v);
    first = false;
  }
  name += '}';
  return name;
}

Graph cocontract(const Graph& g, const VertexSet& b) {
  if (b.size() != g.order()) {
    throw InvalidArgument("cocontract: vertex set has the wrong universe");
  }
  if (b.none()) {
    throw InvalidArgument("cocontract: empty vertex set");
  }
  if (!anticonnected(g, b)) {
    throw InvalidArgument("cocontract: vertex set is not anticonnected");
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!b[v]) {
      keep.push_back(v);
    }
  }
  Graph out = induced_subgraph(g, keep);
  const std::size_t vb = out.add_vertex(
      fresh_label(out, cocontraction_label(g, b)));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (b.is_subset_of(g.neighbours(keep[i]))) {
      out.add_edge(i, vb);
    }
  }
  return out;
}

Graph cocontract(const Graph& g, const std::vector<std::string>& b) {
  VertexSet set(g.order());
  for (const auto& l : b) {
    set[g.index(l)] = true;
  }
  return cocontract(g, set);
}

Graph contract(const Graph& g, const VertexSet& b) {
  return complement(cocontract(complement(g), b));
}

std::vector<std::vector<std::size_t>> all_cliques(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  // Extend cliques by vertices of larger index only.
  auto extend = [&](auto&& self, VertexSet candidates) -> void {
    for (auto v = candidates.find_first(); v != VertexSet::npos;
         v = candidates.find_next(v)) {
      current.push_back(v);
      out.push_back(current);
      VertexSet next = candidates & g.neighbours(v);
      for (std::size_t u = 0; u <= v; ++u) {
        next[u] = false;
      }
      self(self, next);
      current.pop_back();
    }
  };
  extend(extend, g.full_set());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  });
  return out;
}

Graph clique_graph(const Graph& g) {
  const auto cliques = all_cliques(g);
  Graph out;
  std::vector<VertexSet> sets;
  for (const auto& c : cliques) {
    VertexSet s(g.order());
    std::string name = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
      s[c[i]] = true;
      name += (i ? "," : "") + g.label(c[i]);
    }
    name += '}';
    out.add_vertex(std::move(name));
    sets.push_back(std::move(s));
  }
  auto is_clique = [&](const VertexSet& s) {
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
      VertexSet others = s;
      others[v] = false;
      if (!others.is_subset_of(g.neighbours(v))) {
        return false;
      }
    }
    return true;
  };
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (is_clique(sets[i] | sets[j])) {
        out.add_edge(i, j);
      }
    }
  }
  return out;
}

Graph mycielskian(const Graph& g) {
  Graph out(g.labels());
  const std::size_t n = g.order();
  for (std::size_t v = 0; v < n; ++v) {
    out.add_vertex(fresh_label(out, "u." + g.label(v)));
  }
  const std::size_t hub = out.add_vertex(fresh_label(out, "w"));
  for (auto [u, v] : g.edges()) {
    out.add_edge(u, v);
    out.add_edge(n + u, v);
    out.add_edge(u, n + v);
  }
  for (std::size_t v = 0; v < n; ++v) {
    out.add_edge(n + v, hub);
  }
  return out;
}

}  // namespace raag
