#include "raag/graph_algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace raag {

namespace {

constexpr std::size_t npos = VertexSet::npos;

class NodeCounter {
 public:
  NodeCounter(SearchBudget budget, const char* what)
      : limit_(budget.max_nodes), what_(what) {}
  void tick() {
    if (++nodes_ > limit_) {
      throw BudgetExceeded(std::string(what_) + ": node budget exceeded");
    }
  }

 private:
  std::uint64_t nodes_ = 0;
  std::uint64_t limit_;
  const char* what_;
};

template <class F>
void for_each_bit(const VertexSet& s, F&& f) {
  for (auto v = s.find_first(); v != npos; v = s.find_next(v)) {
    f(v);
  }
}

class InducedSearch {
 public:
  InducedSearch(const Graph& pattern, const Graph& target,
                const std::function<bool(const VertexMap&)>& visit,
                SearchBudget budget)
      : p_(pattern), t_(target), visit_(visit),
        counter_(budget, "induced subgraph search"),
        map_(pattern.order(), npos), used_(target.order()) {
    build_order();
    const std::size_t np = p_.order();
    const std::size_t nt = t_.order();
    filter_.assign(np, VertexSet(nt));
    for (std::size_t pv = 0; pv < np; ++pv) {
      const std::size_t pd = p_.degree(pv);
      const std::size_t pco = np - 1 - pd;
      for (std::size_t tv = 0; tv < nt; ++tv) {
        const std::size_t td = t_.degree(tv);
        if (td >= pd && nt - 1 - td >= pco) {
          filter_[pv][tv] = true;
        }
      }
    }
  }

  std::size_t run() {
    if (p_.order() > t_.order()) {
      return 0;
    }
    recurse(0);
    return found_;
  }

 private:
  void build_order() {
    const std::size_t n = p_.order();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = npos;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) {
          continue;
        }
        if (best == npos || links[v] > links[best] ||
            (links[v] == links[best] && p_.degree(v) > p_.degree(best))) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for_each_bit(p_.neighbours(best), [&](std::size_t u) { ++links[u]; });
    }
  }

  bool recurse(std::size_t depth) {
    counter_.tick();
    if (depth == order_.size()) {
      ++found_;
      return visit_(map_);
    }
    const std::size_t pv = order_[depth];
    VertexSet cand = filter_[pv] - used_;
    for (std::size_t i = 0; i < depth && cand.any(); ++i) {
      const std::size_t q = order_[i];
      if (p_.adjacent(pv, q)) {
        cand &= t_.neighbours(map_[q]);
      } else {
        cand -= t_.neighbours(map_[q]);
      }
    }
    for (auto tv = cand.find_first(); tv != npos; tv = cand.find_next(tv)) {
      map_[pv] = tv;
      used_[tv] = true;
      const bool go_on = recurse(depth + 1);
      used_[tv] = false;
      map_[pv] = npos;
      if (!go_on) {
        return false;
      }
    }
    return true;
  }

  const Graph& p_;
  const Graph& t_;
  const std::function<bool(const VertexMap&)>& visit_;
  NodeCounter counter_;
  std::vector<std::size_t> order_;
  std::vector<VertexSet> filter_;
  VertexMap map_;
  VertexSet used_;
  std::size_t found_ = 0;
};

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, SearchBudget budget)
      : g_(g), counter_(budget, "maximum clique") {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> current;
    expand(current, g_.full_set());
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy colouring of p; vertices returned in colour order with bounds.
  void colour_sort(const VertexSet& p, std::vector<std::size_t>& verts,
                   std::vector<std::size_t>& bounds) const {
    VertexSet uncoloured = p;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      VertexSet q = uncoloured;
      while (q.any()) {
        const auto v = q.find_first();
        q[v] = false;
        q -= g_.neighbours(v);
        uncoloured[v] = false;
        verts.push_back(v);
        bounds.push_back(colour);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, VertexSet p) {
    counter_.tick();
    if (p.none()) {
      if (current.size() > best_.size()) {
        best_ = current;
      }
      return;
    }
    std::vector<std::size_t> verts;
    std::vector<std::size_t> bounds;
    colour_sort(p, verts, bounds);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + bounds[i] <= best_.size()) {
        return;
      }
      const auto v = verts[i];
      current.push_back(v);
      expand(current, p & g_.neighbours(v));
      current.pop_back();
      p[v] = false;
    }
  }

  const Graph& g_;
  NodeCounter counter_;
  std::vector<std::size_t> best_;
};

// DSATUR backtracking on the vertices of one component.
class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, int k, NodeCounter& counter)
      : g_(g), k_(k), counter_(counter), colour_(g.order(), -1),
        blocked_(g.order(), std::vector<int>(static_cast<std::size_t>(k), 0)),
        saturation_(g.order(), 0) {}

  bool colour_component(const VertexSet& comp) {
    std::vector<std::size_t> verts;
    for_each_bit(comp, [&](std::size_t v) { verts.push_back(v); });
    return recurse(verts, 0, -1);
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  void assign(std::size_t v, int c, int delta) {
    for_each_bit(g_.neighbours(v), [&](std::size_t u) {
      int& b = blocked_[u][static_cast<std::size_t>(c)];
      if (delta > 0 && b++ == 0) {
        ++saturation_[u];
      } else if (delta < 0 && --b == 0) {
        --saturation_[u];
      }
    });
  }

  bool recurse(const std::vector<std::size_t>& verts, std::size_t done,
               int max_used) {
    counter_.tick();
    if (done == verts.size()) {
      return true;
    }
    std::size_t pick = npos;
    for (auto v : verts) {
      if (colour_[v] >= 0) {
        continue;
      }
      if (pick == npos || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] &&
           g_.degree(v) > g_.degree(pick))) {
        pick = v;
      }
    }
    const int limit = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (blocked_[pick][static_cast<std::size_t>(c)] > 0) {
        continue;
      }
      colour_[pick] = c;
      assign(pick, c, +1);
      if (recurse(verts, done + 1, std::max(max_used, c))) {
        return true;
      }
      assign(pick, c, -1);
      colour_[pick] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  NodeCounter& counter_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> blocked_;
  std::vector<int> saturation_;
};

}  // namespace

std::size_t for_each_induced_embedding(
    const Graph& pattern, const Graph& target,
    const std::function<bool(const VertexMap&)>& visit, SearchBudget budget) {
  InducedSearch search(pattern, target, visit, budget);
  return search.run();
}

std::optional<VertexMap> find_induced_embedding(const Graph& pattern,
                                                const Graph& target,
                                                SearchBudget budget) {
  std::optional<VertexMap> result;
  for_each_induced_embedding(
      pattern, target,
      [&](const VertexMap& m) {
        result = m;
        return false;
      },
      budget);
  return result;
}

bool contains_induced(const Graph& pattern, const Graph& target,
                      SearchBudget budget) {
  return find_induced_embedding(pattern, target, budget).has_value();
}

bool isomorphic(const Graph& a, const Graph& b, SearchBudget budget) {
  if (a.order() != b.order() || a.size() != b.size()) {
    return false;
  }
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < g.order(); ++v) {
      d.push_back(g.degree(v));
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) {
    return false;
  }
  return contains_induced(a, b, budget);
}

std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left.any()) {
    const auto start = left.find_first();
    VertexSet comp(g.order());
    comp[start] = true;
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next(g.order());
      for_each_bit(frontier, [&](std::size_t v) { next |= g.neighbours(v); });
      next &= within;
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.full_set());
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && connected_components(g).size() == 1;
}

std::vector<std::size_t> max_clique(const Graph& g, SearchBudget budget) {
  CliqueSearch search(g, budget);
  return search.run();
}

std::size_t clique_number(const Graph& g, SearchBudget budget) {
  return max_clique(g, budget).size();
}

std::optional<std::vector<int>> k_coloring(const Graph& g, int k,
                                           SearchBudget budget) {
  if (g.order() == 0) {
    return std::vector<int>{};
  }
  if (k <= 0) {
    return std::nullopt;
  }
  NodeCounter counter(budget, "graph colouring");
  ColouringSearch search(g, k, counter);
  for (const auto& comp : connected_components(g)) {
    if (!search.colour_component(comp)) {
      return std::nullopt;
    }
  }
  return search.colours();
}

bool k_colorable(const Graph& g, int k, SearchBudget budget) {
  return k_coloring(g, k, budget).has_value();
}

int chromatic_number(const Graph& g, SearchBudget budget) {
  if (g.order() == 0) {
    return 0;
  }
  if (g.size() == 0) {
    return 1;
  }
  if (is_bipartite(g)) {
    return 2;
  }
  int k = std::max(3, static_cast<int>(clique_number(g, budget)));
  while (!k_colorable(g, k, budget)) {
    ++k;
  }
  return k;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_edgeless(const Graph& g) { return g.size() == 0; }

bool triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbours(u).intersects(g.neighbours(v))) {
      return false;
    }
  }
  return true;
}

bool square_free(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) {
        continue;
      }
      const VertexSet common = g.neighbours(u) & g.neighbours(v);
      bool square = false;
      for_each_bit(common, [&](std::size_t x) {
        VertexSet rest = common - g.neighbours(x);
        rest[x] = false;
        square = square || rest.any();
      });
      if (square) {
        return false;
      }
    }
  }
  return true;
}

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).size() == g.order();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) {
      continue;
    }
    side[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      bool ok = true;
      for_each_bit(g.neighbours(u), [&](std::size_t v) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
      if (!ok) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool cograph_on(const Graph& g, const Graph& co, const VertexSet& s) {
  if (s.count() <= 1) {
    return true;
  }
  auto parts = connected_components(g, s);
  if (parts.size() == 1) {
    parts = connected_components(co, s);
    if (parts.size() == 1) {
      return false;
    }
  }
  return std::all_of(parts.begin(), parts.end(), [&](const VertexSet& p) {
    return cograph_on(g, co, p);
  });
}

}  // namespace

bool is_cograph(const Graph& g) {
  return cograph_on(g, complement(g), g.full_set());
}

std::optional<int> cycle_length(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) {
    return std::nullopt;
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) {
      return std::nullopt;
    }
  }
  return static_cast<int>(g.order());
}

bool has_long_hole(const Graph& g) {
  // A hole of length >= 5 through the edge bc has the shape a-b-c-d plus
  // a path from d back to a avoiding N[b] and N[c].
  for (auto [b, c] : g.edges()) {
    VertexSet closed = g.neighbours(b) | g.neighbours(c);
    closed[b] = true;
    closed[c] = true;
    VertexSet as = g.neighbours(b) - g.neighbours(c);
    as[c] = false;
    VertexSet ds = g.neighbours(c) - g.neighbours(b);
    ds[b] = false;
    if (as.none() || ds.none()) {
      continue;
    }
    const VertexSet rest = ~closed;
    const auto comps = connected_components(g, rest);
    for (const auto& comp : comps) {
      VertexSet touch(g.order());
      for_each_bit(comp, [&](std::size_t x) { touch |= g.neighbours(x); });
      const VertexSet ta = as & touch;
      const VertexSet td = ds & touch;
      bool found = false;
      for_each_bit(ta, [&](std::size_t a) {
        found = found || (td - g.neighbours(a)).any();
      });
      if (found) {
        return true;
      }
    }
  }
  return false;
}

bool weakly_chordal(const Graph& g) {
  return !has_long_hole(g) && !has_long_hole(complement(g));
}

std::optional<int> shortest_long_hole(const Graph& g, SearchBudget budget) {
  if (!has_long_hole(g)) {
    return std::nullopt;
  }
  for (int n = 5; n <= static_cast<int>(g.order()); ++n) {
    if (contains_induced(cycle_graph(n), g, budget)) {
      return n;
    }
  }
  return std::nullopt;
}

std::vector<VertexSet> join_factor_sets(const Graph& g) {
  return connected_components(complement(g));
}

std::vector<Graph> join_factors(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& s : join_factor_sets(g)) {
    out.push_back(induced_subgraph(g, s));
  }
  return out;
}

std::optional<std::pair<int, int>> complete_bipartite_params(const Graph& g) {
  const auto sets = join_factor_sets(g);
  if (sets.size() != 2) {
    return std::nullopt;
  }
  for (const auto& s : sets) {
    if (!is_edgeless(induced_subgraph(g, s))) {
      return std::nullopt;
    }
  }
  int p = static_cast<int>(sets[0].count());
  int q = static_cast<int>(sets[1].count());
  return std::make_pair(std::min(p, q), std::max(p, q));
}

GraphClassReport classify(const Graph& g, SearchBudget budget) {
  GraphClassReport r;
  r.triangle_free = triangle_free(g);
  r.square_free = square_free(g);
  r.forest = is_forest(g);
  r.bipartite = is_bipartite(g);
  r.complete = is_complete(g);
  r.cograph = is_cograph(g);
  r.weakly_chordal = weakly_chordal(g);
  r.clique_number = static_cast<int>(clique_number(g, budget));
  r.chromatic_number = chromatic_number(g, budget);
  r.join_factors = join_factors(g);
  r.complete_bipartite_params = complete_bipartite_params(g);
  return r;
}

}  // namespace raag
