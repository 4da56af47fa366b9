#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "raag/graph_algorithms.hpp"

namespace raag::testing {

namespace {

using Mask = std::uint32_t;

std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

Graph from_mask(int n, Mask m) {
  Graph g = discrete_graph(n);
  const auto ps = pairs(n);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (m >> k & 1) {
      g.add_edge(ps[k].first, ps[k].second);
    }
  }
  return g;
}

// AHU encoding of the tree rooted at r.
std::string rooted_code(const Graph& t, std::size_t r, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto c = t.neighbours(r).find_first(); c != VertexSet::npos;
       c = t.neighbours(r).find_next(c)) {
    if (c != parent) {
      kids.push_back(rooted_code(t, c, r));
    }
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) {
    s += k;
  }
  return s + ")";
}

std::string tree_code(const Graph& t) {
  const std::size_t n = t.order();
  if (n == 1) {
    return "()";
  }
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) {
      leaves.push_back(v);
    }
  }
  std::size_t left = n;
  while (left > 2) {
    std::vector<std::size_t> next;
    for (auto l : leaves) {
      --left;
      deg[l] = 0;
      for (auto u = t.neighbours(l).find_first(); u != VertexSet::npos;
           u = t.neighbours(l).find_next(u)) {
        if (deg[u] > 0 && --deg[u] == 1) {
          next.push_back(u);
        }
      }
    }
    leaves = next;
  }
  std::string best;
  for (auto c : leaves) {
    auto code = rooted_code(t, c, n);
    if (best.empty() || code < best) {
      best = code;
    }
  }
  return best;
}

std::string forest_code(const Graph& f) {
  std::vector<std::string> codes;
  for (const auto& comp : connected_components(f)) {
    codes.push_back(tree_code(induced_subgraph(f, comp)));
  }
  std::sort(codes.begin(), codes.end());
  std::string s;
  for (auto& c : codes) {
    s += c + "|";
  }
  return s;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 6) {
    throw InvalidArgument("all_graphs: n must be in 0..6");
  }
  const auto ps = pairs(n);
  std::vector<int> perm(n);
  std::vector<std::vector<int>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::pair<int, int>, int> pair_index;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    pair_index[ps[k]] = static_cast<int>(k);
  }
  // perm_map[p][k] = index of the image of pair k under permutation p.
  std::vector<std::vector<int>> perm_map;
  for (const auto& p : perms) {
    std::vector<int> m(ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) {
      int a = p[ps[k].first], b = p[ps[k].second];
      m[k] = pair_index[{std::min(a, b), std::max(a, b)}];
    }
    perm_map.push_back(std::move(m));
  }
  std::vector<Graph> out;
  const Mask total = Mask{1} << ps.size();
  for (Mask m = 0; m < total; ++m) {
    bool canonical = true;
    for (const auto& pm : perm_map) {
      Mask image = 0;
      for (std::size_t k = 0; k < ps.size(); ++k) {
        if (m >> k & 1) {
          image |= Mask{1} << pm[k];
        }
      }
      if (image < m) {
        canonical = false;
        break;
      }
    }
    if (canonical) {
      out.push_back(from_mask(n, m));
    }
  }
  return out;
}

std::vector<Graph> all_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& g : all_graphs(k)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> all_trees(int n) {
  std::vector<Graph> level{discrete_graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& t : level) {
      for (std::size_t v = 0; v < t.order(); ++v) {
        Graph g = t;
        const auto leaf = g.add_vertex("v" + std::to_string(t.order()));
        g.add_edge(v, leaf);
        next.emplace(tree_code(g), std::move(g));
      }
    }
    level.clear();
    for (auto& [code, g] : next) {
      level.push_back(std::move(g));
    }
  }
  return level;
}

std::vector<Graph> all_forests_up_to(int n) {
  std::vector<Graph> trees;
  for (int k = 1; k <= n; ++k) {
    for (auto& t : all_trees(k)) {
      trees.push_back(std::move(t));
    }
  }
  std::map<std::string, Graph> forests;
  // Multisets of trees as non-decreasing index sequences.
  auto relabel = [](const Graph& g) {
    Graph out = discrete_graph(static_cast<int>(g.order()));
    for (const auto& [u, v] : g.edges()) {
      out.add_edge(u, v);
    }
    return out;
  };
  std::function<void(std::size_t, int, const Graph&)> extend =
      [&](std::size_t from, int room, const Graph& f) {
        for (std::size_t i = from; i < trees.size(); ++i) {
          const int size = static_cast<int>(trees[i].order());
          if (size > room) {
            continue;
          }
          Graph g = f.empty() ? trees[i] : relabel(disjoint_union(f, trees[i]));
          g = relabel(g);
          forests.emplace(forest_code(g), g);
          extend(i, room - size, g);
        }
      };
  extend(0, n, Graph{});
  std::vector<Graph> out;
  for (auto& [code, g] : forests) {
    out.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g = discrete_graph(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

Graph random_square_free_graph(std::mt19937_64& rng, int n) {
  auto ps = pairs(n);
  std::shuffle(ps.begin(), ps.end(), rng);
  std::bernoulli_distribution coin(0.7);
  Graph g = discrete_graph(n);
  const Graph c4 = cycle_graph(4);
  for (const auto& [i, j] : ps) {
    if (!coin(rng)) {
      continue;
    }
    Graph h = g;
    h.add_edge(i, j);
    if (!contains_induced(c4, h)) {
      g = std::move(h);
    }
  }
  return g;
}

Word random_word(std::mt19937_64& rng, const Graph& g, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<std::size_t> vertex(0, g.order() - 1);
  std::bernoulli_distribution sign(0.5);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& x : w) {
    x = {vertex(rng), sign(rng) ? 1 : -1};
  }
  return w;
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  VertexSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = coin(rng);
  }
  return s;
}

namespace {

std::set<Word> commutation_class(const Graph& g, const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i].vertex != cur[i + 1].vertex &&
          g.adjacent(cur[i].vertex, cur[i + 1].vertex)) {
        Word next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) {
          stack.push_back(std::move(next));
        }
      }
    }
  }
  return seen;
}

}  // namespace

Word oracle_normal_form(const Graph& g, Word w) {
  while (true) {
    const auto cls = commutation_class(g, w);
    bool cancelled = false;
    for (const auto& word : cls) {
      for (std::size_t i = 0; i + 1 < word.size() && !cancelled; ++i) {
        if (word[i] == word[i + 1].inverse()) {
          w = word;
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                  w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          cancelled = true;
        }
      }
      if (cancelled) {
        break;
      }
    }
    if (!cancelled) {
      return *cls.begin();
    }
  }
}

bool oracle_double_coset(const Graph& g, const Word& z, const VertexSet& a,
                         const VertexSet& b) {
  for (const auto& word : commutation_class(g, z)) {
    std::size_t k = 0;
    while (k < word.size() && a[word[k].vertex]) {
      ++k;
    }
    // Any split point up to k keeps the prefix inside a.
    for (std::size_t split = 0; split <= k; ++split) {
      bool ok = true;
      for (std::size_t i = split; i < word.size() && ok; ++i) {
        ok = b[word[i].vertex];
      }
      if (ok) {
        return true;
      }
    }
  }
  return false;
}

bool oracle_double_coset_bfs(const NormalForm& z, const VertexSet& a,
                             const VertexSet& b, std::size_t max_length) {
  const GraphPtr& g = z.graph_ptr();
  std::unordered_set<NormalForm> seen{z};
  std::vector<NormalForm> frontier{z};
  while (!frontier.empty()) {
    std::vector<NormalForm> next;
    for (const auto& x : frontier) {
      if (x.is_identity()) {
        return true;
      }
      for (std::size_t v = 0; v < g->order(); ++v) {
        for (int sign : {1, -1}) {
          const NormalForm letter = generator(g, v, sign);
          for (int side = 0; side < 2; ++side) {
            if (!(side == 0 ? a[v] : b[v])) {
              continue;
            }
            NormalForm y = side == 0 ? product(letter, x) : product(x, letter);
            if (y.length() <= max_length && seen.insert(y).second) {
              next.push_back(std::move(y));
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace raag::testing
