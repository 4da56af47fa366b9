#include "raag/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "raag/errors.hpp"
#include "raag/graph_algorithms.hpp"

namespace raag {

GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

namespace {

// Free reduction with commutation: x cancels against an earlier x^-1 when
// everything in between commutes with x.
Word reduce(const Graph& g, std::span<const Letter> word) {
  Word out;
  out.reserve(word.size());
  for (const Letter& x : word) {
    if (x.vertex >= g.order() || (x.sign != 1 && x.sign != -1)) {
      throw InvalidArgument("letter outside the graph");
    }
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      const Letter& y = out[j];
      if (y.vertex == x.vertex) {
        if (y.sign == -x.sign) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!g.adjacent(y.vertex, x.vertex)) {
        break;
      }
    }
    if (!cancelled) {
      out.push_back(x);
    }
  }
  return out;
}

// Lex-least linearization: repeatedly take the least letter that can be
// moved to the front.
Word lex_least(const Graph& g, Word w) {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    VertexSet allowed = g.full_set();
    std::size_t best = 0;
    bool have = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (allowed[w[i].vertex] && (!have || w[i] < w[best])) {
        best = i;
        have = true;
      }
      allowed &= g.neighbours(w[i].vertex);
      if (allowed.none()) {
        break;
      }
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

// Positions of letters that can be moved to the front of w.
std::vector<std::size_t> initial_positions(const Graph& g, const Word& w) {
  std::vector<std::size_t> out;
  VertexSet allowed = g.full_set();
  for (std::size_t i = 0; i < w.size() && allowed.any(); ++i) {
    if (allowed[w[i].vertex]) {
      out.push_back(i);
    }
    allowed &= g.neighbours(w[i].vertex);
  }
  return out;
}

std::vector<std::size_t> terminal_positions(const Graph& g, const Word& w) {
  std::vector<std::size_t> out;
  VertexSet allowed = g.full_set();
  for (std::size_t i = w.size(); i-- > 0 && allowed.any();) {
    if (allowed[w[i].vertex]) {
      out.push_back(i);
    }
    allowed &= g.neighbours(w[i].vertex);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

}  // namespace

NormalForm::NormalForm(GraphPtr graph) : graph_(std::move(graph)) {
  if (!graph_) {
    throw InvalidArgument("null graph");
  }
}

NormalForm::NormalForm(GraphPtr graph, std::span<const Letter> word)
    : NormalForm(std::move(graph)) {
  letters_ = lex_least(*graph_, reduce(*graph_, word));
}

VertexSet NormalForm::support() const {
  VertexSet s(graph_->order());
  for (const auto& x : letters_) {
    s[x.vertex] = true;
  }
  return s;
}

bool same_graph(const Graph& a, const Graph& b) { return &a == &b || a == b; }

bool operator==(const NormalForm& a, const NormalForm& b) {
  return a.letters_ == b.letters_ && same_graph(*a.graph_, *b.graph_);
}

void require_same_graph(const NormalForm& a, const NormalForm& b) {
  if (!same_graph(a.graph(), b.graph())) {
    throw InvalidArgument("elements live over different graphs");
  }
}

NormalForm normalize(const GraphPtr& graph, std::span<const Letter> word) {
  return NormalForm(graph, word);
}

Word parse_word(const Graph& graph, std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (auto v = graph.find(tok)) {
      out.push_back({*v, 1});
      continue;
    }
    if (tok.size() > 1 && tok.back() == '\'') {
      if (auto v = graph.find(std::string_view(tok).substr(0, tok.size() - 1))) {
        out.push_back({*v, -1});
        continue;
      }
    }
    if (auto caret = tok.rfind('^'); caret != std::string::npos) {
      const auto v = graph.find(std::string_view(tok).substr(0, caret));
      int k = 0;
      const char* first = tok.data() + caret + 1;
      const char* last = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (v && ec == std::errc() && ptr == last && first != last) {
        for (int i = 0; i < std::abs(k); ++i) {
          out.push_back({*v, k > 0 ? 1 : -1});
        }
        continue;
      }
    }
    if (tok == "1") {
      continue;
    }
    throw InvalidArgument("unknown letter in word: " + tok);
  }
  return out;
}

NormalForm parse_element(const GraphPtr& graph, std::string_view text) {
  return NormalForm(graph, parse_word(*graph, text));
}

std::string word_to_string(const Graph& graph, std::span<const Letter> word) {
  std::string out;
  for (const auto& x : word) {
    if (!out.empty()) {
      out += ' ';
    }
    out += graph.label(x.vertex);
    if (x.sign < 0) {
      out += "^-1";
    }
  }
  return out;
}

std::string to_string(const NormalForm& g) {
  return word_to_string(g.graph(), g.letters());
}

NormalForm generator(const GraphPtr& graph, std::size_t v, int sign) {
  const Letter x{v, sign};
  return NormalForm(graph, std::span<const Letter>(&x, 1));
}

NormalForm inverse(const NormalForm& g) {
  return NormalForm(g.graph_ptr(), inverse_word(g.letters()));
}

NormalForm product(const NormalForm& a, const NormalForm& b) {
  require_same_graph(a, b);
  return NormalForm(a.graph_ptr(), concat(a.letters(), b.letters()));
}

NormalForm power(const NormalForm& g, int k) {
  const Word base = k >= 0 ? g.letters() : inverse_word(g.letters());
  Word w;
  for (int i = 0; i < std::abs(k); ++i) {
    w.insert(w.end(), base.begin(), base.end());
  }
  return NormalForm(g.graph_ptr(), w);
}

NormalForm conjugate(const NormalForm& g, const NormalForm& h) {
  require_same_graph(g, h);
  return NormalForm(g.graph_ptr(),
                    concat(concat(inverse_word(h.letters()), g.letters()),
                           h.letters()));
}

CyclicReduction cyclically_reduce(const NormalForm& g) {
  const Graph& gr = g.graph();
  Word core = g.letters();
  Word p;  // conjugator letters, g = p^{-1} core p
  while (true) {
    const auto init = initial_positions(gr, core);
    const auto term = terminal_positions(gr, core);
    std::size_t best_i = 0;
    std::size_t best_t = 0;
    bool found = false;
    for (auto i : init) {
      for (auto t : term) {
        if (i != t && core[t] == core[i].inverse() &&
            (!found || core[i] < core[best_i])) {
          best_i = i;
          best_t = t;
          found = true;
        }
      }
    }
    if (!found) {
      break;
    }
    const Letter y = core[best_i];
    core.erase(core.begin() + static_cast<std::ptrdiff_t>(best_t));
    core.erase(core.begin() + static_cast<std::ptrdiff_t>(best_i));
    p.insert(p.begin(), y.inverse());
  }
  return {NormalForm(g.graph_ptr(), p), NormalForm(g.graph_ptr(), core)};
}

bool is_cyclically_reduced(const NormalForm& g) {
  return cyclically_reduce(g).conjugator.is_identity();
}

HeadSplit max_head(const NormalForm& g, const VertexSet& s) {
  const Graph& gr = g.graph();
  Word head;
  Word rest;
  // Vertices commuting with every rest letter so far.
  VertexSet free = gr.full_set();
  for (const auto& x : g.letters()) {
    if (s[x.vertex] && free[x.vertex]) {
      head.push_back(x);
    } else {
      rest.push_back(x);
      free &= gr.neighbours(x.vertex);
    }
  }
  return {NormalForm(g.graph_ptr(), head), NormalForm(g.graph_ptr(), rest)};
}

bool double_coset_member(const NormalForm& z, const VertexSet& a,
                         const VertexSet& b) {
  const auto split = max_head(z, a);
  return split.rest.support().is_subset_of(b);
}

bool parabolic_member(const NormalForm& g, const VertexSet& s) {
  return g.support().is_subset_of(s);
}

std::pair<NormalForm, int> maximal_root(const NormalForm& g) {
  const Graph& gr = g.graph();
  if (g.is_identity()) {
    return {g, 1};
  }
  std::vector<int> count(gr.order(), 0);
  for (const auto& x : g.letters()) {
    ++count[x.vertex];
  }
  int common = 0;
  for (int c : count) {
    common = std::gcd(common, c);
  }
  for (int e = common; e > 1; --e) {
    if (common % e != 0) {
      continue;
    }
    // Letters of one vertex never commute, so a root must take the first
    // count/e occurrences of each vertex.
    std::vector<int> take(gr.order(), 0);
    for (std::size_t v = 0; v < gr.order(); ++v) {
      take[v] = count[v] / e;
    }
    Word root;
    for (const auto& x : g.letters()) {
      if (take[x.vertex] > 0) {
        --take[x.vertex];
        root.push_back(x);
      }
    }
    NormalForm r(g.graph_ptr(), root);
    if (power(r, e) == g) {
      return {r, e};
    }
  }
  return {g, 1};
}

PureFactorDecomposition pure_factor_decomposition(const NormalForm& g) {
  if (g.is_identity()) {
    throw InvalidArgument("pure factor decomposition of the identity");
  }
  const auto [p, core] = cyclically_reduce(g);
  const Graph& gr = g.graph();
  const Graph co = complement(gr);
  PureFactorDecomposition d{p, {}};
  for (const auto& comp : connected_components(co, core.support())) {
    Word part;
    for (const auto& x : core.letters()) {
      if (comp[x.vertex]) {
        part.push_back(x);
      }
    }
    auto [root, e] = maximal_root(NormalForm(g.graph_ptr(), part));
    d.factors.push_back({std::move(root), e});
  }
  std::sort(d.factors.begin(), d.factors.end(),
            [](const PureFactor& x, const PureFactor& y) {
              return x.factor.letters() < y.factor.letters();
            });
  return d;
}

NormalForm reassemble(const PureFactorDecomposition& d) {
  NormalForm acc(d.conjugator.graph_ptr());
  for (const auto& f : d.factors) {
    acc = product(acc, power(f.factor, f.exponent));
  }
  return conjugate(acc, d.conjugator);
}

std::vector<NormalForm> centralizer_generators(const NormalForm& g) {
  const auto d = pure_factor_decomposition(g);
  const Graph& gr = g.graph();
  std::vector<NormalForm> out;
  VertexSet u(gr.order());
  for (const auto& f : d.factors) {
    out.push_back(conjugate(f.factor, d.conjugator));
    u |= f.factor.support();
  }
  for (std::size_t v = 0; v < gr.order(); ++v) {
    if (u.is_subset_of(gr.neighbours(v))) {
      out.push_back(conjugate(generator(g.graph_ptr(), v), d.conjugator));
    }
  }
  return out;
}

bool commutes(const NormalForm& g, const NormalForm& h) {
  require_same_graph(g, h);
  return product(g, h) == product(h, g);
}

Graph commutation_graph(std::span<const NormalForm> words) {
  if (words.empty()) {
    throw InvalidArgument("commutation graph of an empty list");
  }
  Graph out;
  for (const auto& w : words) {
    require_same_graph(w, words.front());
    const std::string name = w.is_identity() ? "1" : to_string(w);
    out.add_vertex(fresh_label(out, name));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (commutes(words[i], words[j])) {
        out.add_edge(i, j);
      }
    }
  }
  return out;
}

}  // namespace raag

std::size_t std::hash<raag::NormalForm>::operator()(
    const raag::NormalForm& g) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& x : g.letters()) {
    const std::size_t code = x.vertex * 2 + (x.sign < 0 ? 1 : 0);
    h ^= code + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
