#include "raag/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "raag/errors.hpp"

namespace raag {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::optional<Graph> g;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) {
      continue;
    }
    if (!g) {
      constexpr std::string_view header = "vertices:";
      if (view.substr(0, header.size()) != header) {
        throw InvalidArgument("edge list must start with 'vertices:'");
      }
      g.emplace(split_ws(view.substr(header.size())));
      continue;
    }
    const auto tokens = split_ws(view);
    if (tokens.size() != 2) {
      throw InvalidArgument("line " + std::to_string(line_no) +
                            ": expected two vertex labels");
    }
    g->add_edge(tokens[0], tokens[1]);
  }
  if (!g) {
    throw InvalidArgument("empty graph description");
  }
  return *std::move(g);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "vertices:";
  for (const auto& l : g.labels()) {
    out << ' ' << l;
  }
  out << '\n';
  for (auto [u, v] : g.edges()) {
    out << g.label(u) << ' ' << g.label(v) << '\n';
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_dot(std::ostream& out, const Graph& g, std::string_view name) {
  out << "graph " << dot_quote(std::string(name)) << " {\n";
  for (const auto& l : g.labels()) {
    out << "  " << dot_quote(l) << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << dot_quote(g.label(u)) << " -- " << dot_quote(g.label(v))
        << ";\n";
  }
  out << "}\n";
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  write_dot(out, g, name);
  return out.str();
}

Graph parse_graph_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("graph spec needs the form kind:params");
  }
  const std::string kind(trim(spec.substr(0, colon)));
  const std::string_view rest = spec.substr(colon + 1);
  if (kind == "mycielskian") {
    return mycielskian(parse_graph_spec(rest));
  }
  if (kind == "complement") {
    return complement(parse_graph_spec(rest));
  }
  std::vector<int> params;
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const auto piece = rest.substr(
        start, comma == std::string_view::npos ? rest.size() - start
                                               : comma - start);
    params.push_back(parse_int(piece));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  GraphKind k;
  if (kind == "path") {
    k = GraphKind::path;
  } else if (kind == "cycle") {
    k = GraphKind::cycle;
  } else if (kind == "complete") {
    k = GraphKind::complete;
  } else if (kind == "complete_bipartite" || kind == "kbip") {
    k = GraphKind::complete_bipartite;
  } else if (kind == "discrete") {
    k = GraphKind::discrete;
  } else {
    throw InvalidArgument("unknown graph kind: " + kind);
  }
  return standard_graph(k, params);
}

Graph load_graph(const std::string& arg) {
  std::ifstream file(arg);
  if (file) {
    return read_edge_list(file);
  }
  if (arg.find(':') != std::string::npos) {
    return parse_graph_spec(arg);
  }
  throw InvalidArgument("cannot open graph file: " + arg);
}

}  // namespace raag
