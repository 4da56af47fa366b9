#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "raag/embed.hpp"
#include "raag/extension.hpp"
#include "raag/graph.hpp"
#include "raag/graph_algorithms.hpp"
#include "raag/graph_io.hpp"
#include "raag/serialize.hpp"
#include "raag/words.hpp"

namespace {

using namespace raag;

enum Exit { ok = 0, no = 1, unknown = 2, budget = 3, usage = 4 };

struct Options {
  std::string graph;
  std::string source;
  std::string target;
  std::string word;
  std::string op;
  std::string file;
  std::string dot;
  std::vector<std::string> doubling;
  int radius = -1;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  bool json = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidArgument("cannot write " + path);
  }
  out << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot open " + path);
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int graph_classify(const Options& o) {
  const Graph g = load_graph(o.graph);
  const auto r = classify(g);
  std::ostringstream s;
  s << "vertices " << g.order() << ", edges " << g.size() << '\n'
    << "triangle-free " << yes_no(r.triangle_free) << '\n'
    << "square-free " << yes_no(r.square_free) << '\n'
    << "forest " << yes_no(r.forest) << '\n'
    << "bipartite " << yes_no(r.bipartite) << '\n'
    << "complete " << yes_no(r.complete) << '\n'
    << "cograph " << yes_no(r.cograph) << '\n'
    << "weakly chordal " << yes_no(r.weakly_chordal) << '\n'
    << "clique number " << r.clique_number << '\n'
    << "chromatic number " << r.chromatic_number << '\n'
    << "join factors " << r.join_factors.size() << '\n';
  if (r.complete_bipartite_params) {
    s << "complete bipartite K_{" << r.complete_bipartite_params->first << ","
      << r.complete_bipartite_params->second << "}\n";
  }
  emit(o, to_json(r), s.str());
  return ok;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

int graph_transform(const Options& o) {
  const Graph g = load_graph(o.graph);
  const auto colon = o.op.find(':');
  const std::string name = o.op.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? std::string{} : o.op.substr(colon + 1);
  Graph out;
  if (name == "complement") {
    out = complement(g);
  } else if (name == "mycielskian") {
    out = mycielskian(g);
  } else if (name == "clique-graph") {
    out = clique_graph(g);
  } else if (name == "double") {
    out = double_along_star(g, arg);
  } else if (name == "cocontract") {
    out = cocontract(g, split_commas(arg));
  } else if (name == "contract") {
    VertexSet b(g.order());
    for (const auto& l : split_commas(arg)) {
      b[g.index(l)] = true;
    }
    out = contract(g, b);
  } else if (name == "join") {
    out = join(g, load_graph(arg));
  } else if (name == "union") {
    out = disjoint_union(g, load_graph(arg));
  } else {
    throw InvalidArgument("unknown transform '" + name + "'");
  }
  if (!o.dot.empty()) {
    write_file(o.dot, to_dot(out));
  }
  emit(o, to_json(out), to_edge_list(out));
  return ok;
}

int word_command(const std::string& which, const Options& o) {
  const GraphPtr g = share(load_graph(o.graph));
  const NormalForm w = parse_element(g, o.word);
  if (which == "normalize") {
    const std::string s = to_string(w);
    emit(o, Json{{"normal_form", s}, {"length", w.length()}},
         (s.empty() ? "1" : s) + "\n");
    return ok;
  }
  if (which == "pure-factors") {
    if (w.is_identity()) {
      throw InvalidArgument("the identity has no pure factors");
    }
    const auto d = pure_factor_decomposition(w);
    std::ostringstream s;
    s << "conjugator " << (d.conjugator.is_identity() ? "1" : to_string(d.conjugator))
      << '\n';
    for (const auto& f : d.factors) {
      s << "factor " << to_string(f.factor) << " ^" << f.exponent << '\n';
    }
    emit(o, to_json(d), s.str());
    return ok;
  }
  const auto gens = centralizer_generators(w);
  Json j = Json::array();
  std::ostringstream s;
  for (const auto& c : gens) {
    const std::string t = c.is_identity() ? "1" : to_string(c);
    j.push_back(t);
    s << t << '\n';
  }
  emit(o, Json{{"centralizer_generators", j}}, s.str());
  return ok;
}

ExtGraphApprox grow_from(const Options& o) {
  const GraphPtr g = share(load_graph(o.graph));
  const std::size_t cap = o.budget ? o.budget : 2000;
  if (!o.doubling.empty()) {
    return grow(g, GrowStrategy::by_doubling(o.doubling), cap);
  }
  return grow(g, GrowStrategy::by_radius(o.radius < 0 ? 1 : o.radius), cap);
}

int ext_grow(const Options& o) {
  const ExtGraphApprox a = grow_from(o);
  if (!o.dot.empty()) {
    write_file(o.dot, to_dot(a.graph(), "extension"));
  }
  std::ostringstream s;
  s << "vertices " << a.order() << ", edges " << a.graph().size() << '\n';
  for (const auto& l : a.graph().labels()) {
    s << l << '\n';
  }
  emit(o, to_json(a), s.str());
  return ok;
}

int ext_diagnose(const Options& o) {
  const ExtGraphApprox a =
      o.file.empty() ? grow_from(o) : approximation_from_json(read_json(o.file));
  const auto r = diagnostics(a);
  std::ostringstream s;
  s << "vertices " << a.order() << ", edges " << a.graph().size() << '\n'
    << "distance to base copy:";
  for (const auto& [d, c] : r.distance_histogram) {
    s << ' ' << d << ':' << c;
  }
  std::size_t separated = 0;
  for (const auto& sep : r.star_separation_checks) {
    separated += sep.separator ? 1 : 0;
  }
  s << "\nstar separation " << separated << '/'
    << r.star_separation_checks.size() << " pairs separated\n"
    << "thin bigon violations " << r.thin_bigon_violations.size() << " of "
    << r.bigon_pairs_checked << " pairs\n"
    << "chromatic number " << r.chromatic_number << '\n';
  emit(o, to_json(r, a), s.str());
  return ok;
}

int embed_command(const Options& o) {
  const Graph lambda = load_graph(o.source);
  const Graph gamma = load_graph(o.target);
  Budget b;
  if (o.budget) {
    b.search.max_vertices = o.budget;
  }
  if (o.radius >= 0) {
    b.search.max_radius = o.radius;
  }
  const Verdict v = decide(lambda, gamma, b);
  std::ostringstream s;
  if (v.yes()) {
    const auto& c = v.certificate();
    s << "yes (" << c.note << ")\n";
    for (std::size_t i = 0; i < c.assignment.size(); ++i) {
      s << c.source.label(i) << " -> " << ext_label(c.assignment[i]) << '\n';
    }
  } else if (v.no()) {
    s << "no (" << to_string(v.obstruction().kind) << ")\n"
      << v.obstruction().detail << '\n';
  } else {
    const auto& r = v.report();
    s << "unknown\n";
    for (const auto& st : r.strategies) {
      s << "tried " << st << '\n';
    }
    s << "radius reached " << r.radius_reached << ", largest approximation "
      << r.largest_approximation << (r.budget_hit ? ", budget hit" : "")
      << '\n';
  }
  if (!o.dot.empty() && v.yes()) {
    const auto& c = v.certificate();
    Graph image;
    for (const auto& u : c.assignment) {
      image.add_vertex(ext_label(u));
    }
    for (const auto& [i, j] : c.source.edges()) {
      image.add_edge(i, j);
    }
    write_file(o.dot, to_dot(image, "certificate"));
  }
  emit(o, to_json(v), s.str());
  return v.yes() ? ok : v.no() ? no : unknown;
}

int verify_command(const Options& o) {
  Json j = read_json(o.file);
  if (j.contains("certificate")) {
    j = j.at("certificate");
  }
  bool good = false;
  std::string what;
  if (j.contains("assignment")) {
    good = verify_certificate(certificate_from_json(j));
    what = "certificate";
  } else if (j.contains("base_graph")) {
    const ExtGraphApprox a = approximation_from_json(j);
    auto recomputed = a.graph().edges();
    for (auto& [u, v] : recomputed) {
      if (u > v) {
        std::swap(u, v);
      }
    }
    std::sort(recomputed.begin(), recomputed.end());
    good = recomputed == stored_edges(j);
    what = "approximation";
  } else {
    throw InvalidArgument("not a certificate or approximation JSON");
  }
  emit(o, Json{{"kind", what}, {"valid", good}},
       what + (good ? " valid\n" : " invalid\n"));
  return good ? ok : no;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"raagctl: embeddings between right-angled Artin groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "JSON on stdout");
    c->add_option("--seed", o.seed, "Seed (all searches are deterministic)");
  };

  auto* graph = app.add_subcommand("graph", "Graph recognizers and transforms");
  graph->require_subcommand(1);
  auto* classify_cmd = graph->add_subcommand("classify", "Class report");
  classify_cmd->add_option("--graph,graph", o.graph, "File or builder")->required();
  add_common(classify_cmd);
  auto* transform_cmd = graph->add_subcommand("transform", "Apply a transform");
  transform_cmd->add_option("--graph", o.graph, "File or builder")->required();
  transform_cmd
      ->add_option("--op", o.op,
                   "complement | mycielskian | clique-graph | double:t | "
                   "cocontract:a,b | contract:a,b | join:G | union:G")
      ->required();
  transform_cmd->add_option("--dot", o.dot, "Write DOT here");
  add_common(transform_cmd);

  auto* word = app.add_subcommand("word", "Word algebra");
  word->require_subcommand(1);
  std::string word_op;
  for (const char* name : {"normalize", "pure-factors", "centralizer"}) {
    auto* c = word->add_subcommand(name);
    c->add_option("--graph", o.graph, "File or builder")->required();
    c->add_option("word", o.word, "Word, e.g. \"b a b^-1\"")->required();
    add_common(c);
    c->callback([&word_op, name] { word_op = name; });
  }

  auto* ext = app.add_subcommand("ext", "Extension graph approximations");
  ext->require_subcommand(1);
  auto* grow_cmd = ext->add_subcommand("grow", "Grow an approximation");
  auto* diagnose_cmd = ext->add_subcommand("diagnose", "Diagnostics");
  for (auto* c : {grow_cmd, diagnose_cmd}) {
    c->add_option("--graph", o.graph, "File or builder");
    c->add_option("--radius", o.radius, "Radius");
    c->add_option("--doubling", o.doubling, "Chosen labels")->delimiter(',');
    c->add_option("--budget", o.budget, "Vertex cap");
    c->add_option("--dot", o.dot, "Write DOT here");
    add_common(c);
  }
  grow_cmd->get_option("--graph")->required();
  diagnose_cmd->add_option("--approx", o.file, "Approximation JSON");

  auto* embed = app.add_subcommand("embed", "Decide A(source) <= A(target)");
  embed->add_option("--source", o.source, "File or builder")->required();
  embed->add_option("--target", o.target, "File or builder")->required();
  embed->add_option("--budget", o.budget, "Vertex cap for the search");
  embed->add_option("--radius", o.radius, "Largest search radius");
  embed->add_option("--dot", o.dot, "Write the certificate as DOT");
  add_common(embed);

  auto* verify = app.add_subcommand("verify", "Check a certificate or approximation");
  verify->add_option("file", o.file, "JSON file")->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (classify_cmd->parsed()) {
      return graph_classify(o);
    }
    if (transform_cmd->parsed()) {
      return graph_transform(o);
    }
    if (word->parsed()) {
      return word_command(word_op, o);
    }
    if (grow_cmd->parsed()) {
      return ext_grow(o);
    }
    if (diagnose_cmd->parsed()) {
      if (o.graph.empty() && o.file.empty()) {
        throw InvalidArgument("diagnose needs --graph or --approx");
      }
      return ext_diagnose(o);
    }
    if (embed->parsed()) {
      return embed_command(o);
    }
    return verify_command(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return budget;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
