#include <doctest.h>

#include "raag/errors.hpp"
#include "raag/embed.hpp"
#include "raag/graph_algorithms.hpp"
#include "support.hpp"

using namespace raag;

namespace {

Graph p4_abcd() { return p4_target(); }

Budget small_budget() {
  Budget b;
  b.search.max_radius = 1;
  b.search.max_vertices = 300;
  b.search.nodes.max_nodes = 200'000;
  return b;
}

}  // namespace

TEST_CASE("decide examples") {
  auto v = decide(cycle_graph(6), cycle_graph(5));
  REQUIRE(v.yes());
  CHECK(verify_certificate(v.certificate()));
  v = decide(cycle_graph(7), cycle_graph(6));
  REQUIRE(v.no());
  CHECK(v.obstruction().kind == ObstructionKind::cycle_arithmetic);
  v = decide(path_graph(4), cycle_graph(4));
  REQUIRE(v.no());
  CHECK(v.obstruction().kind == ObstructionKind::p4_theorem);
  v = decide(complete_bipartite_graph(3, 3), cycle_graph(4));
  REQUIRE(v.yes());
  CHECK(verify_certificate(v.certificate()));
  v = decide(complete_graph(3), cycle_graph(5));
  REQUIRE(v.no());
  CHECK(v.obstruction().kind == ObstructionKind::clique_rank);
  CHECK_THROWS_AS(decide(Graph{}, cycle_graph(5)), InvalidArgument);
  Budget bad;
  bad.search.max_vertices = 0;
  CHECK_THROWS_AS(decide(path_graph(2), path_graph(3), bad), InvalidArgument);
}

TEST_CASE("obstruction_scan examples") {
  auto o = obstruction_scan(cycle_graph(4), cycle_graph(5));
  REQUIRE(o);
  CHECK(o->kind == ObstructionKind::kambites_square);
  CHECK(recheck(*o));
  o = obstruction_scan(mycielskian(cycle_graph(5)), cycle_graph(5));
  REQUIRE(o);
  CHECK(o->kind == ObstructionKind::chromatic_triangle_free);
  CHECK(recheck(*o));
  CHECK_FALSE(obstruction_scan(path_graph(3), complete_graph(3)));
  const auto v = decide(path_graph(3), complete_graph(3));
  REQUIRE(v.no());
  CHECK(v.obstruction().kind == ObstructionKind::abelian_target);
}

TEST_CASE("each obstruction kind is produced and rechecks") {
  struct Case {
    Graph lambda;
    Graph gamma;
    ObstructionKind kind;
  };
  const std::vector<Case> cases{
      {complete_graph(3), path_graph(4), ObstructionKind::clique_rank},
      {cycle_graph(4), cycle_graph(5), ObstructionKind::kambites_square},
      {path_graph(4), complete_bipartite_graph(2, 3), ObstructionKind::p4_theorem},
      {cycle_graph(5), path_graph(4), ObstructionKind::bipartite_target},
      {cycle_graph(6), path_graph(4), ObstructionKind::forest_target},
      {cycle_graph(7), cycle_graph(6), ObstructionKind::cycle_arithmetic},
      {mycielskian(cycle_graph(5)), cycle_graph(5),
       ObstructionKind::chromatic_triangle_free},
      {disjoint_union(path_graph(2), path_graph(1)), complete_bipartite_graph(2, 2),
       ObstructionKind::edge_plus_point},
      {discrete_graph(2), complete_graph(2),
       ObstructionKind::complete_bipartite_class},
      {complete_bipartite_graph(2, 2), complete_bipartite_graph(1, 3),
       ObstructionKind::kambites_square},
  };
  for (const auto& c : cases) {
    const auto o = obstruction_scan(c.lambda, c.gamma);
    REQUIRE(o);
    CHECK(to_string(o->kind) == to_string(c.kind));
    CHECK(recheck(*o));
    CHECK(obstruction_kind_from_string(to_string(o->kind)) == o->kind);
  }
  Graph hexagon_with_tail = cycle_graph(6);
  const auto tail = hexagon_with_tail.add_vertex("t");
  hexagon_with_tail.add_edge(0, tail);
  const auto o = obstruction_scan(cycle_graph(5), hexagon_with_tail);
  REQUIRE(o);
  CHECK(o->kind == ObstructionKind::bipartite_target);
  const auto tf = obstruction_scan(cycle_graph(7), cycle_graph(9));
  REQUIRE(tf);
  CHECK(tf->kind == ObstructionKind::cycle_arithmetic);
  Graph heptagon_with_tail = cycle_graph(7);
  const auto t7 = heptagon_with_tail.add_vertex("t");
  heptagon_with_tail.add_edge(0, t7);
  const auto tfc = obstruction_scan(cycle_graph(5), heptagon_with_tail);
  REQUIRE(tfc);
  CHECK(tfc->kind == ObstructionKind::triangle_free_cycle);
  CHECK(recheck(*tfc));
}

TEST_CASE("join reduction") {
  const Graph gamma = join(cycle_graph(5), complete_graph(1));
  auto v = decide(cycle_graph(6), gamma);
  REQUIRE(v.yes());
  CHECK(verify_certificate(v.certificate()));
  v = decide(cycle_graph(5), join(path_graph(4), complete_graph(1)));
  REQUIRE(v.no());
  CHECK(v.obstruction().kind == ObstructionKind::join_reduction);
  CHECK(v.obstruction().parts.size() == 2);
  CHECK(recheck(v.obstruction()));
}

TEST_CASE("verify_certificate") {
  auto v = decide(cycle_graph(6), cycle_graph(5));
  REQUIRE(v.yes());
  EmbeddingCertificate cert = v.certificate();
  CHECK(verify_certificate(cert));
  const GraphPtr target = cert.target;
  // Swap one image for a conjugate that breaks an adjacency.
  EmbeddingCertificate tampered = cert;
  const auto& u = tampered.assignment[0];
  std::size_t other = 0;
  while (other < target->order() &&
         (target->adjacent(other, u.base) || other == u.base)) {
    ++other;
  }
  tampered.assignment[0] =
      act(u, product(generator(target, other), generator(target, other)));
  CHECK_FALSE(verify_certificate(tampered));
  EmbeddingCertificate duplicate = cert;
  duplicate.assignment[1] = duplicate.assignment[0];
  CHECK_FALSE(verify_certificate(duplicate));
  const GraphPtr other_graph = share(cycle_graph(7));
  EmbeddingCertificate foreign = cert;
  foreign.assignment[0] = base_vertex(other_graph, 0);
  CHECK_THROWS_AS(verify_certificate(foreign), InvalidArgument);
  const GraphPtr c5 = share(cycle_graph(5));
  EmbeddingCertificate identity{path_graph(4), c5, {}, "subgraph"};
  for (std::size_t i = 0; i < 4; ++i) {
    identity.assignment.push_back(base_vertex(c5, i));
  }
  CHECK(verify_certificate(identity));
}

TEST_CASE("embed_forest_in_p4e") {
  auto cert = embed_forest_in_p4e(path_graph(2));
  CHECK(ext_label(cert.assignment[0]) == "b");
  CHECK(ext_label(cert.assignment[1]) == "c");
  cert = embed_forest_in_p4e(complete_bipartite_graph(1, 3));
  CHECK(verify_certificate(cert));
  cert = embed_forest_in_p4e(path_graph(5));
  CHECK(verify_certificate(cert));
  cert = embed_forest_in_p4e(discrete_graph(4));
  CHECK(verify_certificate(cert));
  CHECK_THROWS_AS(embed_forest_in_p4e(cycle_graph(3)), InvalidArgument);
}

TEST_CASE("cycle_in_cycle") {
  auto v = cycle_in_cycle(8, 6);
  REQUIRE(v.yes());
  CHECK(v.certificate().note == "cycle_cellulation");
  CHECK(verify_certificate(v.certificate()));
  CHECK(cycle_in_cycle(9, 6).no());
  v = cycle_in_cycle(7, 7);
  REQUIRE(v.yes());
  for (const auto& u : v.certificate().assignment) {
    CHECK(u.rep.is_identity());
  }
  CHECK(cycle_in_cycle(3, 5).obstruction().kind == ObstructionKind::clique_rank);
  CHECK(cycle_in_cycle(5, 3).obstruction().kind == ObstructionKind::abelian_target);
  CHECK_THROWS_AS(cycle_in_cycle(2, 5), InvalidArgument);
}

TEST_CASE("canonical certificates") {
  const GraphPtr p4 = share(p4_abcd());
  auto cert = canonical_certificate(CanonicalKind::star_double, p4, {"b"});
  CHECK(verify_certificate(cert));
  REQUIRE(cert.assignment.size() == 5);
  CHECK(ext_label(cert.assignment[4]) == "d^(b)");
  const GraphPtr c6c = share(complement(cycle_graph(6)));
  cert = canonical_certificate(CanonicalKind::cocontraction, c6c, {"v0", "v1"});
  CHECK(verify_certificate(cert));
  CHECK(isomorphic(cert.source, complement(cycle_graph(5))));
  cert = canonical_certificate(CanonicalKind::cocontraction, c6c, {"v2"});
  for (const auto& u : cert.assignment) {
    CHECK(u.rep.is_identity());
  }
  CHECK_THROWS_AS(canonical_certificate(CanonicalKind::star_double, p4, {"q"}),
                  InvalidArgument);
  CHECK_THROWS_AS(
      canonical_certificate(CanonicalKind::cocontraction, c6c, {"v0", "v2"}),
      InvalidArgument);
}

TEST_CASE("analyze_generator_map") {
  const GraphPtr p4 = share(p4_abcd());
  std::vector<NormalForm> ids;
  for (std::size_t v = 0; v < 4; ++v) {
    ids.push_back(generator(p4, v));
  }
  auto r = analyze_generator_map(*p4, p4, ids);
  CHECK(r.commutation.edges() == p4->edges());
  CHECK(r.clique_shape_ok);
  CHECK(r.respects_relations());
  for (const auto& g : r.generators) {
    CHECK(g.clique.size() == 1);
  }
  Graph c4({"a", "b", "c", "d"});
  c4.add_edge("a", "b");
  c4.add_edge("b", "c");
  c4.add_edge("c", "d");
  c4.add_edge("d", "a");
  const GraphPtr gc4 = share(c4);
  std::vector<NormalForm> imgs{parse_element(gc4, "a"), parse_element(gc4, "b"),
                               parse_element(gc4, "a^-1 c a"),
                               parse_element(gc4, "d")};
  r = analyze_generator_map(c4, gc4, imgs);
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t w = u + 1; w < 4; ++w) {
      const bool violated = commutes(imgs[u], imgs[w]) != c4.adjacent(u, w);
      bool reported = false;
      for (const auto& x : r.relation_violations) {
        reported = reported || (x.u == c4.label(u) && x.v == c4.label(w));
      }
      CHECK(violated == reported);
    }
  }
  std::vector<NormalForm> mixed{parse_element(p4, "a c"), generator(p4, 1),
                                generator(p4, 2), generator(p4, 3)};
  r = analyze_generator_map(*p4, p4, mixed);
  REQUIRE(r.generators[0].decomposition);
  CHECK(r.generators[0].decomposition->factors.size() == 1);
  CHECK(r.generators[0].clique.size() == 1);
  CHECK_THROWS_AS(analyze_generator_map(*p4, share(cycle_graph(4)), ids),
                  InvalidArgument);
}

TEST_CASE("monotonicity under induced subgraphs") {
  const std::vector<std::pair<Graph, Graph>> pairs{
      {cycle_graph(8), cycle_graph(6)},
      {cycle_graph(6), cycle_graph(5)},
      {complete_bipartite_graph(3, 3), cycle_graph(4)},
      {path_graph(7), path_graph(4)},
  };
  for (const auto& [lambda, gamma] : pairs) {
    const auto v = decide(lambda, gamma);
    REQUIRE(v.yes());
    const auto& cert = v.certificate();
    for (std::size_t drop = 0; drop < lambda.order(); ++drop) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < lambda.order(); ++i) {
        if (i != drop) {
          keep.push_back(i);
        }
      }
      EmbeddingCertificate sub{induced_subgraph(lambda, keep), cert.target, {},
                               cert.note};
      for (auto i : keep) {
        sub.assignment.push_back(cert.assignment[i]);
      }
      CHECK(verify_certificate(sub));
      CHECK_FALSE(decide(sub.source, gamma, small_budget()).no());
    }
  }
}

TEST_CASE("triangle-free targets: search certificates live in triangle-free approximations") {
  for (const auto& gamma : testing::all_graphs_up_to(5)) {
    if (!triangle_free(gamma) || gamma.order() < 3) {
      continue;
    }
    for (const auto& lambda : testing::all_graphs_up_to(4)) {
      const auto v = decide(lambda, gamma, small_budget());
      if (v.yes() && v.certificate().note == "search") {
        Graph image;
        const auto& a = v.certificate().assignment;
        for (const auto& u : a) {
          image.add_vertex(ext_label(u));
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
          for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (ext_adjacent(a[i], a[j])) {
              image.add_edge(i, j);
            }
          }
        }
        CHECK(triangle_free(image));
      }
    }
  }
}

TEST_CASE("soundness grid over all graphs with at most 5 vertices") {
  const auto graphs = testing::all_graphs_up_to(5);
  for (const auto& lambda : graphs) {
    for (const auto& gamma : graphs) {
      const auto v = decide(lambda, gamma, small_budget());
      const auto scan = obstruction_scan(lambda, gamma);
      if (v.yes()) {
        CHECK_FALSE(scan);
        CHECK(verify_certificate(v.certificate()));
      } else if (v.no()) {
        CHECK(recheck(v.obstruction()));
      }
      if (contains_induced(lambda, gamma)) {
        CHECK(v.yes());
      }
    }
  }
}
