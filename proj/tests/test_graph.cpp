#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "orthodim/graph.hpp"

using namespace orthodim;

namespace {

// exhaustive minimum vertex cover for small graphs
int brute_min_cover(const Graph& g) {
  int n = g.n();
  auto edges = g.edges();
  int best = n;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool covers = true;
    for (auto [u, v] : edges)
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        covers = false;
        break;
      }
    if (covers) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(4);
  CHECK(g.n() == 4);
  CHECK(g.m() == 0);
  g.add_edge(2, 0);
  g.add_edge(0, 3);
  g.add_edge(0, 1);
  CHECK(g.m() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(1, 2));
  CHECK(!g.has_edge(1, 1));
  CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});  // sorted
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 1);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(g.neighbors(-1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("generators and complement") {
  CHECK(complete_graph(5).m() == 10);
  CHECK(cycle_graph(4).m() == 4);
  CHECK(path_graph(1).m() == 0);
  CHECK(path_graph(5).m() == 4);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK(complement(complete_graph(4)).m() == 0);
  for (const Graph& g : {cycle_graph(5), path_graph(4), complete_graph(3)})
    CHECK(complement(complement(g)) == g);
  // C_5 is self-complementary
  Graph c5 = cycle_graph(5);
  Graph cc = complement(c5);
  CHECK(cc.m() == 5);
  for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
}

TEST_CASE("induced subgraphs") {
  Graph g = cycle_graph(5);
  auto sub = induced_subgraph(g, {3, 0, 1});  // unsorted on purpose
  CHECK(sub.vertices == std::vector<int>{0, 1, 3});
  CHECK(sub.graph.n() == 3);
  CHECK(sub.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}});  // only 0-1 survives
  CHECK(sub.old_to_new[0] == 0);
  CHECK(sub.old_to_new[1] == 1);
  CHECK(sub.old_to_new[2] == -1);
  CHECK(sub.old_to_new[3] == 2);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {5}), std::invalid_argument);

  auto minus = graph_minus(g, {2, 4});
  CHECK(minus.vertices == std::vector<int>{0, 1, 3});
  CHECK(minus.graph == sub.graph);
  // removing nothing is the identity (with identity maps)
  auto all = graph_minus(g, {});
  CHECK(all.graph == g);
  std::vector<int> id(5);
  std::iota(id.begin(), id.end(), 0);
  CHECK(all.vertices == id);
}

TEST_CASE("vertex set predicates") {
  Graph g = complete_graph(4);
  CHECK(is_clique(g, {0, 1, 2, 3}));
  CHECK(is_clique(g, {}));
  CHECK(is_independent_set(g, {2}));
  CHECK(!is_independent_set(g, {0, 1}));
  Graph c4 = cycle_graph(4);
  CHECK(is_independent_set(c4, {0, 2}));
  CHECK(!is_clique(c4, {0, 2}));
  CHECK(is_vertex_cover(c4, {0, 2}));
  CHECK(!is_vertex_cover(c4, {0, 1}));  // misses 2-3
  CHECK(is_vertex_cover(Graph(3), {}));
  CHECK_THROWS_AS(is_vertex_cover(c4, {7}), std::invalid_argument);
}

TEST_CASE("connected components") {
  Graph g(6);
  g.add_edge(0, 2);
  g.add_edge(2, 4);
  g.add_edge(1, 5);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 2, 4});
  CHECK(comps[1] == std::vector<int>{1, 5});
  CHECK(comps[2] == std::vector<int>{3});
  CHECK(connected_components(Graph(0)).empty());
}

TEST_CASE("minimum vertex cover") {
  auto star = [] {
    Graph g(5);
    for (int i = 1; i < 5; ++i) g.add_edge(0, i);
    return g;
  }();
  for (auto [g, want] : {std::pair{path_graph(4), 2},
                         {cycle_graph(5), 3},
                         {complete_graph(5), 4},
                         {star, 1},
                         {Graph(4), 0}}) {
    auto cover = min_vertex_cover(g, g.n());
    REQUIRE(cover.has_value());
    CHECK((int)cover->size() == want);
    CHECK(is_vertex_cover(g, *cover));
    CHECK(std::is_sorted(cover->begin(), cover->end()));
    if (want > 0) CHECK(!min_vertex_cover(g, want - 1).has_value());
  }

  // randomized cross-check against the exhaustive oracle
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 4;
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        if ((s >> 33) % 100 < 55) g.add_edge(u, v);
      }
    auto cover = min_vertex_cover(g, n);
    REQUIRE(cover.has_value());
    CHECK((int)cover->size() == brute_min_cover(g));
  }
}

TEST_CASE("family recognition") {
  FamilyWitness w;

  CHECK(recognize_family(Graph(3), FamilyTag::Empty));
  CHECK(!recognize_family(path_graph(2), FamilyTag::Empty));

  CHECK(recognize_family(path_graph(4), FamilyTag::Path, &w));
  REQUIRE(w.path_order.size() == 4);
  for (std::size_t i = 0; i + 1 < w.path_order.size(); ++i)
    CHECK(path_graph(4).has_edge(w.path_order[i], w.path_order[i + 1]));
  CHECK(recognize_family(Graph(1), FamilyTag::Path));
  CHECK(!recognize_family(cycle_graph(5), FamilyTag::Path));
  CHECK(!recognize_family(disjoint_union(path_graph(2), path_graph(2)), FamilyTag::Path));

  // split: K_3 plus a pendant independent pair
  Graph sp(5);
  sp.add_edge(0, 1);
  sp.add_edge(0, 2);
  sp.add_edge(1, 2);
  sp.add_edge(0, 3);
  sp.add_edge(1, 4);
  CHECK(recognize_family(sp, FamilyTag::Split, &w));
  CHECK(is_clique(sp, w.clique));
  CHECK(is_independent_set(sp, w.independent));
  CHECK(w.clique.size() + w.independent.size() == 5);
  CHECK(!recognize_family(cycle_graph(4), FamilyTag::Split));  // C_4 is not split
  CHECK(!recognize_family(cycle_graph(5), FamilyTag::Split));
  CHECK(recognize_family(complete_graph(4), FamilyTag::Split));
  CHECK(recognize_family(Graph(3), FamilyTag::Split));

  // cochordal: complement chordal. C_4's complement is 2K_2 (chordal).
  CHECK(recognize_family(cycle_graph(4), FamilyTag::Cochordal, &w));
  CHECK(w.elimination_order.size() == 4);
  CHECK(!recognize_family(cycle_graph(5), FamilyTag::Cochordal));  // self-complementary
  CHECK(recognize_family(complete_graph(5), FamilyTag::Cochordal));
  CHECK(!recognize_family(cycle_graph(6), FamilyTag::Cochordal));  // complement has C_4

  // union variants accept per-component membership
  Graph two_cliques = disjoint_union(complete_graph(3), complete_graph(4));
  CHECK(recognize_family(two_cliques, FamilyTag::UnionSplit));
  CHECK(recognize_family(two_cliques, FamilyTag::UnionCochordal));
  CHECK(recognize_family(disjoint_union(cycle_graph(4), complete_graph(2)), FamilyTag::UnionCochordal));
  CHECK(!recognize_family(disjoint_union(cycle_graph(5), complete_graph(2)), FamilyTag::UnionSplit));
  // connected split graph is also a union-split graph
  CHECK(recognize_family(sp, FamilyTag::UnionSplit));
}

TEST_CASE("family names") {
  for (FamilyTag t : {FamilyTag::Empty, FamilyTag::Path, FamilyTag::Split, FamilyTag::Cochordal,
                      FamilyTag::UnionSplit, FamilyTag::UnionCochordal}) {
    auto back = parse_family(family_name(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK(!parse_family("circus").has_value());
}

TEST_CASE("chordality") {
  std::vector<int> peo;
  CHECK(is_chordal(complete_graph(4), &peo));
  CHECK(peo.size() == 4);
  CHECK(is_chordal(path_graph(6)));
  CHECK(is_chordal(Graph(3)));
  CHECK(!is_chordal(cycle_graph(4)));
  CHECK(!is_chordal(cycle_graph(5)));
  // chordal + added chord
  Graph g = cycle_graph(4);
  g.add_edge(0, 2);
  CHECK(is_chordal(g));

  // PEO property: later neighbors of each vertex form a clique
  Graph tree(6);
  tree.add_edge(0, 1);
  tree.add_edge(0, 2);
  tree.add_edge(1, 3);
  tree.add_edge(1, 4);
  tree.add_edge(2, 5);
  REQUIRE(is_chordal(tree, &peo));
  std::vector<int> pos(6);
  for (int i = 0; i < 6; ++i) pos[peo[i]] = i;
  for (int i = 0; i < 6; ++i) {
    std::vector<int> later;
    for (int w : tree.neighbors(peo[i]))
      if (pos[w] > i) later.push_back(w);
    CHECK(is_clique(tree, later));
  }
}

TEST_CASE("cosimplicial vertices") {
  // in K_n every vertex qualifies (no non-neighbors)
  CHECK(find_cosimplicial_vertex(complete_graph(3)) == 0);
  // C_4: non-neighbors of 0 = {2}, trivially independent
  CHECK(find_cosimplicial_vertex(cycle_graph(4)) == 0);
  // C_5: non-neighbors of v are two adjacent vertices, never independent
  CHECK(!find_cosimplicial_vertex(cycle_graph(5)).has_value());
  // P_4 = 0-1-2-3: non-neighbors of 1 = {3} alone
  CHECK(find_cosimplicial_vertex(path_graph(4)) == 1);
}

TEST_CASE("modulator checking") {
  Graph g = cycle_graph(5);
  CHECK(check_modulator({g, {0}, FamilyTag::Path}));          // C_5 minus a vertex = P_4
  CHECK(check_modulator({g, {0, 1}, FamilyTag::Path}));
  CHECK(!check_modulator({g, {}, FamilyTag::Path}));          // a cycle is not a path
  CHECK(check_modulator({g, {1, 0}, FamilyTag::Path}));       // order-insensitive
  CHECK(!check_modulator({g, {0, 0}, FamilyTag::Path}));      // duplicates rejected
  CHECK(!check_modulator({g, {9}, FamilyTag::Path}));         // out of range rejected
  CHECK(check_modulator({g, {0, 1, 2, 3, 4}, FamilyTag::Empty}));
  CHECK(check_modulator({complete_graph(4), {}, FamilyTag::Split}));
}
