#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "orthodim/kernels.hpp"
#include "orthodim/rng.hpp"

using namespace orthodim;

namespace {

// random graph with a planted vertex cover {0..k-1}
Graph cover_graph(std::mt19937_64& rng, int n, int k, int pct) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u < k && (int)(rng() % 100) < pct) g.add_edge(u, v);
  return g;
}

std::vector<int> iota_vec(int k) {
  std::vector<int> x(k);
  std::iota(x.begin(), x.end(), 0);
  return x;
}

}  // namespace

TEST_CASE("binomials agree with Pascal's triangle") {
  std::vector<std::vector<BigInt>> pascal(21);
  for (int n = 0; n <= 20; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  }
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("kernel size bounds") {
  CHECK(k_graph_bound(5, 1, 3) == 30);  // 5 + 5 + 10 + 10
  CHECK(k_graph_bound(5, 2, 3) == 25);
  CHECK(k_graph_bound(0, 1, 3) == 0);
  CHECK(k_graph_bound(3, 3, 3) == 4);   // 3 + C(3,3)
  CHECK(k_graph_bound(4, 2, 2) == 10);  // 4 + C(4,2)
}

TEST_CASE("subset graph construction, frozen") {
  // C_5 with X = {0,2,4}: outside 1 sees {0,2}, outside 3 sees {2,4}
  Graph c5 = cycle_graph(5);
  auto kg = build_k_graph(c5, {4, 0, 2}, 1, 3);  // unsorted input tolerated
  CHECK(kg.modulator_orig == std::vector<int>{0, 2, 4});
  CHECK(kg.modulator == std::vector<int>{0, 1, 2});
  REQUIRE(kg.subset_of.size() == 5);  // {0},{2},{4},{0,2},{2,4} as positions
  CHECK(kg.subset_of[0] == std::vector<int>{0});
  CHECK(kg.subset_of[1] == std::vector<int>{1});
  CHECK(kg.subset_of[2] == std::vector<int>{2});
  CHECK(kg.subset_of[3] == std::vector<int>{0, 1});
  CHECK(kg.subset_of[4] == std::vector<int>{1, 2});
  CHECK(kg.witness_of == std::vector<int>{1, 1, 3, 1, 3});  // smallest witness wins
  CHECK(kg.graph.n() == 8);
  // G[X] keeps only the 0-4 edge; each added vertex is adjacent exactly to
  // its subset
  CHECK(kg.graph.has_edge(0, 2));
  CHECK(!kg.graph.has_edge(0, 1));
  CHECK(kg.graph.neighbors(3) == std::vector<int>{0});
  CHECK(kg.graph.neighbors(6) == std::vector<int>{0, 1});
  CHECK(kg.graph.neighbors(7) == std::vector<int>{1, 2});
  for (int a = 3; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) CHECK(!kg.graph.has_edge(a, b));

  // m = 2 drops the singletons
  auto kg2 = build_k_graph(c5, {0, 2, 4}, 2, 3);
  CHECK(kg2.graph.n() == 5);
  CHECK(kg2.subset_of == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(build_k_graph(c5, {0, 1}, 1, 3), std::invalid_argument);  // not a cover
  CHECK_THROWS_AS(build_k_graph(c5, {0, 0, 2, 4}, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_k_graph(c5, {0, 2, 4}, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_k_graph(c5, {0, 2, 4}, 4, 3), std::invalid_argument);
}

TEST_CASE("general kernel report, frozen") {
  auto out = kernel_general(complete_graph(3), {0, 1}, 3);
  CHECK(out.kg.graph.n() == 5);
  CHECK(out.kg.graph.m() == 5);
  CHECK(out.report.n_in == 3);
  CHECK(out.report.m_in == 3);
  CHECK(out.report.k == 2);
  CHECK(out.report.n_out == 5);
  CHECK(out.report.m_out == 5);
  CHECK(out.report.bound == 5);
  CHECK(out.report.within_bound);
  CHECK(kernel_report_json(out.report) ==
        "{\"algorithm\":\"general\",\"n_in\":3,\"m_in\":3,\"k\":2,\"d\":3,"
        "\"n_out\":5,\"m_out\":5,\"bound\":5,\"within_bound\":true}");
}

TEST_CASE("general kernel preserves the decision") {
  auto rng = make_rng(3, 17);
  for (int trial = 0; trial < 40; ++trial) {
    int k = (int)(rng() % 4);
    int n = k + 1 + (int)(rng() % 4);
    Graph g = cover_graph(rng, n, k, 20 + (int)(rng() % 60));
    int d = 1 + (int)(rng() % 3);
    FieldSpec f = (trial % 2) ? FieldSpec::gf(3) : FieldSpec::gf(2);
    CHECK(verify_kernel_equivalence(g, iota_vec(k), d, f, KernelAlg::General) ==
          Equivalence::Equivalent);
    auto out = kernel_general(g, iota_vec(k), d);
    CHECK(BigInt(out.report.n_out) <= k_graph_bound(k, 1, d));
    CHECK(out.report.within_bound);
  }
}

TEST_CASE("rank-basis kernel, frozen") {
  auto out = kernel_real(complete_graph(4), {0, 1, 2}, 3);
  CHECK(out.phase1.graph.n() == 4);  // K_3 on X plus one subset vertex
  REQUIRE(out.polys.size() == 1);
  CHECK(out.polys[0].num_vars == 9);
  CHECK(out.polys[0].degree == 2);
  CHECK(out.polys[0].terms.size() == 6);
  CHECK(out.basis == std::vector<int>{0});
  CHECK(out.graph == complete_graph(4));
  CHECK(out.modulator == std::vector<int>{0, 1, 2});
  CHECK(out.subset_of == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(out.report.bound == 3 + binomial(9, 2));  // k + C(kd, d-1)
  CHECK(out.report.within_bound);
  CHECK_THROWS_AS(kernel_real(complete_graph(3), {0, 1}, 2), std::invalid_argument);
}

TEST_CASE("rank-basis kernel keeps a spanning set") {
  auto rng = make_rng(8, 21);
  for (int trial = 0; trial < 25; ++trial) {
    int k = 3 + (int)(rng() % 3);
    int n = k + 1 + (int)(rng() % 5);
    Graph g = cover_graph(rng, n, k, 40 + (int)(rng() % 50));
    auto out = kernel_real(g, iota_vec(k), 3);
    CHECK(BigInt(out.graph.n()) <= BigInt(k) + binomial(3 * k, 2));
    CHECK((int)out.basis.size() <= (int)out.polys.size());
    CHECK(std::is_sorted(out.basis.begin(), out.basis.end()));
    // every dropped polynomial is a combination of the kept ones
    std::vector<MultilinearPoly> kept;
    for (int b : out.basis) kept.push_back(out.polys[b]);
    int base_rank = poly_rank(kept);
    CHECK(base_rank == (int)kept.size());
    for (int i = 0; i < (int)out.polys.size(); ++i) {
      if (std::binary_search(out.basis.begin(), out.basis.end(), i)) continue;
      auto probe = kept;
      probe.push_back(out.polys[i]);
      CHECK(poly_rank(probe) == base_rank);
    }
    // kept subset vertices stay adjacent exactly to their subsets
    int k_new = (int)out.modulator.size();
    for (int a = 0; a < (int)out.subset_of.size(); ++a)
      CHECK(out.graph.neighbors(k_new + a) == out.subset_of[a]);
  }
}

TEST_CASE("marking kernel") {
  // star K_{1,3} with the center as modulator: one vertex survives per
  // neighborhood pattern
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  auto out = kernel_hereditary(star, {0}, 1, FamilyTag::Empty, 1);
  CHECK(out.kept_orig == std::vector<int>{0, 1});
  CHECK(out.modulator == std::vector<int>{0});
  CHECK(out.graph.n() == 2);
  CHECK(out.graph.m() == 1);
  CHECK(out.report.bound == 1 + 2);  // k + |shapes on 1 vertex| * |subsets up to size 1|
  CHECK(out.report.within_bound);

  CHECK_THROWS_AS(kernel_hereditary(star, {1}, 1, FamilyTag::Empty, 1), std::invalid_argument);
  CHECK_THROWS_AS(kernel_hereditary(star, {0}, 1, FamilyTag::Empty, 4), CapExceeded);  // t_cap
  CHECK_THROWS_AS(kernel_hereditary(star, {0}, 1, FamilyTag::Empty, 0), std::invalid_argument);

  // pattern-tuple marking over a path remainder keeps the ends distinct
  Graph g = path_graph(6);
  auto out2 = kernel_hereditary(g, {2, 3}, 2, FamilyTag::UnionCochordal, 2, 2);
  CHECK(check_modulator({out2.graph, out2.modulator, FamilyTag::UnionCochordal}));
  CHECK(out2.report.n_out <= g.n());
  for (std::size_t i = 0; i + 1 < out2.kept_orig.size(); ++i)
    CHECK(out2.kept_orig[i] < out2.kept_orig[i + 1]);
}

TEST_CASE("marking kernel preserves decisions for empty remainders") {
  auto rng = make_rng(14, 5);
  for (int trial = 0; trial < 30; ++trial) {
    int k = 1 + (int)(rng() % 3);
    int n = k + 2 + (int)(rng() % 5);
    Graph g = cover_graph(rng, n, k, 30 + (int)(rng() % 60));
    int d = 1 + (int)(rng() % 3);
    FieldSpec f = (trial % 2) ? FieldSpec::gf(3) : FieldSpec::gf(2);
    CHECK(verify_kernel_equivalence(g, iota_vec(k), d, f, KernelAlg::Hereditary,
                                    FamilyTag::Empty, 1) == Equivalence::Equivalent);
  }
}

TEST_CASE("bit encoding round trip") {
  CHECK(k_graph_bit_count(3, 1, 3) == 10);  // C(3,2) + 3 + 3 + 1
  CHECK(k_graph_bit_count(5, 2, 3) == 30);  // C(5,2) + C(5,2) + C(5,3)

  auto rng = make_rng(9, 33);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + (int)(rng() % 4);
    int n = k + 1 + (int)(rng() % 4);
    Graph g = cover_graph(rng, n, k, 50);
    int d = 1 + (int)(rng() % 3);
    int m = 1 + (int)(rng() % d);
    auto kg = build_k_graph(g, iota_vec(k), m, d);
    auto bits = encode_k_graph(kg);
    CHECK(bits.size() == (k_graph_bit_count(k, m, d) + 7) / 8);
    auto back = decode_k_graph(bits, k, m, d);
    CHECK(back.graph == kg.graph);
    CHECK(back.subset_of == kg.subset_of);
    CHECK(back.m == m);
    CHECK(back.d == d);
  }
  CHECK_THROWS_AS(decode_k_graph(std::vector<uint8_t>(99), 3, 1, 3), std::invalid_argument);
}
