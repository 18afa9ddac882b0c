#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>

#include "doctest.h"
#include "orthodim/harness.hpp"
#include "orthodim/rng.hpp"
#include "orthodim/solver.hpp"

using namespace orthodim;

namespace {

// Oracle: try literally every assignment of vectors from GF(p)^d to the
// vertices. No projective classes, no pruning.
bool brute_od(const Graph& g, int d, const GF& f) {
  auto all = all_vectors(f, d);
  std::vector<int> pick(g.n(), 0);
  const int total = (int)all.size();
  while (true) {
    bool good = true;
    for (int v = 0; v < g.n() && good; ++v) {
      const auto& x = all[pick[v]];
      if (is_zero_vector(f, x) || is_self_orthogonal(f, x)) good = false;
    }
    if (good)
      for (auto [u, v] : g.edges()) {
        if (!f.is_zero(inner_product(f, all[pick[u]], all[pick[v]]))) {
          good = false;
          break;
        }
      }
    if (good) return true;
    int i = g.n() - 1;
    while (i >= 0 && pick[i] == total - 1) pick[i--] = 0;
    if (i < 0) return false;
    ++pick[i];
  }
}

}  // namespace

TEST_CASE("projective class tables") {
  RepTable t2(GF(2), 3);
  CHECK(t2.count() == 7);
  int nso = 0;
  for (int i = 0; i < t2.count(); ++i)
    if (t2.nonselforth(i)) ++nso;
  CHECK(nso == 4);

  RepTable t3(GF(3), 2);
  CHECK(t3.count() == 4);
  for (int i = 0; i < t3.count(); ++i) CHECK(t3.nonselforth(i));

  // index_of finds any scalar multiple and rejects the zero vector
  for (int i = 0; i < t3.count(); ++i) {
    CHECK(t3.index_of(t3.vec(i)) == i);
    std::vector<int> doubled = t3.vec(i);
    for (auto& e : doubled) e = GF(3).mul(2, e);
    CHECK(t3.index_of(doubled) == i);
  }
  CHECK(t3.index_of({0, 0}) == -1);

  // orthogonality matrix agrees with inner products of representatives
  GF f3(3);
  for (int i = 0; i < t3.count(); ++i)
    for (int j = 0; j < t3.count(); ++j)
      CHECK(t3.orthogonal(i, j) == f3.is_zero(inner_product(f3, t3.vec(i), t3.vec(j))));

  CHECK_THROWS_AS(RepTable(GF(251), 8, /*enum_cap=*/1 << 20), CapExceeded);
}

TEST_CASE("representation checking") {
  // C_4 with alternating e_1/e_2 is a valid 2-dim representation
  Graph c4 = cycle_graph(4);
  GF f2(2);
  std::vector<Vec<GF>> vecs = {{1, 0}, {0, 1}, {1, 0}, {0, 1}};
  CHECK(verify_orthrep(f2, c4, 2, vecs));

  std::string why;
  CHECK(!verify_orthrep(f2, c4, 2, {{1, 0}, {0, 1}, {1, 0}}, &why));
  CHECK(why == "vector count != vertex count");
  CHECK(!verify_orthrep(f2, c4, 2, {{1, 0}, {0, 1}, {1, 0}, {1, 1}}, &why));
  CHECK(why == "vertex 3: self-orthogonal vector");
  CHECK(!verify_orthrep(f2, c4, 2, {{1, 0}, {0, 1}, {0, 1}, {1, 0}}, &why));
  CHECK(why == "edge (1,2): not orthogonal");
  CHECK(!verify_orthrep(f2, c4, 3, vecs, &why));
  CHECK(why == "vertex 0: wrong dimension");

  FiniteOrthRep rep{FieldSpec::gf(2), 2, {{1, 0}, {0, 1}, {1, 0}, {0, 1}}};
  CHECK(verify_orthrep(c4, rep));
  rep.field = FieldSpec::rational();
  CHECK_THROWS_AS(verify_orthrep(c4, rep), std::invalid_argument);
}

TEST_CASE("decider agrees with vector-level brute force") {
  auto graphs4 = all_graphs_upto_iso(4);
  auto graphs3 = all_graphs_upto_iso(3);
  std::vector<Graph> corpus = graphs3;
  corpus.insert(corpus.end(), graphs4.begin(), graphs4.end());
  REQUIRE(corpus.size() == 4 + 11);
  for (const Graph& g : corpus)
    for (int p : {2, 3})
      for (int d = 1; d <= 3; ++d) {
        auto dec = decide_od(g, d, FieldSpec::gf(p));
        CHECK(dec.yes == brute_od(g, d, GF(p)));
        if (dec.yes) {
          REQUIRE(dec.witness.has_value());
          CHECK(verify_orthrep(g, *dec.witness));
          CHECK(dec.witness->d == d);
          CHECK(dec.witness->field == FieldSpec::gf(p));
        } else {
          CHECK(!dec.witness.has_value());
        }
      }
}

TEST_CASE("fixed decisions") {
  // a triangle needs 3 dimensions over any field
  CHECK(!decide_od(complete_graph(3), 2, FieldSpec::gf(2)).yes);
  CHECK(decide_od(complete_graph(3), 3, FieldSpec::gf(2)).yes);
  CHECK(!decide_od(complete_graph(4), 3, FieldSpec::gf(2)).yes);
  CHECK(!decide_od(complete_graph(4), 3, FieldSpec::gf(3)).yes);
  // bipartite graphs have 2-dim representations over GF(3) (not GF(2):
  // (1,1) is the only class orthogonal to nothing... check the solver)
  CHECK(decide_od(cycle_graph(4), 2, FieldSpec::gf(3)).yes);
  CHECK(decide_od(Graph(3), 1, FieldSpec::gf(2)).yes);
  // C_5 over the reals-like fields: chromatic bound gives 3
  CHECK(decide_od(cycle_graph(5), 3, FieldSpec::gf(3)).yes);

  // budget exhaustion surfaces as CapExceeded, not a wrong answer
  SearchLimits tiny;
  tiny.node_budget = 1;
  CHECK_THROWS_AS(decide_od(complete_graph(6), 5, FieldSpec::gf(3), tiny), CapExceeded);
}

TEST_CASE("solution search visits each assignment once") {
  // K_2 over GF(2), d=2: classes {01,10,11}, nonselforth {01,10,11}\{11}...
  // (1,1) is self-orthogonal; orthogonal pairs among {01,10}: (01,10) only.
  RepTable t(GF(2), 2);
  Graph k2 = complete_graph(2);
  std::vector<std::vector<std::uint64_t>> cand(2, t.nonselforth_mask());
  std::set<std::vector<int>> seen;
  search_orth_assignments(k2, t, cand, {}, [&](const std::vector<int>& a) {
    CHECK(seen.insert(a).second);
    return false;
  });
  CHECK(seen.size() == 2);  // (e1,e2) and (e2,e1)
  for (const auto& a : seen) CHECK(t.orthogonal(a[0], a[1]));

  // restricting a candidate mask restricts the solutions
  cand[0] = {0};
  int count = 0;
  search_orth_assignments(k2, t, cand, {}, [&](const std::vector<int>&) {
    ++count;
    return false;
  });
  CHECK(count == 0);

  // early stop: callback returning true halts after the first solution
  cand = {t.nonselforth_mask(), t.nonselforth_mask()};
  count = 0;
  bool stopped = search_orth_assignments(k2, t, cand, {}, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  CHECK(stopped);
  CHECK(count == 1);
}

TEST_CASE("cover-parameterized decider") {
  auto rng = make_rng(5, 99);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + (int)(rng() % 5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 45) g.add_edge(u, v);
    auto cover = min_vertex_cover(g, n);
    REQUIRE(cover.has_value());
    int d = 1 + (int)(rng() % 3);
    FieldSpec f = (trial % 2 == 0) ? FieldSpec::gf(2) : FieldSpec::gf(3);
    bool got = fpt_decide_vc(g, *cover, d, f);
    CHECK(got == decide_od(g, d, f).yes);
    ++checked;
  }
  CHECK(checked == 120);

  // d > |cover| accepts without any search
  CHECK(fpt_decide_vc(complete_graph(2), {0}, 2, FieldSpec::gf(2)));
  CHECK(fpt_decide_vc(cycle_graph(5), {0, 1, 3}, 4, FieldSpec::gf(2)));
  // K_4 with a 3-vertex cover and d=3: no 3-dim representation exists
  CHECK(!fpt_decide_vc(complete_graph(4), {0, 1, 2}, 3, FieldSpec::gf(2)));
  // the set must actually be a vertex cover
  CHECK_THROWS_AS(fpt_decide_vc(cycle_graph(4), {0}, 2, FieldSpec::gf(2)),
                  std::invalid_argument);
}

TEST_CASE("subspace-constrained decisions") {
  GF f2(2);
  SubChooseInstance inst;
  inst.graph = complete_graph(3);
  inst.field = FieldSpec::gf(2);
  inst.d = 3;
  inst.subspaces = {full_space(f2, 3), full_space(f2, 3), full_space(f2, 3)};
  validate_instance(inst);
  CHECK(decide_subchoose(inst).yes == decide_od(inst.graph, 3, inst.field).yes);

  // pinning vertex 0 to a line containing only self-orthogonal vectors kills it
  inst.subspaces[0] = span(f2, 3, {{1, 1, 0}});
  CHECK(!decide_subchoose(inst).yes);

  // forcing the standard basis line by line still works
  inst.subspaces = {span(f2, 3, {{1, 0, 0}}), span(f2, 3, {{0, 1, 0}}), span(f2, 3, {{0, 0, 1}})};
  auto dec = decide_subchoose(inst);
  REQUIRE(dec.yes);
  REQUIRE(dec.witness.has_value());
  CHECK(verify_orthrep(inst.graph, *dec.witness));
  for (int v = 0; v < 3; ++v)
    CHECK(subspace_contains(f2, inst.subspaces[v], [&] {
      Vec<GF> x;
      for (int e : dec.witness->vectors[v]) x.push_back(e);
      return x;
    }()));

  // a zero-dimensional subspace leaves no candidate at all
  inst.subspaces[1] = zero_subspace<GF>(3);
  CHECK(!decide_subchoose(inst).yes);

  // validation: wrong counts and ambient mismatches
  SubChooseInstance bad = inst;
  bad.subspaces.pop_back();
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
  bad = inst;
  bad.subspaces[0] = zero_subspace<GF>(2);
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
  bad = inst;
  bad.field = FieldSpec::rational();
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  // cross-check constrained decisions against a filtered brute force
  auto rng = make_rng(31, 4);
  GF f3(3);
  for (int trial = 0; trial < 40; ++trial) {
    SubChooseInstance si;
    int n = 2 + (int)(rng() % 3);
    si.graph = Graph(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) si.graph.add_edge(u, v);
    si.field = FieldSpec::gf(3);
    si.d = 2;
    for (int v = 0; v < n; ++v) {
      std::vector<Vec<GF>> rows(1 + rng() % 2, Vec<GF>(2, 0));
      for (auto& row : rows)
        for (auto& e : row) e = (int)(rng() % 3);
      si.subspaces.push_back(span(f3, 2, rows));
    }
    bool want = [&] {
      auto all = all_vectors(f3, 2);
      std::vector<int> pick(n, 0);
      while (true) {
        bool good = true;
        for (int v = 0; v < n && good; ++v) {
          const auto& x = all[pick[v]];
          good = !is_zero_vector(f3, x) && !is_self_orthogonal(f3, x) &&
                 subspace_contains(f3, si.subspaces[v], x);
        }
        if (good)
          for (auto [u, v] : si.graph.edges())
            if (!f3.is_zero(inner_product(f3, all[pick[u]], all[pick[v]]))) {
              good = false;
              break;
            }
        if (good) return true;
        int i = n - 1;
        while (i >= 0 && pick[i] == (int)all.size() - 1) pick[i--] = 0;
        if (i < 0) return false;
        ++pick[i];
      }
    }();
    auto got = decide_subchoose(si);
    CHECK(got.yes == want);
    if (got.yes) {
      CHECK(verify_orthrep(si.graph, *got.witness));
      for (int v = 0; v < n; ++v) {
        Vec<GF> x;
        for (int e : got.witness->vectors[v]) x.push_back(e);
        CHECK(subspace_contains(f3, si.subspaces[v], x));
      }
    }
  }
}

TEST_CASE("colorings") {
  auto col = decide_coloring(cycle_graph(5), 3);
  REQUIRE(col.has_value());
  std::set<int> used(col->begin(), col->end());
  for (int c : used) CHECK((c >= 0 && c < 3));
  for (auto [u, v] : cycle_graph(5).edges()) CHECK((*col)[u] != (*col)[v]);
  CHECK(!decide_coloring(cycle_graph(5), 2).has_value());

  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(chromatic_number(complete_graph(4)) == 4);
  CHECK(chromatic_number(Graph(3)) == 1);
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(clique_number(complete_graph(4)) == 4);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(Graph(2)) == 1);

  // basis representation from a proper coloring verifies over any field
  Graph p4 = path_graph(4);
  std::vector<int> coloring = {0, 1, 0, 1};
  auto rep = coloring_to_orthrep(p4, coloring, 3, FieldSpec::gf(2));
  CHECK(verify_orthrep(p4, rep));
  CHECK_THROWS_AS(coloring_to_orthrep(p4, std::vector<int>{0, 0, 0, 0}, 3, FieldSpec::gf(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(coloring_to_orthrep(p4, coloring, 1, FieldSpec::gf(2)),
                  std::invalid_argument);
}

TEST_CASE("constraint system emission") {
  std::string s = emit_etr_system(path_graph(3), 3);
  CHECK(s == emit_etr_system(path_graph(3), 3));  // deterministic
  REQUIRE(s.substr(0, 4) == "ETR ");
  CHECK(s.find("ETR vars=9 d=3") == 0);
  int neq = 0, eq = 0;
  for (std::size_t pos = 0; (pos = s.find('\n', pos)) != std::string::npos; ++pos) {
    if (s.compare(pos + 1, 5, "NEQ0 ") == 0) ++neq;
    if (s.compare(pos + 1, 4, "EQ0 ") == 0) ++eq;
  }
  CHECK(neq == 3);  // one per vertex
  CHECK(eq == 2);   // one per edge
  CHECK(s.back() == '\n');
}

TEST_CASE("first-entry normalization") {
  Graph c4 = cycle_graph(4);
  RealOrthRep rep;
  rep.d = 2;
  rep.vectors = {{1, 0}, {0, 1}, {-2, 0}, {0, 3}};
  REQUIRE(verify_real_orthrep(c4, rep, 1e-9));
  auto out = normalize_first_entry(c4, rep, 77);
  CHECK(verify_real_orthrep(c4, out, 1e-6));
  for (const auto& v : out.vectors) CHECK(std::abs(v[0] - 1.0) <= 1e-9);

  std::string why;
  RealOrthRep zero = rep;
  zero.vectors[2] = {0, 0};
  CHECK(!verify_real_orthrep(c4, zero, 1e-9, &why));
  CHECK(!why.empty());
  RealOrthRep skew = rep;
  skew.vectors[1] = {0.5, 1};
  CHECK(!verify_real_orthrep(c4, skew, 1e-9));
  CHECK_THROWS_AS(normalize_first_entry(c4, skew, 1), std::invalid_argument);
}
