#include "orthodim/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "orthodim/certificates.hpp"
#include "orthodim/gen.hpp"
#include "orthodim/io.hpp"
#include "orthodim/kernels.hpp"
#include "orthodim/poly.hpp"
#include "orthodim/reductions.hpp"
#include "orthodim/rng.hpp"
#include "orthodim/solver.hpp"

namespace orthodim {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void record(SuiteResult& r, bool ok, const std::string& msg) {
  ++r.total;
  if (ok)
    ++r.passed;
  else
    r.failures.push_back(msg);
}

SuiteResult finish(SuiteResult r, const Timer& t) {
  std::sort(r.failures.begin(), r.failures.end());
  r.elapsed_ms = t.ms();
  return r;
}

int pick(std::mt19937_64& rng, int n) {
  return (int)std::uniform_int_distribution<long long>(0, n - 1)(rng);
}

double unit(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// shared Empty+kv corpus for the kernel suites: trial t -> (instance, field)
struct KvTrial {
  GenConfig cfg;
  FieldSpec field = FieldSpec::gf(2);
};

KvTrial kv_trial(std::uint64_t seed, int t, int n_max, int k_max) {
  auto rng = make_rng(seed, 0x6b76636f72707573ULL + (std::uint64_t)t);
  KvTrial tr;
  tr.field = t % 2 == 0 ? FieldSpec::gf(2) : FieldSpec::gf(3);
  tr.cfg.family = FamilyTag::Empty;
  tr.cfg.k = pick(rng, k_max + 1);
  tr.cfg.n = std::max(1, tr.cfg.k + pick(rng, n_max - tr.cfg.k + 1));
  tr.cfg.density = 0.05 + 0.9 * unit(rng);
  tr.cfg.seed = rng();
  return tr;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

// over the reals a proper dim-coloring gives a representation and a clique of
// dim+1 pairwise-orthogonal vectors cannot fit, so either side can settle the
// <= dim decision; nullopt when the sandwich does not close
std::optional<bool> od_real_decision(const Graph& g, int dim) {
  if (chromatic_number(g) <= dim) return true;
  if (clique_number(g) > dim) return false;
  return std::nullopt;
}

std::vector<int> cover_of(const Graph& g) {
  auto x = min_vertex_cover(g, g.n());
  if (!x) throw std::logic_error("cover_of: no vertex cover within n");
  std::sort(x->begin(), x->end());
  return *x;
}

}  // namespace

std::string SuiteResult::summary() const {
  return std::to_string(passed) + "/" + std::to_string(total) + " " + label;
}

std::vector<Graph> all_graphs_upto_iso(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("all_graphs_upto_iso: supported for 1 <= n <= 6");
  const int nb = n * (n - 1) / 2;
  std::vector<std::vector<int>> pidx(n, std::vector<int>(n, -1));
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pidx[i][j] = pidx[j][i] = b++;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> bit_of_perm;  // bit relabeling per permutation
  do {
    std::vector<int> bits(nb);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) bits[pidx[i][j]] = pidx[perm[i]][perm[j]];
    bit_of_perm.push_back(std::move(bits));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << nb); ++mask) {
    bool canonical = true;
    for (std::size_t p = 1; p < bit_of_perm.size() && canonical; ++p) {
      std::uint32_t pm = 0;
      for (int bit = 0; bit < nb; ++bit)
        if (mask >> bit & 1) pm |= 1u << bit_of_perm[p][bit];
      if (pm < mask) canonical = false;
    }
    if (!canonical) continue;
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask >> pidx[i][j] & 1) g.add_edge(i, j);
    out.push_back(std::move(g));
  }
  return out;
}

SuiteResult suite_kernel_general(int trials, std::uint64_t seed) {
  if (trials <= 0) trials = 200;
  Timer t;
  SuiteResult r;
  r.name = "kernel-general";
  r.label = "equivalent";
  for (int i = 0; i < trials; ++i) {
    KvTrial tr = kv_trial(seed, i, 10, 5);
    InstanceFile inst = gen_random(tr.cfg);
    Graph g = to_graph(inst);
    Equivalence eq =
        verify_kernel_equivalence(g, inst.modulator, 3, tr.field, KernelAlg::General);
    record(r, eq == Equivalence::Equivalent,
           "trial " + std::to_string(i) + " (" + tr.field.name() + ", n=" +
               std::to_string(g.n()) + ", k=" + std::to_string(inst.modulator.size()) +
               "): decision changed by kernel_general");
  }
  return finish(std::move(r), t);
}

SuiteResult suite_kgraph_bound(int trials, std::uint64_t seed) {
  if (trials <= 0) trials = 200;
  Timer t;
  SuiteResult r;
  r.name = "kgraph-bound";
  r.label = "within bound";
  const int d = 3;
  for (int i = 0; i < trials; ++i) {
    KvTrial tr = kv_trial(seed, i, 10, 5);
    InstanceFile inst = gen_random(tr.cfg);
    Graph g = to_graph(inst);
    const int k = (int)inst.modulator.size();
    bool ok = true;
    std::string msg;
    for (int m = 1; m <= d && ok; ++m) {
      KGraphResult kg = build_k_graph(g, inst.modulator, m, d);
      if (BigInt(kg.graph.n()) > k_graph_bound(k, m, d)) {
        ok = false;
        msg = "m=" + std::to_string(m) + " exceeds k + sum C(k,i)";
      }
    }
    if (ok) {
      GeneralKernel gk = kernel_general(g, inst.modulator, d);
      if (!gk.report.within_bound || BigInt(gk.report.n_out) > gk.report.bound) {
        ok = false;
        msg = "kernel_general report out of bound";
      }
    }
    record(r, ok, "trial " + std::to_string(i) + ": " + msg);
  }
  return finish(std::move(r), t);
}

SuiteResult suite_kernel_real(int trials, std::uint64_t seed) {
  if (trials <= 0) trials = 200;
  Timer t;
  SuiteResult r;
  r.name = "kernel-real";
  r.label = "structure ok";
  const int d = 3;

  auto span_property = [](const RealKernel& rk) {
    std::vector<MultilinearPoly> base;
    for (int i : rk.basis) base.push_back(rk.polys[i]);
    int rank = poly_rank(base);
    if (rank != (int)base.size()) return false;
    for (std::size_t i = 0; i < rk.polys.size(); ++i) {
      if (std::find(rk.basis.begin(), rk.basis.end(), (int)i) != rk.basis.end()) continue;
      auto ext = base;
      ext.push_back(rk.polys[i]);
      if (poly_rank(ext) != rank) return false;
    }
    return true;
  };

  for (int i = 0; i < trials; ++i) {
    KvTrial tr = kv_trial(seed, i, 10, 5);
    InstanceFile inst = gen_random(tr.cfg);
    Graph g = to_graph(inst);
    const int k = (int)inst.modulator.size();
    RealKernel rk = kernel_real(g, inst.modulator, d);
    bool ok_a = rk.report.within_bound &&
                BigInt(rk.report.n_out) <= BigInt(k) + binomial(d * k, d - 1);
    bool ok_b = span_property(rk);
    record(r, ok_a && ok_b,
           "trial " + std::to_string(i) + ": " +
               (ok_a ? "removed polynomial escapes the retained span"
                     : "output exceeds k + C(dk, d-1)"));
  }

  std::vector<std::pair<std::string, Graph>> families;
  for (int m = 1; m <= 6; ++m)
    families.emplace_back("K_" + std::to_string(m), complete_graph(m));
  families.emplace_back("K_{2,3}", complete_bipartite(2, 3));
  families.emplace_back("K_{3,3}", complete_bipartite(3, 3));
  families.emplace_back("P_6", path_graph(6));
  families.emplace_back("C_6", cycle_graph(6));
  families.emplace_back("C_5", cycle_graph(5));
  families.emplace_back("C_7", cycle_graph(7));
  families.emplace_back("K_4+C_5", disjoint_union(complete_graph(4), cycle_graph(5)));
  families.emplace_back("K_3+K_{3,3}", disjoint_union(complete_graph(3), complete_bipartite(3, 3)));
  families.emplace_back("C_7+K_2", disjoint_union(cycle_graph(7), complete_graph(2)));
  families.emplace_back("K_5+K_2", disjoint_union(complete_graph(5), complete_graph(2)));
  for (const auto& [name, g] : families) {
    std::vector<int> x = cover_of(g);
    RealKernel rk = kernel_real(g, x, d);
    auto before = od_real_decision(g, d);
    auto after = od_real_decision(rk.graph, d);
    bool ok = before.has_value() && after.has_value() && *before == *after &&
              span_property(rk) && rk.report.within_bound;
    record(r, ok, name + ": known-family decision not preserved");
  }
  return finish(std::move(r), t);
}

SuiteResult suite_gadget(int, std::uint64_t) {
  Timer t;
  SuiteResult r;
  r.name = "gadget";
  r.label = "verified";
  const std::vector<std::pair<int, FieldSpec>> combos = {
      {3, FieldSpec::gf(2)}, {3, FieldSpec::gf(3)}, {4, FieldSpec::gf(2)}};
  for (const auto& [d, field] : combos) {
    bool ok = verify_gadget_property(d, field);
    // the exhaustive claim must not hold vacuously: both branches of the
    // dichotomy are realized by actual representations
    GadgetHandle h = gadget_graph(d);
    RepTable reps(field.as_gf(), d, kDefaultEnumCap);
    std::vector<std::vector<std::uint64_t>> cand(h.graph.n(), reps.nonselforth_mask());
    std::uint64_t same = 0, orth = 0;
    SearchLimits lim;
    search_orth_assignments(h.graph, reps, cand, lim, [&](const std::vector<int>& cl) {
      if (cl[h.x0] == cl[h.x1])
        ++same;
      else if (reps.orthogonal(cl[h.x0], cl[h.x1]))
        ++orth;
      return false;
    });
    record(r, ok && same > 0 && orth > 0,
           "d=" + std::to_string(d) + " " + field.name() +
               (ok ? ": a dichotomy branch is never realized" : ": dichotomy counterexample"));
  }
  for (int d = 3; d <= 6; ++d) {
    GadgetHandle gg = gadget_graph(d);
    for (GadgetMode mode : {GadgetMode::Same, GadgetMode::Distinct}) {
      std::vector<int> col = gadget_coloring(d, mode);
      bool ok = (int)col.size() == gg.graph.n();
      for (int v = 0; ok && v < gg.graph.n(); ++v) ok = col[v] >= 0 && col[v] < d;
      for (auto [u, v] : gg.graph.edges())
        if (ok) ok = col[u] != col[v];
      if (ok)
        ok = mode == GadgetMode::Same ? col[gg.x0] == col[gg.x1] : col[gg.x0] != col[gg.x1];
      record(r, ok,
             "d=" + std::to_string(d) +
                 (mode == GadgetMode::Same ? " same" : " distinct") + ": bad coloring");
    }
  }
  return finish(std::move(r), t);
}

namespace {

// chi(G) <= 3  <=>  od_F(G') <= 3 for both fields, plus exact modulator size
bool reduction_trial_ok(const Graph& g, const std::vector<int>& x, const ReductionOutput& ro,
                        std::string* msg) {
  const int d = ro.d;
  const int k = (int)x.size();
  if ((int)ro.modulator.size() != k + d + d * k * (2 * d - 2)) {
    *msg = "modulator size formula violated";
    return false;
  }
  bool yes_chi = chromatic_number(g) <= d;
  for (const FieldSpec& field : {FieldSpec::gf(2), FieldSpec::gf(3)}) {
    bool yes_od = decide_od(ro.graph, d, field).yes;
    if (yes_od != yes_chi) {
      *msg = field.name() + ": chi(G)<=" + std::to_string(d) + " is " +
             (yes_chi ? "true" : "false") + " but od(G') disagrees";
      return false;
    }
  }
  return true;
}

}  // namespace

SuiteResult suite_reduction_vc(int trials, std::uint64_t seed) {
  if (trials <= 0) trials = 100;
  Timer t;
  SuiteResult r;
  r.name = "reduction-vc";
  r.label = "agree";
  std::vector<Graph> six = all_graphs_upto_iso(6);
  record(r, six.size() == 156,
         "isomorphism enumeration: got " + std::to_string(six.size()) + " graphs, expected 156");
  for (std::size_t i = 0; i < six.size(); ++i) {
    const Graph& g = six[i];
    std::vector<int> x = cover_of(g);
    ReductionOutput ro = col_to_od_vc(g, x, 3);
    std::string msg;
    bool ok = reduction_trial_ok(g, x, ro, &msg);
    record(r, ok, "graph6 #" + std::to_string(i) + ": " + msg);
  }
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(seed, 0x7265647663000000ULL + (std::uint64_t)i);
    int n = 3 + pick(rng, 5);
    double p = 0.1 + 0.8 * unit(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit(rng) < p) g.add_edge(u, v);
    std::vector<int> x = cover_of(g);
    ReductionOutput ro = col_to_od_vc(g, x, 3);
    std::string msg;
    bool ok = reduction_trial_ok(g, x, ro, &msg);
    record(r, ok, "random #" + std::to_string(i) + ": " + msg);
  }
  return finish(std::move(r), t);
}

SuiteResult suite_reduction_path(int trials, std::uint64_t seed) {
  if (trials <= 0) trials = 50;
  Timer t;
  SuiteResult r;
  r.name = "reduction-path";
  r.label = "agree";
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(seed, 0x7265647061746800ULL + (std::uint64_t)i);
    GenConfig cfg;
    cfg.family = FamilyTag::Path;
    cfg.k = pick(rng, 4);
    cfg.n = cfg.k + 2 + pick(rng, 6);
    cfg.density = 0.1 + 0.8 * unit(rng);
    cfg.seed = rng();
    InstanceFile inst = gen_random(cfg);
    Graph g = to_graph(inst);
    ReductionOutput ro = col_to_od_path(g, inst.modulator);
    std::string msg;
    bool ok = reduction_trial_ok(g, inst.modulator, ro, &msg);
    if (ok && !check_modulator({ro.graph, ro.modulator, FamilyTag::Path})) {
      ok = false;
      msg = "G' minus X' is not a path";
    }
    record(r, ok, "trial " + std::to_string(i) + ": " + msg);
  }
  return finish(std::move(r), t);
}

SuiteResult suite_m_values(int, std::uint64_t) {
  Timer t;
  SuiteResult r;
  r.name = "m-values";
  r.label = "exact";
  for (int d = 1; d <= 4; ++d)
    record(r, compute_m(FieldSpec::gf(2), d) == 1,
           "m(GF(2)," + std::to_string(d) + ") != 1");
  for (int d = 1; d <= 4; ++d)
    record(r, compute_m(FieldSpec::rational(), d) == d,
           "m(Q," + std::to_string(d) + ") != d");
  for (int p : {3, 5})
    for (int d : {2, 3}) {
      int v = compute_m(FieldSpec::gf(p), d);
      record(r, v >= (d + 1) / 2 && v <= d,
             "m(GF(" + std::to_string(p) + ")," + std::to_string(d) + ") = " +
                 std::to_string(v) + " outside [ceil(d/2), d]");
    }
  record(r, compute_m(FieldSpec::gf(3), 2) == 2, "m(GF(3),2) != 2");
  return finish(std::move(r), t);
}

SuiteResult suite_fpt(int trials, std::uint64_t seed) {
  if (trials <= 0) trials = 300;
  Timer t;
  SuiteResult r;
  r.name = "fpt";
  r.label = "agree";
  int early = 0;
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(seed, 0x6670745f74726c00ULL + (std::uint64_t)i);
    int d = 2 + i % 2;
    FieldSpec field = (i / 2) % 2 == 0 ? FieldSpec::gf(2) : FieldSpec::gf(3);
    GenConfig cfg;
    cfg.family = FamilyTag::Empty;
    cfg.k = i < 30 ? i % d : pick(rng, 5);  // early trials force d > k
    cfg.n = cfg.k + 1 + pick(rng, 9 - cfg.k);
    cfg.density = 0.05 + 0.9 * unit(rng);
    cfg.seed = rng();
    InstanceFile inst = gen_random(cfg);
    Graph g = to_graph(inst);
    if (d > (int)inst.modulator.size()) ++early;
    bool want = decide_od(g, d, field).yes;
    bool got = fpt_decide_vc(g, inst.modulator, d, field);
    record(r, got == want,
           "trial " + std::to_string(i) + " (" + field.name() + ", d=" + std::to_string(d) +
               "): fpt_decide_vc disagrees with decide_od");
  }
  record(r, early > 0, "early-accept path (d > k) never exercised");
  return finish(std::move(r), t);
}

SuiteResult suite_certificates(int trials, std::uint64_t seed) {
  if (trials <= 0) trials = 100;
  Timer t;
  SuiteResult r;
  r.name = "certificates";
  r.label = "verified";
  int collected = 0;
  for (std::uint64_t attempt = 0; collected < trials && attempt < (std::uint64_t)trials * 400;
       ++attempt) {
    auto rng = make_rng(seed, 0x6365727400000000ULL + attempt);
    bool split = collected % 2 == 0;
    FieldSpec field = (collected / 2) % 2 == 0 ? FieldSpec::gf(2) : FieldSpec::gf(3);
    int d = split || field.order() == 2 ? 2 + (collected / 4) % 2 : 2;
    GenConfig cfg;
    cfg.family = split ? FamilyTag::Split : FamilyTag::Cochordal;
    cfg.k = 0;
    cfg.n = split ? 4 + pick(rng, 5) : 4 + pick(rng, 3);
    cfg.density = 0.2 + 0.6 * unit(rng);
    cfg.with_subspaces = true;
    cfg.d = d;
    cfg.field = field;
    cfg.seed = rng();
    SubChooseInstance inst = to_subchoose(gen_random(cfg));
    if (decide_subchoose(inst).yes) continue;  // corpus is NO instances only
    bool ok;
    std::string what;
    SubInstanceWitness w =
        split ? split_no_certificate(inst) : cochordal_no_certificate(inst);
    ok = w.verified && verify_certificate(inst, w);
    what = split ? "split" : "cochordal";
    if (ok && split && is_anisotropic(field.as_gf(), d)) {
      SubInstanceWitness w2 = split_no_certificate_anisotropic(inst);
      ok = w2.verified && verify_certificate(inst, w2);
      what = "split-anisotropic";
    }
    record(r, ok,
           "instance " + std::to_string(collected) + " (" + what + ", " + field.name() +
               ", d=" + std::to_string(d) + "): certificate rejected");
    ++collected;
  }
  record(r, collected == trials,
         "collected only " + std::to_string(collected) + "/" + std::to_string(trials) +
             " NO instances");

  for (int d : {2, 3})
    for (int p : {2, 3}) {
      FieldSpec field = FieldSpec::gf(p);
      SubChooseInstance inst = build_irreducible_split_instance(d, field);
      BigInt n_expect = BigInt(d) + binomial(d, d / 2);
      bool ok = BigInt(inst.graph.n()) == n_expect && !decide_subchoose(inst).yes;
      for (int v = 0; ok && v < inst.graph.n(); ++v) {
        std::vector<int> keep;
        for (int u = 0; u < inst.graph.n(); ++u)
          if (u != v) keep.push_back(u);
        InducedSubgraph is = induced_subgraph(inst.graph, keep);
        SubChooseInstance sub{is.graph, inst.field, inst.d, {}};
        for (int u : is.vertices) sub.subspaces.push_back(inst.subspaces[u]);
        ok = decide_subchoose(sub).yes;  // every single deletion flips to YES
      }
      record(r, ok,
             "irreducible d=" + std::to_string(d) + " " + field.name() +
                 ": size/NO/deletion property violated");
    }
  return finish(std::move(r), t);
}

const char* const kEtrK3D2Golden =
    "ETR vars=6 d=2\n"
    "NEQ0 1*x_0_0*x_0_0 1*x_0_1*x_0_1\n"
    "NEQ0 1*x_1_0*x_1_0 1*x_1_1*x_1_1\n"
    "NEQ0 1*x_2_0*x_2_0 1*x_2_1*x_2_1\n"
    "EQ0 1*x_0_0*x_1_0 1*x_0_1*x_1_1\n"
    "EQ0 1*x_0_0*x_2_0 1*x_0_1*x_2_1\n"
    "EQ0 1*x_1_0*x_2_0 1*x_1_1*x_2_1\n";

SuiteResult suite_etr(int, std::uint64_t) {
  Timer t;
  SuiteResult r;
  r.name = "etr";
  r.label = "checks";
  std::string s1 = emit_etr_system(complete_graph(3), 2);
  std::string s2 = emit_etr_system(complete_graph(3), 2);
  record(r, s1 == s2, "emission is not run-to-run stable");
  record(r, s1.rfind("ETR vars=6 d=2\n", 0) == 0, "header is not 'ETR vars=6 d=2'");
  int neq = 0, eq = 0;
  std::size_t pos = 0;
  while (pos < s1.size()) {
    std::size_t end = s1.find('\n', pos);
    std::string line = s1.substr(pos, end - pos);
    if (line.rfind("NEQ0 ", 0) == 0)
      ++neq;
    else if (line.rfind("EQ0 ", 0) == 0)
      ++eq;
    pos = end == std::string::npos ? s1.size() : end + 1;
  }
  record(r, neq == 3, "expected 3 NEQ0 constraints, got " + std::to_string(neq));
  record(r, eq == 3, "expected 3 EQ0 constraints, got " + std::to_string(eq));
  record(r, s1 == kEtrK3D2Golden, "emission differs from the frozen golden text");
  return finish(std::move(r), t);
}

SuiteResult suite_normalize(int trials, std::uint64_t seed) {
  if (trials <= 0) trials = 50;
  Timer t;
  SuiteResult r;
  r.name = "normalize";
  r.label = "normalized";
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(seed, 0x6e6f726d5f74726cULL + (std::uint64_t)i);
    int n = 2 + pick(rng, 7);
    int d = 2 + pick(rng, 3);
    std::vector<int> color(n);
    for (auto& c : color) c = pick(rng, d);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (color[u] != color[v] && unit(rng) < 0.5) g.add_edge(u, v);

    // random rotation: Gram-Schmidt over gaussian vectors, retried on collapse
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> q;
    while ((int)q.size() < d) {
      std::vector<double> w(d);
      for (auto& e : w) e = gauss(rng);
      for (const auto& prev : q) {
        double c = 0;
        for (int j = 0; j < d; ++j) c += w[j] * prev[j];
        for (int j = 0; j < d; ++j) w[j] -= c * prev[j];
      }
      double nw = 0;
      for (double e : w) nw += e * e;
      nw = std::sqrt(nw);
      if (nw < 1e-6) continue;
      for (auto& e : w) e /= nw;
      q.push_back(std::move(w));
    }
    RealOrthRep rep;
    rep.d = d;
    rep.vectors.resize(n);
    for (int v = 0; v < n; ++v) {
      rep.vectors[v].resize(d);
      for (int j = 0; j < d; ++j) rep.vectors[v][j] = q[j][color[v]];  // column color[v]
    }

    RealOrthRep out = normalize_first_entry(g, rep, rng());
    bool ok = verify_real_orthrep(g, out, 1e-6);
    for (int v = 0; ok && v < n; ++v) ok = std::abs(out.vectors[v][0] - 1.0) <= 1e-9;
    for (auto [u, v] : g.edges()) {
      if (!ok) break;
      double dp = 0;
      for (int j = 0; j < d; ++j) dp += out.vectors[u][j] * out.vectors[v][j];
      ok = std::abs(dp) <= 1e-6;
    }
    record(r, ok, "trial " + std::to_string(i) + ": normalized output out of tolerance");
  }
  return finish(std::move(r), t);
}

std::vector<std::string> suite_names() {
  return {"kernel-general", "kgraph-bound", "kernel-real",  "gadget",
          "reduction-vc",   "reduction-path", "m-values",   "fpt",
          "certificates",   "etr",            "normalize"};
}

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed) {
  if (name == "kernel-general") return suite_kernel_general(trials, seed);
  if (name == "kgraph-bound") return suite_kgraph_bound(trials, seed);
  if (name == "kernel-real") return suite_kernel_real(trials, seed);
  if (name == "gadget") return suite_gadget(trials, seed);
  if (name == "reduction-vc") return suite_reduction_vc(trials, seed);
  if (name == "reduction-path") return suite_reduction_path(trials, seed);
  if (name == "m-values") return suite_m_values(trials, seed);
  if (name == "fpt") return suite_fpt(trials, seed);
  if (name == "certificates") return suite_certificates(trials, seed);
  if (name == "etr") return suite_etr(trials, seed);
  if (name == "normalize") return suite_normalize(trials, seed);
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace orthodim
