#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthodim/field.hpp"
#include "orthodim/graph.hpp"
#include "orthodim/poly.hpp"
#include "orthodim/solver.hpp"

namespace orthodim {

BigInt binomial(int n, int k);

// k + sum_{i=m}^{d} C(k,i), the vertex bound for K-graphs.
BigInt k_graph_bound(int k, int m, int d);

// K-graph KG(G, X, m, d): G[X] plus one representative vertex v_S per subset
// S of X with m <= |S| <= d that is fully contained in some outside vertex's
// neighborhood. Vertices 0..k-1 are X in sorted original order; added
// vertices follow in (size, lex) subset order.
struct KGraphResult {
  Graph graph;
  std::vector<int> modulator;       // 0..k-1 in the new indexing
  std::vector<int> modulator_orig;  // sorted original ids of X
  // per added vertex (new index k+i): defining subset S as sorted positions
  // into modulator, and the smallest original outside vertex witnessing it
  std::vector<std::vector<int>> subset_of;
  std::vector<int> witness_of;
  int m = 1;
  int d = 1;
};

KGraphResult build_k_graph(const Graph& g, const std::vector<int>& x, int m, int d);

struct KernelReport {
  std::string algorithm;
  int n_in = 0, m_in = 0, k = 0, d = 0, n_out = 0, m_out = 0;
  BigInt bound = 0;
  bool within_bound = false;
  double elapsed_ms = 0;  // informational; not serialized
};

std::string kernel_report_json(const KernelReport& r);

struct GeneralKernel {
  KGraphResult kg;
  KernelReport report;
};

GeneralKernel kernel_general(const Graph& g, const std::vector<int>& x, int d);

// Two-phase real-field kernel: KG(G, X, d, d), then per added vertex v_S the
// determinant polynomial of the matrix whose columns are S's vertex-variable
// vectors (first coordinates substituted to 1), keep a greedy rank basis Y,
// return G'[X ∪ Y]. Variable (position p in sorted X, coordinate i) has
// index p*d + i.
struct RealKernel {
  KGraphResult phase1;
  std::vector<MultilinearPoly> polys;  // one per phase-1 added vertex
  std::vector<int> basis;              // indices into polys, greedy rank basis
  Graph graph;                         // phase-1 graph induced on X ∪ Y
  std::vector<int> modulator;          // 0..k-1
  std::vector<std::vector<int>> subset_of;  // subsets of kept added vertices
  KernelReport report;
};

RealKernel kernel_real(const Graph& g, const std::vector<int>& x, int d);

// Marking kernel for modulators to a hereditary family: for every graph shape
// F on t <= g_of_d vertices (one canonical labeling per isomorphism type) and
// every t-tuple of <= d-subsets of X, mark the lexicographically smallest
// tuple of distinct outside vertices inducing F with the prescribed
// X-neighborhood containments. Output is G[X ∪ marked].
struct HereditaryKernel {
  Graph graph;
  std::vector<int> modulator;  // new indices of the X vertices
  std::vector<int> kept_orig;  // ascending original ids of kept vertices
  KernelReport report;
};

HereditaryKernel kernel_hereditary(const Graph& g, const std::vector<int>& x, int d,
                                   FamilyTag family, int g_of_d, int t_cap = 3);

enum class KernelAlg { General, Real, Hereditary };
enum class Equivalence { Equivalent, Different, Inconclusive };

// decide_od on input vs. kernel output; search caps surface as Inconclusive.
Equivalence verify_kernel_equivalence(const Graph& g, const std::vector<int>& x, int d,
                                      const FieldSpec& field, KernelAlg alg,
                                      FamilyTag family = FamilyTag::Empty, int g_of_d = 1,
                                      const SearchLimits& lim = {});

// Bit encoding of a K-graph: C(k,2) adjacency bits for G[X] followed by one
// presence bit per candidate subset in (size, lex) order.
std::vector<uint8_t> encode_k_graph(const KGraphResult& kg);
KGraphResult decode_k_graph(const std::vector<uint8_t>& bits, int k, int m, int d);
uint64_t k_graph_bit_count(int k, int m, int d);

}  // namespace orthodim
