#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthodim/field.hpp"
#include "orthodim/graph.hpp"
#include "orthodim/linalg.hpp"

namespace orthodim {

struct SearchLimits {
  std::uint64_t node_budget = 100000000ULL;  // backtracking assignment attempts
  std::uint64_t enum_cap = kDefaultEnumCap;  // guard on q^d vector enumerations
};

// ---- orthogonal representations ---------------------------------------------

// valid iff every vector has dimension d, none is self-orthogonal, and
// endpoints of every edge are orthogonal
template <class F>
bool verify_orthrep(const F& f, const Graph& g, int d, const std::vector<Vec<F>>& vectors,
                    std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(vectors.size()) != g.n()) return fail("vector count != vertex count");
  for (int v = 0; v < g.n(); ++v) {
    if (static_cast<int>(vectors[v].size()) != d)
      return fail("vertex " + std::to_string(v) + ": wrong dimension");
    if (is_self_orthogonal(f, vectors[v]))
      return fail("vertex " + std::to_string(v) + ": self-orthogonal vector");
  }
  for (auto [u, v] : g.edges())
    if (!f.is_zero(inner_product(f, vectors[u], vectors[v])))
      return fail("edge (" + std::to_string(u) + "," + std::to_string(v) + "): not orthogonal");
  if (why) why->clear();
  return true;
}

struct FiniteOrthRep {
  FieldSpec field = FieldSpec::gf(2);
  int d = 1;
  std::vector<std::vector<int>> vectors;  // one per vertex
};

bool verify_orthrep(const Graph& g, const FiniteOrthRep& rep, std::string* why = nullptr);

// ---- projective class table --------------------------------------------------

// All projective classes of GF(p)^d with a precomputed pairwise
// orthogonality bit-matrix; the unit the backtracking searches work in.
// Orthogonality and self-orthogonality are scaling-invariant, so one
// representative per class loses nothing.
class RepTable {
 public:
  RepTable(const GF& f, int d, std::uint64_t enum_cap = kDefaultEnumCap);

  const GF& field() const { return f_; }
  int d() const { return d_; }
  int count() const { return static_cast<int>(vecs_.size()); }
  int words() const { return words_; }
  const std::vector<int>& vec(int i) const { return vecs_[i]; }
  bool nonselforth(int i) const { return (nso_mask_[i >> 6] >> (i & 63)) & 1; }
  bool orthogonal(int i, int j) const { return (orth_[i][j >> 6] >> (j & 63)) & 1; }
  const std::vector<std::uint64_t>& orth_row(int i) const { return orth_[i]; }
  const std::vector<std::uint64_t>& nonselforth_mask() const { return nso_mask_; }
  int index_of(const std::vector<int>& v) const;  // projective lookup, -1 if zero

 private:
  GF f_;
  int d_;
  int words_;
  std::vector<std::vector<int>> vecs_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<std::uint64_t>> orth_;
  std::vector<std::uint64_t> nso_mask_;
};

// Backtracking over per-vertex candidate masks (bits = projective classes):
// adjacent vertices must take orthogonal classes. Dynamic most-constrained-
// first order with smallest-index ties; finds every solution exactly once.
// `on_solution` gets the class assignment and returns true to stop the
// search (the function then returns true). Throws CapExceeded past the
// node budget.
bool search_orth_assignments(const Graph& g, const RepTable& reps,
                             const std::vector<std::vector<std::uint64_t>>& initial_cand,
                             const SearchLimits& lim,
                             const std::function<bool(const std::vector<int>&)>& on_solution);

// ---- deciders ----------------------------------------------------------------

struct OdDecision {
  bool yes = false;
  std::optional<FiniteOrthRep> witness;  // present iff yes
  std::uint64_t nodes = 0;
};

// od_F(G) <= d by exhaustive search over projective classes
OdDecision decide_od(const Graph& g, int d, const FieldSpec& field, const SearchLimits& lim = {});

// Vertex-cover-parameterized decider: accept outright when d > |x|, else
// enumerate assignments on G[x] and test each outside vertex against the
// constructive complement criterion.
bool fpt_decide_vc(const Graph& g, const std::vector<int>& x, int d, const FieldSpec& field,
                   const SearchLimits& lim = {});

// orthogonal representation with per-vertex subspace constraints
struct SubChooseInstance {
  Graph graph;
  FieldSpec field = FieldSpec::gf(2);
  int d = 1;
  std::vector<Subspace<GF>> subspaces;  // one per vertex, ambient dim d
};

void validate_instance(const SubChooseInstance& inst);
OdDecision decide_subchoose(const SubChooseInstance& inst, const SearchLimits& lim = {});

// ---- colorings ---------------------------------------------------------------

// proper q-coloring (colors 0..q-1) or nullopt
std::optional<std::vector<int>> decide_coloring(const Graph& g, int q, const SearchLimits& lim = {});
int chromatic_number(const Graph& g, const SearchLimits& lim = {});
int clique_number(const Graph& g);

// standard-basis representation e_{c(v)}; needs a proper coloring with colors < d
template <class F>
std::vector<Vec<F>> coloring_to_orthrep(const F& f, const Graph& g, const std::vector<int>& coloring,
                                        int d) {
  if (static_cast<int>(coloring.size()) != g.n())
    throw std::invalid_argument("coloring_to_orthrep: size mismatch");
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) throw std::invalid_argument("coloring_to_orthrep: not proper");
  std::vector<Vec<F>> out;
  for (int v = 0; v < g.n(); ++v) {
    if (coloring[v] < 0 || coloring[v] >= d)
      throw std::invalid_argument("coloring_to_orthrep: color out of range");
    Vec<F> e(d, f.zero());
    e[coloring[v]] = f.one();
    out.push_back(std::move(e));
  }
  return out;
}

FiniteOrthRep coloring_to_orthrep(const Graph& g, const std::vector<int>& coloring, int d,
                                  const FieldSpec& field);

// ---- existential-theory encoding ---------------------------------------------

// Deterministic text system: d*|V| variables, one NEQ0 line per vertex
// (self-inner-product), one EQ0 line per edge (cross inner product).
std::string emit_etr_system(const Graph& g, int d);

// ---- float normalization (the only floating-point path) -----------------------

struct RealOrthRep {
  int d = 0;
  std::vector<std::vector<double>> vectors;
};

// residual = |<u,v>| / (|u||v|) on edges; also rejects zero vectors
bool verify_real_orthrep(const Graph& g, const RealOrthRep& rep, double residual_tol,
                         std::string* why = nullptr);

// Rotate by an orthonormal matrix whose first row is a random direction
// non-orthogonal to every vector, then rescale so every first entry is 1.
// Orthogonality is preserved up to roundoff; input residuals must be <= 1e-8.
RealOrthRep normalize_first_entry(const Graph& g, const RealOrthRep& rep, std::uint64_t seed);

}  // namespace orthodim
