#include "orthodim/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "orthodim/rng.hpp"

namespace orthodim {

bool verify_orthrep(const Graph& g, const FiniteOrthRep& rep, std::string* why) {
  GF f = rep.field.as_gf();
  std::vector<Vec<GF>> vecs = rep.vectors;
  return verify_orthrep(f, g, rep.d, vecs, why);
}

// ---- RepTable ----------------------------------------------------------------

RepTable::RepTable(const GF& f, int d, std::uint64_t enum_cap) : f_(f), d_(d) {
  if (d < 1) throw std::invalid_argument("RepTable: d must be >= 1");
  vecs_ = projective_representatives(f, d, enum_cap);
  const int r = static_cast<int>(vecs_.size());
  words_ = (r + 63) / 64;
  for (int i = 0; i < r; ++i) index_[vecs_[i]] = i;
  nso_mask_.assign(words_, 0);
  orth_.assign(r, std::vector<std::uint64_t>(words_, 0));
  for (int i = 0; i < r; ++i) {
    if (!is_self_orthogonal(f_, vecs_[i])) nso_mask_[i >> 6] |= 1ULL << (i & 63);
    for (int j = 0; j < r; ++j)
      if (f_.is_zero(inner_product(f_, vecs_[i], vecs_[j]))) orth_[i][j >> 6] |= 1ULL << (j & 63);
  }
}

int RepTable::index_of(const std::vector<int>& v) const {
  bool zero = true;
  for (int e : v)
    if (e % f_.p() != 0) zero = false;
  if (zero) return -1;
  std::vector<int> canon(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) canon[i] = f_.from_int(v[i]);
  canon = projective_normalize(f_, canon);
  auto it = index_.find(canon);
  return it == index_.end() ? -1 : it->second;
}

// ---- backtracking engine -------------------------------------------------------

namespace {

int popcount_words(const std::uint64_t* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}

struct SearchState {
  const Graph& g;
  const RepTable& reps;
  const SearchLimits& lim;
  const std::function<bool(const std::vector<int>&)>& on_solution;
  int words;
  std::vector<std::vector<std::uint64_t>> cand;
  std::vector<int> assigned;  // class index or -1
  std::uint64_t nodes = 0;
  int unassigned = 0;

  bool run() {
    if (unassigned == 0) return on_solution(assigned);
    // most constrained vertex, smallest index on ties
    int best = -1, best_count = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (assigned[v] >= 0) continue;
      int c = popcount_words(cand[v].data(), words);
      if (best < 0 || c < best_count) {
        best = v;
        best_count = c;
        if (c == 0) break;
      }
    }
    if (best_count == 0) return false;
    const auto saved = cand[best];
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = saved[w];
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        int r = (w << 6) | b;
        if (++nodes > lim.node_budget) throw CapExceeded("orthogonal assignment search: node budget exceeded");
        assigned[best] = r;
        --unassigned;
        // forward-check neighbors against the chosen class
        std::vector<std::pair<int, std::vector<std::uint64_t>>> trail;
        bool dead = false;
        const auto& row = reps.orth_row(r);
        for (int u : g.neighbors(best)) {
          if (assigned[u] >= 0) continue;
          trail.emplace_back(u, cand[u]);
          bool empty = true;
          for (int i = 0; i < words; ++i) {
            cand[u][i] &= row[i];
            if (cand[u][i]) empty = false;
          }
          if (empty) {
            dead = true;
            break;
          }
        }
        if (!dead && run()) return true;
        for (auto& [u, old] : trail) cand[u] = std::move(old);
        assigned[best] = -1;
        ++unassigned;
      }
    }
    return false;
  }
};

}  // namespace

bool search_orth_assignments(const Graph& g, const RepTable& reps,
                             const std::vector<std::vector<std::uint64_t>>& initial_cand,
                             const SearchLimits& lim,
                             const std::function<bool(const std::vector<int>&)>& on_solution) {
  if (static_cast<int>(initial_cand.size()) != g.n())
    throw std::invalid_argument("search_orth_assignments: candidate mask count mismatch");
  SearchState st{g, reps, lim, on_solution, reps.words(), initial_cand,
                 std::vector<int>(g.n(), -1)};
  st.unassigned = g.n();
  return st.run();
}

// ---- deciders ----------------------------------------------------------------

OdDecision decide_od(const Graph& g, int d, const FieldSpec& field, const SearchLimits& lim) {
  if (d < 1) throw std::invalid_argument("decide_od: d must be >= 1");
  GF f = field.as_gf();
  RepTable reps(f, d, lim.enum_cap);
  std::vector<std::vector<std::uint64_t>> cand(g.n(), reps.nonselforth_mask());
  OdDecision out;
  std::vector<int> solution;
  bool found = search_orth_assignments(g, reps, cand, lim, [&](const std::vector<int>& a) {
    solution = a;
    return true;
  });
  out.yes = found;
  if (found) {
    FiniteOrthRep rep{field, d, {}};
    for (int v = 0; v < g.n(); ++v) rep.vectors.push_back(reps.vec(solution[v]));
    out.witness = std::move(rep);
  }
  return out;
}

bool fpt_decide_vc(const Graph& g, const std::vector<int>& x, int d, const FieldSpec& field,
                   const SearchLimits& lim) {
  if (d < 1) throw std::invalid_argument("fpt_decide_vc: d must be >= 1");
  if (!is_vertex_cover(g, x)) throw std::invalid_argument("fpt_decide_vc: x is not a vertex cover");
  if (d > static_cast<int>(x.size())) return true;  // k pairwise-orthogonal vectors always fit in F^d, d > k
  GF f = field.as_gf();
  RepTable reps(f, d, lim.enum_cap);

  InducedSubgraph gx = induced_subgraph(g, x);
  // outside vertices grouped by their (sorted) neighborhood inside x
  std::vector<bool> in_x(g.n(), false);
  for (int v : gx.vertices) in_x[v] = true;
  std::vector<std::vector<int>> neighborhoods;  // as indices into gx.vertices
  std::map<std::vector<int>, int> nb_id;
  for (int v = 0; v < g.n(); ++v) {
    if (in_x[v]) continue;
    std::vector<int> nb;
    for (int w : g.neighbors(v)) nb.push_back(gx.old_to_new[w]);  // cover => w in x
    std::sort(nb.begin(), nb.end());
    if (!nb_id.count(nb)) {
      nb_id[nb] = static_cast<int>(neighborhoods.size());
      neighborhoods.push_back(nb);
    }
  }

  std::vector<std::vector<std::uint64_t>> cand(gx.graph.n(), reps.nonselforth_mask());
  return search_orth_assignments(gx.graph, reps, cand, lim, [&](const std::vector<int>& a) {
    for (const auto& nb : neighborhoods) {
      std::vector<Vec<GF>> assigned;
      assigned.reserve(nb.size());
      for (int i : nb) assigned.push_back(reps.vec(a[i]));
      if (!find_nonselforth_orthogonal(f, d, assigned)) return false;  // keep searching
    }
    return true;
  });
}

void validate_instance(const SubChooseInstance& inst) {
  if (inst.d < 1) throw std::invalid_argument("SubChooseInstance: d must be >= 1");
  if (!inst.field.is_finite()) throw std::invalid_argument("SubChooseInstance: field must be finite");
  if (static_cast<int>(inst.subspaces.size()) != inst.graph.n())
    throw std::invalid_argument("SubChooseInstance: one subspace per vertex required");
  for (const auto& s : inst.subspaces)
    if (s.ambient_dim != inst.d)
      throw std::invalid_argument("SubChooseInstance: subspace ambient dimension != d");
}

OdDecision decide_subchoose(const SubChooseInstance& inst, const SearchLimits& lim) {
  validate_instance(inst);
  GF f = inst.field.as_gf();
  RepTable reps(f, inst.d, lim.enum_cap);
  const int words = reps.words();
  std::vector<std::vector<std::uint64_t>> cand(inst.graph.n(),
                                               std::vector<std::uint64_t>(words, 0));
  for (int v = 0; v < inst.graph.n(); ++v) {
    for (int r = 0; r < reps.count(); ++r)
      if (reps.nonselforth(r) && subspace_contains(f, inst.subspaces[v], reps.vec(r)))
        cand[v][r >> 6] |= 1ULL << (r & 63);
  }
  OdDecision out;
  std::vector<int> solution;
  bool found = search_orth_assignments(inst.graph, reps, cand, lim, [&](const std::vector<int>& a) {
    solution = a;
    return true;
  });
  out.yes = found;
  if (found) {
    FiniteOrthRep rep{inst.field, inst.d, {}};
    for (int v = 0; v < inst.graph.n(); ++v) rep.vectors.push_back(reps.vec(solution[v]));
    out.witness = std::move(rep);
  }
  return out;
}

// ---- colorings ---------------------------------------------------------------

namespace {

bool coloring_branch(const Graph& g, const std::vector<int>& order, std::size_t pos, int q,
                     std::vector<int>& colors, int used, const SearchLimits& lim,
                     std::uint64_t& nodes) {
  if (pos == order.size()) return true;
  int v = order[pos];
  int limit = std::min(q, used + 1);  // new colors are interchangeable
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int w : g.neighbors(v))
      if (colors[w] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (++nodes > lim.node_budget) throw CapExceeded("coloring search: node budget exceeded");
    colors[v] = c;
    if (coloring_branch(g, order, pos + 1, q, colors, std::max(used, c + 1), lim, nodes)) return true;
    colors[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> decide_coloring(const Graph& g, int q, const SearchLimits& lim) {
  if (q < 0) throw std::invalid_argument("decide_coloring: q must be >= 0");
  if (g.n() == 0) return std::vector<int>{};
  if (q == 0) return std::nullopt;
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colors(g.n(), -1);
  std::uint64_t nodes = 0;
  if (coloring_branch(g, order, 0, q, colors, 0, lim, nodes)) return colors;
  return std::nullopt;
}

int chromatic_number(const Graph& g, const SearchLimits& lim) {
  for (int q = 0; q <= g.n(); ++q)
    if (decide_coloring(g, q, lim)) return q;
  return g.n();  // unreachable: n colors always suffice
}

namespace {

void clique_branch(const Graph& g, std::vector<int>& cur, std::vector<int>& cand, int& best) {
  if (static_cast<int>(cur.size()) > best) best = static_cast<int>(cur.size());
  if (cur.size() + cand.size() <= static_cast<std::size_t>(best)) return;
  while (!cand.empty()) {
    if (cur.size() + cand.size() <= static_cast<std::size_t>(best)) return;
    int v = cand.back();
    cand.pop_back();
    std::vector<int> next;
    for (int w : cand)
      if (g.has_edge(v, w)) next.push_back(w);
    cur.push_back(v);
    clique_branch(g, cur, next, best);
    cur.pop_back();
  }
}

}  // namespace

int clique_number(const Graph& g) {
  std::vector<int> cur, cand(g.n());
  std::iota(cand.begin(), cand.end(), 0);
  int best = 0;
  clique_branch(g, cur, cand, best);
  return best;
}

FiniteOrthRep coloring_to_orthrep(const Graph& g, const std::vector<int>& coloring, int d,
                                  const FieldSpec& field) {
  GF f = field.as_gf();
  FiniteOrthRep rep{field, d, coloring_to_orthrep(f, g, coloring, d)};
  return rep;
}

// ---- ETR emission --------------------------------------------------------------

std::string emit_etr_system(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("emit_etr_system: d must be >= 1");
  std::ostringstream out;
  out << "ETR vars=" << static_cast<long long>(g.n()) * d << " d=" << d << "\n";
  for (int v = 0; v < g.n(); ++v) {
    out << "NEQ0";
    for (int i = 0; i < d; ++i) out << " 1*x_" << v << "_" << i << "*x_" << v << "_" << i;
    out << "\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "EQ0";
    for (int i = 0; i < d; ++i) out << " 1*x_" << u << "_" << i << "*x_" << v << "_" << i;
    out << "\n";
  }
  return out.str();
}

// ---- float normalization --------------------------------------------------------

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

bool verify_real_orthrep(const Graph& g, const RealOrthRep& rep, double residual_tol,
                         std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(rep.vectors.size()) != g.n()) return fail("vector count != vertex count");
  for (int v = 0; v < g.n(); ++v) {
    if (static_cast<int>(rep.vectors[v].size()) != rep.d)
      return fail("vertex " + std::to_string(v) + ": wrong dimension");
    if (norm(rep.vectors[v]) == 0.0) return fail("vertex " + std::to_string(v) + ": zero vector");
  }
  for (auto [u, v] : g.edges()) {
    double r = std::abs(dot(rep.vectors[u], rep.vectors[v])) /
               (norm(rep.vectors[u]) * norm(rep.vectors[v]));
    if (!(r <= residual_tol))
      return fail("edge (" + std::to_string(u) + "," + std::to_string(v) + "): residual " +
                  std::to_string(r));
  }
  if (why) why->clear();
  return true;
}

RealOrthRep normalize_first_entry(const Graph& g, const RealOrthRep& rep, std::uint64_t seed) {
  std::string why;
  if (!verify_real_orthrep(g, rep, 1e-8, &why))
    throw std::invalid_argument("normalize_first_entry: invalid input representation: " + why);
  const int d = rep.d;
  const int n = g.n();
  if (n == 0) return rep;

  auto rng = make_rng(seed, /*stream=*/0x6e6f726d31ULL);
  std::uniform_int_distribution<int> entry(1, 2 * n);

  // a random direction that avoids every vector's orthogonal hyperplane;
  // each attempt fails with probability < 1/2, so this terminates fast
  std::vector<double> a(d);
  const int max_tries = 4096;
  int tries = 0;
  while (true) {
    if (++tries > max_tries)
      throw std::runtime_error("normalize_first_entry: could not find a usable direction");
    for (auto& e : a) e = entry(rng);
    double na = norm(a);
    bool ok = true;
    for (const auto& u : rep.vectors)
      if (std::abs(dot(a, u)) <= 1e-9 * na * norm(u)) {
        ok = false;
        break;
      }
    if (ok) break;
  }

  // orthonormal basis with first row a/|a| (Gram-Schmidt over standard basis)
  std::vector<std::vector<double>> rows;
  {
    double na = norm(a);
    std::vector<double> r0(d);
    for (int i = 0; i < d; ++i) r0[i] = a[i] / na;
    rows.push_back(r0);
  }
  for (int i = 0; i < d && static_cast<int>(rows.size()) < d; ++i) {
    std::vector<double> w(d, 0.0);
    w[i] = 1.0;
    for (const auto& r : rows) {
      double c = dot(w, r);
      for (int j = 0; j < d; ++j) w[j] -= c * r[j];
    }
    double nw = norm(w);
    if (nw > 1e-9)
      for (int j = 0; j < d; ++j) w[j] /= nw;
    else
      continue;
    rows.push_back(w);
  }
  if (static_cast<int>(rows.size()) != d)
    throw std::runtime_error("normalize_first_entry: basis completion failed");

  RealOrthRep out;
  out.d = d;
  out.vectors.resize(n);
  for (int v = 0; v < n; ++v) {
    std::vector<double> w(d);
    for (int j = 0; j < d; ++j) w[j] = dot(rows[j], rep.vectors[v]);
    double first = w[0];
    for (int j = 0; j < d; ++j) w[j] /= first;
    out.vectors[v] = std::move(w);
  }
  return out;
}

}  // namespace orthodim
