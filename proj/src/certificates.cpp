#include "orthodim/certificates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "orthodim/graph.hpp"
#include "orthodim/kernels.hpp"
#include "orthodim/linalg.hpp"

namespace orthodim {

namespace {

// induced sub-instance on ascending original ids, subspaces carried over
SubChooseInstance induce(const SubChooseInstance& inst, const std::vector<int>& verts) {
  auto sub = induced_subgraph(inst.graph, verts);
  SubChooseInstance out;
  out.graph = sub.graph;
  out.field = inst.field;
  out.d = inst.d;
  for (int v : sub.vertices) out.subspaces.push_back(inst.subspaces[v]);
  return out;
}

SubInstanceWitness make_witness(const SubChooseInstance& inst, std::vector<int> verts,
                                BigInt bound, const SearchLimits& lim) {
  std::sort(verts.begin(), verts.end());
  SubInstanceWitness w;
  w.instance = induce(inst, verts);
  w.vertices = std::move(verts);
  w.bound = std::move(bound);
  w.verified = verify_certificate(inst, w, lim);
  return w;
}

void require_no_instance(const SubChooseInstance& inst, const SearchLimits& lim,
                         const char* who) {
  validate_instance(inst);
  if (decide_subchoose(inst, lim).yes)
    throw std::invalid_argument(std::string(who) + ": instance is satisfiable");
}

// original ids of the smallest-index unsatisfiable component
std::vector<int> pick_no_component(const SubChooseInstance& inst, const SearchLimits& lim) {
  for (const auto& comp : connected_components(inst.graph))
    if (!decide_subchoose(induce(inst, comp), lim).yes) return comp;
  throw std::logic_error("pick_no_component: every component is satisfiable");
}

// split partition of the component, both sides as ascending original ids
void split_parts(const SubChooseInstance& inst, const std::vector<int>& comp,
                 std::vector<int>* clique, std::vector<int>* indep) {
  auto sub = induced_subgraph(inst.graph, comp);
  FamilyWitness w;
  if (!recognize_family(sub.graph, FamilyTag::Split, &w))
    throw std::invalid_argument("certificate: component is not a split graph");
  clique->clear();
  indep->clear();
  for (int v : w.clique) clique->push_back(sub.vertices[v]);
  for (int v : w.independent) indep->push_back(sub.vertices[v]);
}

bool same_neighborhood(const Graph& g, int a, int b) {
  return g.neighbors(a) == g.neighbors(b);
}

}  // namespace

SubInstanceWitness split_no_certificate(const SubChooseInstance& inst, const SearchLimits& lim) {
  require_no_instance(inst, lim, "split_no_certificate");
  if (!recognize_family(inst.graph, FamilyTag::UnionSplit))
    throw std::invalid_argument("split_no_certificate: components are not split graphs");
  GF f = inst.field.as_gf();
  int d = inst.d;
  BigInt bound = BigInt(d) + (BigInt(1) << d) * gaussian_binomial(d, d / 2, f.p());

  auto comp = pick_no_component(inst, lim);
  std::vector<int> clique, indep;
  split_parts(inst, comp, &clique, &indep);

  // d+1 pairwise-adjacent vertices are unsatisfiable in dimension d whatever
  // the subspaces say: pairwise orthogonal non-self-orthogonal vectors are
  // independent
  if ((int)clique.size() > d)
    return make_witness(inst, std::vector<int>(clique.begin(), clique.begin() + d + 1), bound,
                        lim);

  std::vector<int> alive = indep;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t b = 0; b < alive.size() && !changed; ++b)
      for (size_t a = 0; a < alive.size() && !changed; ++a) {
        if (a == b) continue;
        int v1 = alive[a], v2 = alive[b];
        if (same_neighborhood(inst.graph, v1, v2) &&
            subspace_leq(f, inst.subspaces[v1], inst.subspaces[v2])) {
          alive.erase(alive.begin() + b);
          changed = true;
        }
      }
  }

  std::vector<int> verts = clique;
  verts.insert(verts.end(), alive.begin(), alive.end());
  return make_witness(inst, std::move(verts), bound, lim);
}

SubInstanceWitness split_no_certificate_anisotropic(const SubChooseInstance& inst,
                                                    const SearchLimits& lim) {
  require_no_instance(inst, lim, "split_no_certificate_anisotropic");
  if (!recognize_family(inst.graph, FamilyTag::UnionSplit))
    throw std::invalid_argument(
        "split_no_certificate_anisotropic: components are not split graphs");
  GF f = inst.field.as_gf();
  int d = inst.d;
  if (!is_anisotropic(f, d, lim.enum_cap))
    throw std::invalid_argument(
        "split_no_certificate_anisotropic: F^d has nonzero self-orthogonal vectors");
  BigInt bound = BigInt(d) + (BigInt(1) << d) * binomial(d, d / 2);

  auto comp = pick_no_component(inst, lim);
  std::vector<int> clique, indep;
  split_parts(inst, comp, &clique, &indep);
  if ((int)clique.size() > d)
    return make_witness(inst, std::vector<int>(clique.begin(), clique.begin() + d + 1), bound,
                        lim);

  std::vector<Subspace<GF>> all_subs;
  for (int r = 0; r <= d; ++r)
    for (auto& q : enumerate_subspaces(f, d, r, lim.enum_cap)) all_subs.push_back(std::move(q));

  std::vector<int> alive = indep;
  // w is redundant when every subspace meeting all of its same-neighborhood
  // partners' subspaces meets L(w) too: a solution of the rest extends to w
  // because the complement of w's assigned neighbors is such a subspace
  auto removable = [&](int w) {
    std::vector<int> partners;
    for (int v : alive)
      if (v != w && same_neighborhood(inst.graph, v, w)) partners.push_back(v);
    for (const auto& q : all_subs) {
      bool premise = true;
      for (int v : partners)
        if (subspace_intersection(f, q, inst.subspaces[v]).dim() == 0) {
          premise = false;
          break;
        }
      if (premise && subspace_intersection(f, q, inst.subspaces[w]).dim() == 0) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t b = 0; b < alive.size(); ++b)
      if (removable(alive[b])) {
        alive.erase(alive.begin() + b);
        changed = true;
        break;
      }
  }

  std::vector<int> verts = clique;
  verts.insert(verts.end(), alive.begin(), alive.end());
  return make_witness(inst, std::move(verts), bound, lim);
}

namespace {

struct CochordalState {
  GF f;
  SearchLimits lim;
  std::uint64_t nodes = 0;
};

struct CurInstance {
  SubChooseInstance inst;
  std::vector<int> orig;  // local id -> original id
};

CurInstance restrict_to(const CurInstance& cur, const std::vector<int>& locals) {
  CurInstance next;
  next.inst = induce(cur.inst, locals);
  for (int v : locals) next.orig.push_back(cur.orig[v]);
  return next;
}

std::set<int> cochordal_mark(CochordalState& st, const CurInstance& cur) {
  if (++st.nodes > st.lim.node_budget)
    throw CapExceeded("cochordal certificate: node budget exceeded");

  // a vertex whose subspace holds only self-orthogonal vectors is
  // unsatisfiable alone
  for (int v = 0; v < cur.inst.graph.n(); ++v)
    if (!subspace_has_nonselforth(st.f, cur.inst.subspaces[v])) return {cur.orig[v]};

  // restrict to the first unsatisfiable component
  CurInstance comp;
  bool found = false;
  for (const auto& c : connected_components(cur.inst.graph)) {
    CurInstance cand = restrict_to(cur, c);
    if (!decide_subchoose(cand.inst, st.lim).yes) {
      comp = std::move(cand);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("cochordal certificate: instance became satisfiable");

  auto pick = find_cosimplicial_vertex(comp.inst.graph);
  if (!pick) throw std::logic_error("cochordal certificate: no cosimplicial vertex");
  int v = *pick;

  std::set<int> marked{comp.orig[v]};
  const auto& lv = comp.inst.subspaces[v];
  for (const auto& u : subspace_projective_vectors(st.f, lv)) {
    if (is_self_orthogonal(st.f, u)) continue;
    // assigning u to v: neighbors lose everything off u's hyperplane,
    // non-neighbors that could have taken u itself are deleted
    auto ucomp = orthogonal_complement(st.f, span(st.f, comp.inst.d, {u}));
    CurInstance next;
    next.inst.field = comp.inst.field;
    next.inst.d = comp.inst.d;
    std::vector<int> keep;
    for (int w = 0; w < comp.inst.graph.n(); ++w) {
      if (w == v) continue;
      bool adj = comp.inst.graph.has_edge(v, w);
      if (!adj && subspace_contains(st.f, comp.inst.subspaces[w], u)) continue;
      keep.push_back(w);
      next.orig.push_back(comp.orig[w]);
      next.inst.subspaces.push_back(
          adj ? subspace_intersection(st.f, comp.inst.subspaces[w], ucomp)
              : comp.inst.subspaces[w]);
    }
    next.inst.graph = induced_subgraph(comp.inst.graph, keep).graph;
    auto sub = cochordal_mark(st, next);
    marked.insert(sub.begin(), sub.end());
  }
  return marked;
}

}  // namespace

SubInstanceWitness cochordal_no_certificate(const SubChooseInstance& inst,
                                            const SearchLimits& lim) {
  require_no_instance(inst, lim, "cochordal_no_certificate");
  if (!recognize_family(inst.graph, FamilyTag::UnionCochordal))
    throw std::invalid_argument("cochordal_no_certificate: components are not cochordal");
  GF f = inst.field.as_gf();
  std::uint64_t q_to_d = checked_pow_u64(f.p(), inst.d, std::min<std::uint64_t>(lim.enum_cap, 4096));

  CochordalState st{f, lim};
  CurInstance cur;
  cur.inst = inst;
  for (int v = 0; v < inst.graph.n(); ++v) cur.orig.push_back(v);
  auto marked = cochordal_mark(st, cur);

  BigInt bound = 1;  // (q^d)! — loose by design
  for (std::uint64_t i = 2; i <= q_to_d; ++i) bound *= i;
  return make_witness(inst, {marked.begin(), marked.end()}, bound, lim);
}

SubChooseInstance build_irreducible_split_instance(int d, const FieldSpec& field) {
  if (d < 2) throw std::invalid_argument("build_irreducible_split_instance: d must be >= 2");
  GF f = field.as_gf();
  int h = d / 2;

  std::vector<std::vector<int>> sets;  // floor(d/2)-subsets of clique indices, lex
  std::vector<int> comb(h);
  for (int i = 0; i < h; ++i) comb[i] = i;
  while (true) {
    sets.push_back(comb);
    int i = h - 1;
    while (i >= 0 && comb[i] == d - h + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < h; ++j) comb[j] = comb[j - 1] + 1;
  }

  Graph g(d + (int)sets.size());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) g.add_edge(i, j);
  for (size_t s = 0; s < sets.size(); ++s)
    for (int i : sets[s]) g.add_edge(d + (int)s, i);

  std::vector<Vec<GF>> w_basis;
  for (int i = 0; i < h; ++i) {
    Vec<GF> e(d, 0);
    e[i] = 1;
    w_basis.push_back(e);
  }
  Subspace<GF> w = span(f, d, w_basis);

  SubChooseInstance inst;
  inst.graph = std::move(g);
  inst.field = field;
  inst.d = d;
  for (int i = 0; i < d; ++i) inst.subspaces.push_back(full_space(f, d));
  for (size_t s = 0; s < sets.size(); ++s) inst.subspaces.push_back(w);
  return inst;
}

bool verify_certificate(const SubChooseInstance& inst, const SubInstanceWitness& w,
                        const SearchLimits& lim) {
  validate_instance(inst);
  if (w.vertices.empty()) return false;
  if (!std::is_sorted(w.vertices.begin(), w.vertices.end())) return false;
  if (std::adjacent_find(w.vertices.begin(), w.vertices.end()) != w.vertices.end()) return false;
  for (int v : w.vertices)
    if (v < 0 || v >= inst.graph.n()) return false;
  if (BigInt((int)w.vertices.size()) > w.bound) return false;

  SubChooseInstance expect = induce(inst, w.vertices);
  if (w.instance.graph != expect.graph) return false;
  if (w.instance.field != expect.field || w.instance.d != expect.d) return false;
  if (w.instance.subspaces != expect.subspaces) return false;
  return !decide_subchoose(w.instance, lim).yes;
}

}  // namespace orthodim
