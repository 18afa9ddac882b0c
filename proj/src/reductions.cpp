#include "orthodim/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "orthodim/linalg.hpp"

namespace orthodim {

GadgetHandle gadget_graph(int d) {
  if (d < 3) throw std::invalid_argument("gadget_graph: d must be >= 3");
  GadgetHandle h;
  h.graph = complement(cycle_graph(2 * d));
  h.x0 = 0;
  h.x1 = 1;
  h.d = d;
  return h;
}

std::vector<int> gadget_coloring(int d, GadgetMode mode) {
  if (d < 3) throw std::invalid_argument("gadget_coloring: d must be >= 3");
  std::vector<int> col(2 * d);
  if (mode == GadgetMode::Same) {
    // pair up cycle-adjacent vertices x_{2i}, x_{2i+1}
    for (int v = 0; v < 2 * d; ++v) col[v] = v / 2;
  } else {
    // shift by one: x_{2i-1}, x_{2i} share color i, wrapping color 0 to
    // x_{2d-1} and x_0, so x0 gets 0 and x1 gets 1
    for (int v = 0; v < 2 * d; ++v) col[v] = ((v + 1) / 2) % d;
  }
  return col;
}

bool verify_gadget_property(int d, const FieldSpec& field, const SearchLimits& lim) {
  GadgetHandle h = gadget_graph(d);
  RepTable reps(field.as_gf(), d, lim.enum_cap);
  std::vector<std::vector<std::uint64_t>> cand(h.graph.n(), reps.nonselforth_mask());
  bool violated = false;
  search_orth_assignments(h.graph, reps, cand, lim, [&](const std::vector<int>& classes) {
    int a = classes[h.x0], b = classes[h.x1];
    if (a != b && !reps.orthogonal(a, b)) {
      violated = true;
      return true;  // counterexample found, stop
    }
    return false;
  });
  return !violated;
}

namespace {

ReductionOutput build_reduction(const Graph& g, const std::vector<int>& x, int d,
                                ReductionVariant variant) {
  std::vector<int> xs = x;
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument("reduction: repeated modulator vertex");
  for (int v : xs)
    if (v < 0 || v >= g.n()) throw std::invalid_argument("reduction: modulator vertex out of range");

  GadgetHandle h = gadget_graph(d);
  int k = (int)xs.size();
  int total = g.n() + d + d * k * (2 * d - 2);
  Graph gp(total);
  for (auto [u, v] : g.edges()) gp.add_edge(u, v);

  ReductionOutput out;
  out.d = d;
  out.variant = variant;
  out.original = g;
  out.x_orig = xs;
  for (int i = 0; i < d; ++i) out.clique.push_back(g.n() + i);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) gp.add_edge(out.clique[i], out.clique[j]);

  int next = g.n() + d;
  for (int i = 0; i < d; ++i)
    for (int v : xs) {
      GadgetCopy copy;
      copy.zi = out.clique[i];
      copy.v = v;
      for (int a = 2; a < 2 * d; ++a) copy.fresh.push_back(next++);
      auto embed = [&](int a) {
        return a == h.x0 ? copy.zi : a == h.x1 ? copy.v : copy.fresh[a - 2];
      };
      for (auto [a, b] : h.graph.edges()) gp.add_edge(embed(a), embed(b));
      out.gadgets.push_back(std::move(copy));
    }

  out.modulator = xs;
  for (int v = g.n(); v < total; ++v) out.modulator.push_back(v);
  out.graph = std::move(gp);
  return out;
}

}  // namespace

ReductionOutput col_to_od_vc(const Graph& g, const std::vector<int>& x, int d) {
  if (d < 3) throw std::invalid_argument("col_to_od_vc: d must be >= 3");
  if (!is_vertex_cover(g, x)) throw std::invalid_argument("col_to_od_vc: x is not a vertex cover");
  return build_reduction(g, x, d, ReductionVariant::VertexCover);
}

ReductionOutput col_to_od_path(const Graph& g, const std::vector<int>& x) {
  std::vector<int> xs = x;
  std::sort(xs.begin(), xs.end());
  if (!check_modulator({g, xs, FamilyTag::Path}))
    throw std::invalid_argument("col_to_od_path: G minus x is not a path");
  ReductionOutput out = build_reduction(g, xs, 3, ReductionVariant::Path);
  auto rest = graph_minus(g, xs);
  FamilyWitness w;
  recognize_family(rest.graph, FamilyTag::Path, &w);
  for (int v : w.path_order) out.path_order.push_back(rest.vertices[v]);
  return out;
}

std::vector<int> extract_coloring_from_orthrep(const ReductionOutput& out,
                                               const FiniteOrthRep& rep) {
  std::string why;
  if (!verify_orthrep(out.graph, rep, &why))
    throw std::invalid_argument("extract_coloring_from_orthrep: invalid representation: " + why);
  if (rep.d != out.d) throw std::invalid_argument("extract_coloring_from_orthrep: wrong dimension");
  GF f = rep.field.as_gf();
  int d = out.d;
  const Graph& g = out.original;
  std::vector<int> col(g.n(), -1);

  // modulator vertices: the color of the clique vector they are proportional
  // to; the gadget dichotomy plus the edge to every other clique vertex
  // forces exactly one match
  for (int v : out.x_orig) {
    int c = -1;
    for (int i = 0; i < d; ++i)
      if (is_proportional(f, rep.vectors[v], rep.vectors[out.clique[i]])) {
        c = i;
        break;
      }
    if (c < 0)
      throw std::logic_error("extract_coloring_from_orthrep: modulator vector matches no clique vector");
    col[v] = c;
  }

  auto alpha_nonzero = [&](int v, int i) {
    return !f.is_zero(inner_product(f, rep.vectors[v], rep.vectors[out.clique[i]]));
  };

  if (out.variant == ReductionVariant::VertexCover) {
    // outside vertices are independent; any color unused by the (all
    // modulator) neighbors works, and one exists because the clique vectors
    // form a basis
    for (int v = 0; v < g.n(); ++v) {
      if (col[v] >= 0) continue;
      std::vector<bool> used(d, false);
      for (int w : g.neighbors(v)) used[col[w]] = true;
      int c = (int)(std::find(used.begin(), used.end(), false) - used.begin());
      if (c == d) throw std::logic_error("extract_coloring_from_orthrep: no free color");
      col[v] = c;
    }
  } else {
    // walk the path; alpha_i != 0 screens out the colors of all modulator
    // neighbors, so only the predecessor needs dodging
    int prev = -1;
    for (int v : out.path_order) {
      int c = -1;
      for (int i = 0; i < d; ++i)
        if (alpha_nonzero(v, i) && i != prev) {
          c = i;
          break;
        }
      if (c < 0) throw std::logic_error("extract_coloring_from_orthrep: path rule found no color");
      col[v] = c;
      prev = c;
    }
  }
  return col;
}

}  // namespace orthodim
