#include "orthodim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orthodim {

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph::add_edge: loop");
  if (has_edge(u, v)) throw std::invalid_argument("Graph::add_edge: duplicate edge");
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph cycle_graph(int m) {
  if (m < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  Graph g(m);
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  for (int v : verts)
    if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
  InducedSubgraph out;
  out.vertices = verts;
  out.old_to_new.assign(g.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) out.old_to_new[verts[i]] = static_cast<int>(i);
  out.graph = Graph(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int w : g.neighbors(verts[i])) {
      int j = out.old_to_new[w];
      if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
    }
  return out;
}

InducedSubgraph graph_minus(const Graph& g, const std::vector<int>& removed) {
  std::vector<bool> gone(g.n(), false);
  for (int v : removed) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("graph_minus: vertex out of range");
    gone[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  return true;
}

bool is_independent_set(const Graph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& x) {
  std::vector<bool> in(g.n(), false);
  for (int v : x) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("is_vertex_cover: vertex out of range");
    in[v] = true;
  }
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace {

bool vc_branch(const Graph& g, std::vector<bool>& in_cover, int budget) {
  int eu = -1, ev = -1;
  for (auto [u, v] : g.edges())
    if (!in_cover[u] && !in_cover[v]) {
      eu = u;
      ev = v;
      break;
    }
  if (eu < 0) return true;  // everything covered
  if (budget == 0) return false;
  for (int pick : {eu, ev}) {
    in_cover[pick] = true;
    if (vc_branch(g, in_cover, budget - 1)) return true;
    in_cover[pick] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> min_vertex_cover(const Graph& g, int budget) {
  if (budget < 0) throw std::invalid_argument("min_vertex_cover: negative budget");
  for (int c = 0; c <= std::min(budget, g.n()); ++c) {
    std::vector<bool> in_cover(g.n(), false);
    if (vc_branch(g, in_cover, c)) {
      std::vector<int> out;
      for (int v = 0; v < g.n(); ++v)
        if (in_cover[v]) out.push_back(v);
      return out;
    }
  }
  return std::nullopt;
}

std::string family_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::Empty: return "empty";
    case FamilyTag::Path: return "path";
    case FamilyTag::Split: return "split";
    case FamilyTag::Cochordal: return "cochordal";
    case FamilyTag::UnionSplit: return "union-split";
    case FamilyTag::UnionCochordal: return "union-cochordal";
  }
  return "?";
}

std::optional<FamilyTag> parse_family(std::string_view s) {
  if (s == "empty") return FamilyTag::Empty;
  if (s == "path") return FamilyTag::Path;
  if (s == "split") return FamilyTag::Split;
  if (s == "cochordal") return FamilyTag::Cochordal;
  if (s == "union-split") return FamilyTag::UnionSplit;
  if (s == "union-cochordal") return FamilyTag::UnionCochordal;
  return std::nullopt;
}

bool is_chordal(const Graph& g, std::vector<int>* peo) {
  const int n = g.n();
  // maximum cardinality search; ties to the smallest index
  std::vector<int> weight(n, 0), order;
  std::vector<bool> seen(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (best < 0 || weight[v] > weight[best])) best = v;
    seen[best] = true;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!seen[w]) ++weight[w];
  }
  // reverse MCS order is a candidate perfect elimination order
  std::vector<int> elim(order.rbegin(), order.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = elim[i];
    int parent = -1;
    for (int w : g.neighbors(v))
      if (pos[w] > i && (parent < 0 || pos[w] < pos[parent])) parent = w;
    if (parent < 0) continue;
    for (int w : g.neighbors(v))
      if (pos[w] > i && w != parent && !g.has_edge(parent, w)) return false;
  }
  if (peo) *peo = elim;
  return true;
}

namespace {

bool recognize_path(const Graph& g, std::vector<int>* order) {
  const int n = g.n();
  if (n == 0) {
    if (order) order->clear();
    return true;
  }
  if (g.m() != n - 1) return false;
  if (connected_components(g).size() != 1) return false;
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return false;
    if (g.degree(v) <= 1 && start < 0) start = v;
  }
  if (start < 0) return false;  // connected with n-1 edges always has an endpoint, but be safe
  std::vector<int> walk{start};
  int prev = -1, cur = start;
  while (static_cast<int>(walk.size()) < n) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) {
        next = w;
        break;
      }
    if (next < 0) return false;
    walk.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order) *order = walk;
  return true;
}

bool recognize_split(const Graph& g, std::vector<int>* clique, std::vector<int>* indep) {
  const int n = g.n();
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  // if a split partition exists, some degree-descending prefix is the clique
  for (int h = 0; h <= n; ++h) {
    std::vector<int> c(by_degree.begin(), by_degree.begin() + h);
    std::vector<int> i(by_degree.begin() + h, by_degree.end());
    if (is_clique(g, c) && is_independent_set(g, i)) {
      std::sort(c.begin(), c.end());
      std::sort(i.begin(), i.end());
      if (clique) *clique = c;
      if (indep) *indep = i;
      return true;
    }
  }
  return false;
}

bool components_all(const Graph& g, FamilyTag base) {
  for (const auto& comp : connected_components(g))
    if (!recognize_family(induced_subgraph(g, comp).graph, base)) return false;
  return true;
}

}  // namespace

bool recognize_family(const Graph& g, FamilyTag tag, FamilyWitness* witness) {
  switch (tag) {
    case FamilyTag::Empty:
      return g.m() == 0;
    case FamilyTag::Path: {
      std::vector<int> order;
      if (!recognize_path(g, &order)) return false;
      if (witness) witness->path_order = order;
      return true;
    }
    case FamilyTag::Split: {
      std::vector<int> c, i;
      if (!recognize_split(g, &c, &i)) return false;
      if (witness) {
        witness->clique = c;
        witness->independent = i;
      }
      return true;
    }
    case FamilyTag::Cochordal: {
      std::vector<int> peo;
      if (!is_chordal(complement(g), &peo)) return false;
      if (witness) witness->elimination_order = peo;
      return true;
    }
    case FamilyTag::UnionSplit:
      return components_all(g, FamilyTag::Split);
    case FamilyTag::UnionCochordal:
      return components_all(g, FamilyTag::Cochordal);
  }
  return false;
}

std::optional<int> find_cosimplicial_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    std::vector<bool> nb(g.n(), false);
    nb[v] = true;
    for (int w : g.neighbors(v)) nb[w] = true;
    std::vector<int> others;
    for (int u = 0; u < g.n(); ++u)
      if (!nb[u]) others.push_back(u);
    if (is_independent_set(g, others)) return v;
  }
  return std::nullopt;
}

bool check_modulator(const ModulatorInstance& inst) {
  std::vector<int> x = inst.modulator;
  std::sort(x.begin(), x.end());
  if (std::adjacent_find(x.begin(), x.end()) != x.end()) return false;
  for (int v : x)
    if (v < 0 || v >= inst.graph.n()) return false;
  return recognize_family(graph_minus(inst.graph, x).graph, inst.family);
}

}  // namespace orthodim
