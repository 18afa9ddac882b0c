#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orthodim {

// Simple undirected graph, vertices 0..n-1, sorted adjacency lists,
// no loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
  }

  int n() const { return n_; }
  int m() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }
  // all edges as (u, v) with u < v, lexicographically sorted
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  }
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

Graph cycle_graph(int m);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;    // new index -> original vertex
  std::vector<int> old_to_new;  // -1 where absent
};
// `verts` need not be sorted; the result uses them in sorted order.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts);
// induced subgraph on V minus `removed`
InducedSubgraph graph_minus(const Graph& g, const std::vector<int>& removed);

bool is_clique(const Graph& g, const std::vector<int>& verts);
bool is_independent_set(const Graph& g, const std::vector<int>& verts);
bool is_vertex_cover(const Graph& g, const std::vector<int>& x);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Smallest vertex cover, if one of size <= budget exists (bounded search tree
// on uncovered edges, trying sizes upward so the result is minimum).
std::optional<std::vector<int>> min_vertex_cover(const Graph& g, int budget);

// Hereditary families the tooling understands. `Union*` means every
// connected component lies in the base family.
enum class FamilyTag { Empty, Path, Split, Cochordal, UnionSplit, UnionCochordal };

std::string family_name(FamilyTag t);
std::optional<FamilyTag> parse_family(std::string_view s);

struct FamilyWitness {
  std::vector<int> path_order;        // Path: vertices end to end
  std::vector<int> clique;            // Split: C part
  std::vector<int> independent;       // Split: I part
  std::vector<int> elimination_order; // Cochordal: PEO of the complement
};

bool recognize_family(const Graph& g, FamilyTag tag, FamilyWitness* witness = nullptr);

// MCS-based chordality test; fills a perfect elimination order on success.
bool is_chordal(const Graph& g, std::vector<int>* peo = nullptr);

// Smallest vertex whose non-neighbors form an independent set, if any.
std::optional<int> find_cosimplicial_vertex(const Graph& g);

// graph + modulator whose removal lands in `family`
struct ModulatorInstance {
  Graph graph;
  std::vector<int> modulator;  // sorted, distinct
  FamilyTag family = FamilyTag::Empty;
};

// modulator is a valid vertex set and G minus it lies in the family
bool check_modulator(const ModulatorInstance& inst);

}  // namespace orthodim
