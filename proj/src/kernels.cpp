#include "orthodim/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace orthodim {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<int> sorted_distinct(std::vector<int> v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument(std::string(what) + ": repeated vertex");
  return v;
}

// subsets of {0..k-1} with lo <= size <= hi, increasing size then lex
std::vector<std::vector<int>> subsets_by_size(int k, int lo, int hi) {
  std::vector<std::vector<int>> out;
  hi = std::min(hi, k);
  for (int s = std::max(lo, 0); s <= hi; ++s) {
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
      out.push_back(comb);
      if (s == 0) break;
      int i = s - 1;
      while (i >= 0 && comb[i] == k - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

uint64_t subset_mask(const std::vector<int>& s) {
  uint64_t m = 0;
  for (int i : s) m |= 1ull << i;
  return m;
}

KernelReport make_report(const std::string& alg, const Graph& in, int k, int d,
                         const Graph& out, BigInt bound, double elapsed) {
  KernelReport r;
  r.algorithm = alg;
  r.n_in = in.n();
  r.m_in = in.m();
  r.k = k;
  r.d = d;
  r.n_out = out.n();
  r.m_out = out.m();
  r.bound = std::move(bound);
  r.within_bound = BigInt(r.n_out) <= r.bound;
  r.elapsed_ms = elapsed;
  return r;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    num /= i + 1;  // exact: product of j consecutive integers divides by j!
  }
  return num;
}

BigInt k_graph_bound(int k, int m, int d) {
  BigInt b = k;
  for (int i = m; i <= d; ++i) b += binomial(k, i);
  return b;
}

KGraphResult build_k_graph(const Graph& g, const std::vector<int>& x, int m, int d) {
  if (m < 1 || m > d) throw std::invalid_argument("build_k_graph: need 1 <= m <= d");
  if (!is_vertex_cover(g, x)) throw std::invalid_argument("build_k_graph: x is not a vertex cover");
  std::vector<int> xs = sorted_distinct(x, "build_k_graph");
  int k = (int)xs.size();
  if (k > 60) throw std::invalid_argument("build_k_graph: modulator too large");

  std::vector<int> pos(g.n(), -1);
  for (int i = 0; i < k; ++i) pos[xs[i]] = i;

  // X-neighborhood mask per outside vertex, in original-id order
  std::vector<std::pair<int, uint64_t>> outside;
  for (int v = 0; v < g.n(); ++v) {
    if (pos[v] >= 0) continue;
    uint64_t mask = 0;
    for (int w : g.neighbors(v))
      if (pos[w] >= 0) mask |= 1ull << pos[w];
    outside.emplace_back(v, mask);
  }

  KGraphResult res;
  res.m = m;
  res.d = d;
  res.modulator_orig = xs;
  res.modulator.resize(k);
  for (int i = 0; i < k; ++i) res.modulator[i] = i;

  for (const auto& s : subsets_by_size(k, m, d)) {
    uint64_t need = subset_mask(s);
    for (const auto& [v, mask] : outside) {
      if ((mask & need) == need) {
        res.subset_of.push_back(s);
        res.witness_of.push_back(v);
        break;
      }
    }
  }

  Graph kg(k + (int)res.subset_of.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(xs[i], xs[j])) kg.add_edge(i, j);
  for (size_t a = 0; a < res.subset_of.size(); ++a)
    for (int i : res.subset_of[a]) kg.add_edge(k + (int)a, i);
  res.graph = std::move(kg);
  return res;
}

std::string kernel_report_json(const KernelReport& r) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["n_in"] = r.n_in;
  j["m_in"] = r.m_in;
  j["k"] = r.k;
  j["d"] = r.d;
  j["n_out"] = r.n_out;
  j["m_out"] = r.m_out;
  if (r.bound <= BigInt(std::numeric_limits<uint64_t>::max()))
    j["bound"] = (uint64_t)r.bound;
  else
    j["bound"] = r.bound.str();
  j["within_bound"] = r.within_bound;
  return j.dump();
}

GeneralKernel kernel_general(const Graph& g, const std::vector<int>& x, int d) {
  auto t0 = Clock::now();
  GeneralKernel out;
  out.kg = build_k_graph(g, x, 1, d);
  int k = (int)out.kg.modulator_orig.size();
  out.report =
      make_report("general", g, k, d, out.kg.graph, k_graph_bound(k, 1, d), ms_since(t0));
  return out;
}

RealKernel kernel_real(const Graph& g, const std::vector<int>& x, int d) {
  if (d < 3) throw std::invalid_argument("kernel_real: d must be >= 3");
  auto t0 = Clock::now();
  RealKernel out;
  out.phase1 = build_k_graph(g, x, d, d);
  int k = (int)out.phase1.modulator_orig.size();

  // p_S = determinant of the d x d matrix whose c-th column holds the
  // variables of the c-th vertex of S; the substituted all-ones first row is
  // the first-coordinate row, so local (r, c) becomes global S[c]*d + r.
  MultilinearPoly det;
  if (!out.phase1.subset_of.empty()) det = det_substituted_poly(d);
  for (const auto& s : out.phase1.subset_of) {
    std::vector<int> var_map(d * d, 0);
    for (int r = 1; r < d; ++r)
      for (int c = 0; c < d; ++c) var_map[r * d + c] = s[c] * d + r;
    out.polys.push_back(remap_variables(det, k * d, var_map));
  }
  out.basis = poly_rank_basis(out.polys);

  std::vector<int> keep(out.phase1.modulator);
  for (int b : out.basis) {
    keep.push_back(k + b);
    out.subset_of.push_back(out.phase1.subset_of[b]);
  }
  out.graph = induced_subgraph(out.phase1.graph, keep).graph;
  out.modulator = out.phase1.modulator;
  out.report =
      make_report("real", g, k, d, out.graph, BigInt(k) + binomial(k * d, d - 1), ms_since(t0));
  return out;
}

namespace {

// edge-bit index for pair (i, j), i < j < t, lex order
int pair_bit(int i, int j, int t) {
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += t - 1 - a;
  return idx + (j - i - 1);
}

// canonically labeled adjacency masks, one per isomorphism type on t vertices
std::vector<uint32_t> canonical_patterns(int t) {
  int bits = t * (t - 1) / 2;
  std::vector<int> perm(t);
  std::vector<uint32_t> out;
  for (uint32_t pat = 0; pat < (1u << bits); ++pat) {
    for (int i = 0; i < t; ++i) perm[i] = i;
    uint32_t best = pat;
    do {
      uint32_t relabeled = 0;
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
          int a = std::min(perm[i], perm[j]), b = std::max(perm[i], perm[j]);
          if (pat & (1u << pair_bit(i, j, t))) relabeled |= 1u << pair_bit(a, b, t);
        }
      best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best == pat) out.push_back(pat);
  }
  return out;
}

}  // namespace

HereditaryKernel kernel_hereditary(const Graph& g, const std::vector<int>& x, int d,
                                   FamilyTag family, int g_of_d, int t_cap) {
  if (g_of_d < 1) throw std::invalid_argument("kernel_hereditary: g_of_d must be >= 1");
  if (g_of_d > t_cap) throw CapExceeded("hereditary marking: tuple size exceeds cap");
  std::vector<int> xs = sorted_distinct(x, "kernel_hereditary");
  if (!check_modulator({g, xs, family}))
    throw std::invalid_argument("kernel_hereditary: G minus x is not in " + family_name(family));
  int k = (int)xs.size();
  if (k > 60) throw std::invalid_argument("kernel_hereditary: modulator too large");
  auto t0 = Clock::now();

  std::vector<int> pos(g.n(), -1);
  for (int i = 0; i < k; ++i) pos[xs[i]] = i;
  std::vector<int> outside;
  std::vector<uint64_t> xmask;
  for (int v = 0; v < g.n(); ++v) {
    if (pos[v] >= 0) continue;
    uint64_t mask = 0;
    for (int w : g.neighbors(v))
      if (pos[w] >= 0) mask |= 1ull << pos[w];
    outside.push_back(v);
    xmask.push_back(mask);
  }
  int no = (int)outside.size();

  auto subs = subsets_by_size(k, 0, d);
  std::vector<uint64_t> smask(subs.size());
  for (size_t i = 0; i < subs.size(); ++i) smask[i] = subset_mask(subs[i]);

  std::set<int> marked;
  BigInt bound = k;
  for (int t = 1; t <= g_of_d; ++t) {
    auto patterns = canonical_patterns(t);
    BigInt keys = 1;
    for (int i = 0; i < t; ++i) keys *= (BigInt)subs.size();
    bound += BigInt(t) * (BigInt)patterns.size() * keys;

    std::vector<int> tuple(t), sidx(t, 0);
    for (uint32_t pat : patterns) {
      // odometer over t-tuples of subset indices
      std::fill(sidx.begin(), sidx.end(), 0);
      while (true) {
        // lex-smallest ordered tuple of distinct outside vertices matching
        // (pat, sidx): DFS trying candidates in ascending order
        auto dfs = [&](auto&& self, int depth) -> bool {
          if (depth == t) return true;
          for (int c = 0; c < no; ++c) {
            bool used = false;
            for (int j = 0; j < depth; ++j) used |= tuple[j] == c;
            if (used) continue;
            if ((xmask[c] & smask[sidx[depth]]) != smask[sidx[depth]]) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j) {
              bool want = pat & (1u << pair_bit(j, depth, t));
              ok = g.has_edge(outside[tuple[j]], outside[c]) == want;
            }
            if (!ok) continue;
            tuple[depth] = c;
            if (self(self, depth + 1)) return true;
          }
          return false;
        };
        if (dfs(dfs, 0))
          for (int j = 0; j < t; ++j) marked.insert(outside[tuple[j]]);
        int i = t - 1;
        while (i >= 0 && sidx[i] == (int)subs.size() - 1) sidx[i--] = 0;
        if (i < 0) break;
        ++sidx[i];
      }
    }
  }

  std::vector<int> keep = xs;
  keep.insert(keep.end(), marked.begin(), marked.end());
  auto sub = induced_subgraph(g, keep);

  HereditaryKernel out;
  out.graph = sub.graph;
  out.kept_orig = sub.vertices;
  for (int v : xs) out.modulator.push_back(sub.old_to_new[v]);
  out.report = make_report("hereditary", g, k, d, out.graph, bound, ms_since(t0));
  return out;
}

Equivalence verify_kernel_equivalence(const Graph& g, const std::vector<int>& x, int d,
                                      const FieldSpec& field, KernelAlg alg, FamilyTag family,
                                      int g_of_d, const SearchLimits& lim) {
  try {
    Graph kernel;
    switch (alg) {
      case KernelAlg::General:
        kernel = kernel_general(g, x, d).kg.graph;
        break;
      case KernelAlg::Real:
        kernel = kernel_real(g, x, d).graph;
        break;
      case KernelAlg::Hereditary:
        kernel = kernel_hereditary(g, x, d, family, g_of_d).graph;
        break;
    }
    bool a = decide_od(g, d, field, lim).yes;
    bool b = decide_od(kernel, d, field, lim).yes;
    return a == b ? Equivalence::Equivalent : Equivalence::Different;
  } catch (const CapExceeded&) {
    return Equivalence::Inconclusive;
  }
}

uint64_t k_graph_bit_count(int k, int m, int d) {
  BigInt total = binomial(k, 2);
  for (int i = m; i <= d; ++i) total += binomial(k, i);
  if (total > BigInt(std::numeric_limits<uint64_t>::max()))
    throw CapExceeded("k_graph_bit_count: encoding too large");
  return (uint64_t)total;
}

std::vector<uint8_t> encode_k_graph(const KGraphResult& kg) {
  int k = (int)kg.modulator_orig.size();
  uint64_t nbits = k_graph_bit_count(k, kg.m, kg.d);
  std::vector<uint8_t> bits((nbits + 7) / 8, 0);
  uint64_t at = 0;
  auto push = [&](bool b) {
    if (b) bits[at >> 3] |= (uint8_t)(1u << (at & 7));
    ++at;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) push(kg.graph.has_edge(i, j));
  size_t next = 0;
  for (const auto& s : subsets_by_size(k, kg.m, kg.d)) {
    bool present = next < kg.subset_of.size() && kg.subset_of[next] == s;
    push(present);
    if (present) ++next;
  }
  return bits;
}

KGraphResult decode_k_graph(const std::vector<uint8_t>& bits, int k, int m, int d) {
  uint64_t nbits = k_graph_bit_count(k, m, d);
  if (bits.size() != (nbits + 7) / 8)
    throw std::invalid_argument("decode_k_graph: wrong payload size");
  uint64_t at = 0;
  auto pull = [&]() { return (bits[at >> 3] >> (at & 7)) & 1u ? (++at, true) : (++at, false); };
  KGraphResult res;
  res.m = m;
  res.d = d;
  res.modulator.resize(k);
  res.modulator_orig.resize(k);
  for (int i = 0; i < k; ++i) res.modulator[i] = res.modulator_orig[i] = i;
  std::vector<std::pair<int, int>> xedges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (pull()) xedges.emplace_back(i, j);
  for (const auto& s : subsets_by_size(k, m, d))
    if (pull()) {
      res.subset_of.push_back(s);
      res.witness_of.push_back(-1);
    }
  Graph kg(k + (int)res.subset_of.size());
  for (auto [i, j] : xedges) kg.add_edge(i, j);
  for (size_t a = 0; a < res.subset_of.size(); ++a)
    for (int i : res.subset_of[a]) kg.add_edge(k + (int)a, i);
  res.graph = std::move(kg);
  return res;
}

}  // namespace orthodim
