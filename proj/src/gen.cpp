#include "orthodim/gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "orthodim/rng.hpp"

namespace orthodim {

namespace {

constexpr std::uint64_t kGenStream = 0x67656e5f696e7374ULL;

bool coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

int pick(std::mt19937_64& rng, int n) {
  return (int)std::uniform_int_distribution<long long>(0, n - 1)(rng);
}

// outside-outside edges placing G minus X into the base family
void family_edges(const GenConfig& cfg, const std::vector<int>& outside, std::mt19937_64& rng,
                  std::vector<std::pair<int, int>>& edges) {
  auto add = [&](int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
  switch (cfg.family) {
    case FamilyTag::Empty:
      break;
    case FamilyTag::Path: {
      std::vector<int> order = outside;
      for (int i = (int)order.size() - 1; i > 0; --i) std::swap(order[i], order[pick(rng, i + 1)]);
      for (size_t i = 1; i < order.size(); ++i) add(order[i - 1], order[i]);
      break;
    }
    case FamilyTag::Split:
    case FamilyTag::Cochordal:
    case FamilyTag::UnionSplit:
    case FamilyTag::UnionCochordal: {
      bool base_split =
          cfg.family == FamilyTag::Split || cfg.family == FamilyTag::UnionSplit;
      bool unions =
          cfg.family == FamilyTag::UnionSplit || cfg.family == FamilyTag::UnionCochordal;
      int blocks = unions && outside.size() >= 2 ? 2 : 1;
      std::vector<std::vector<int>> part(blocks);
      for (size_t i = 0; i < outside.size(); ++i)
        part[blocks == 1 ? 0 : (i < outside.size() / 2 ? 0 : 1)].push_back(outside[i]);
      for (const auto& block : part) {
        if (base_split) {
          std::vector<int> clique, indep;
          for (int v : block) (coin(rng, 0.5) ? clique : indep).push_back(v);
          for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) add(clique[i], clique[j]);
          for (int c : clique)
            for (int w : indep)
              if (coin(rng, cfg.density)) add(c, w);
        } else {
          // complement of a random interval graph is cochordal
          std::vector<std::pair<double, double>> iv;
          for (size_t i = 0; i < block.size(); ++i) {
            double a = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            double b = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            iv.emplace_back(std::min(a, b), std::max(a, b));
          }
          for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j) {
              bool overlap = iv[i].first <= iv[j].second && iv[j].first <= iv[i].second;
              if (!overlap) add(block[i], block[j]);
            }
        }
      }
      break;
    }
  }
}

}  // namespace

InstanceFile gen_random(const GenConfig& cfg) {
  if (cfg.n < 0 || cfg.k < 0 || cfg.k > cfg.n)
    throw std::invalid_argument("gen_random: need 0 <= k <= n");
  if (cfg.density < 0.0 || cfg.density > 1.0)
    throw std::invalid_argument("gen_random: density must be in [0, 1]");
  auto rng = make_rng(cfg.seed, kGenStream);

  std::vector<int> ids(cfg.n);
  for (int i = 0; i < cfg.n; ++i) ids[i] = i;
  for (int i = 0; i < cfg.k; ++i) std::swap(ids[i], ids[i + pick(rng, cfg.n - i)]);
  std::vector<int> x(ids.begin(), ids.begin() + cfg.k);
  std::vector<int> outside(ids.begin() + cfg.k, ids.end());
  std::sort(x.begin(), x.end());
  std::sort(outside.begin(), outside.end());

  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (coin(rng, cfg.density)) edges.emplace_back(x[i], x[j]);
  for (int u : x)
    for (int w : outside)
      if (coin(rng, cfg.density)) edges.emplace_back(std::min(u, w), std::max(u, w));
  family_edges(cfg, outside, rng, edges);
  std::sort(edges.begin(), edges.end());

  InstanceFile f;
  f.n = cfg.n;
  f.edges = std::move(edges);
  f.modulator = x;
  if (cfg.with_subspaces) {
    GF gf = cfg.field.as_gf();
    f.field = cfg.field;
    f.d = cfg.d;
    for (int v = 0; v < cfg.n; ++v) {
      Subspace<GF> s = zero_subspace<GF>(cfg.d);
      while (s.dim() == 0) s = random_subspace(gf, cfg.d, 1 + pick(rng, cfg.d), rng);
      std::vector<std::vector<long long>> rows;
      for (const auto& b : s.basis) rows.emplace_back(b.begin(), b.end());
      f.subspaces.emplace(v, std::move(rows));
    }
  }
  return f;
}

Subspace<GF> random_subspace(const GF& f, int d, int rows, std::mt19937_64& rng) {
  std::vector<Vec<GF>> vecs(rows, Vec<GF>(d, 0));
  for (auto& v : vecs)
    for (auto& e : v) e = pick(rng, f.p());
  return span(f, d, std::move(vecs));
}

}  // namespace orthodim
