#pragma once

// Brute-force reference implementations used only by the tests. These stay
// independent of the fast paths they check: the cocycle and form are summed
// pair by pair over supports via f_basis, neighbor sets come from the form
// oracle, and distances come from a plain queue BFS over those sets.

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "commgraph/graph.hpp"
#include "commgraph/group.hpp"

namespace cg::testing {

inline Gf2Vec f_eval_pairs(const GroupParams& p, const Gf2Vec& a, const Gf2Vec& c) {
  Gf2Vec acc = Gf2Vec::zero(p.w_dim());
  for (int i : a.support()) {
    for (int j : c.support()) {
      acc = xor_add(acc, f_basis(p, i, j));
    }
  }
  return acc;
}

inline Gf2Vec form_b_pairs(const GroupParams& p, const Gf2Vec& u, const Gf2Vec& v) {
  return xor_add(f_eval_pairs(p, u, v), f_eval_pairs(p, v, u));
}

inline std::vector<VertexCode> brute_neighbors(const GroupParams& p, VertexCode v) {
  const std::uint32_t n = (std::uint32_t{1} << p.m()) - 1;
  const Gf2Vec vv(v, p.m());
  std::vector<VertexCode> out;
  for (VertexCode u = 1; u <= n; ++u) {
    if (u == v) continue;
    if (form_b_pairs(p, Gf2Vec(u, p.m()), vv).is_zero()) out.push_back(u);
  }
  return out;
}

inline std::vector<std::vector<VertexCode>> brute_adjacency(const GroupParams& p) {
  const std::uint32_t n = (std::uint32_t{1} << p.m()) - 1;
  std::vector<std::vector<VertexCode>> adj(n + 1);
  for (VertexCode v = 1; v <= n; ++v) adj[v] = brute_neighbors(p, v);
  return adj;
}

inline constexpr int kBruteUnreached = std::numeric_limits<int>::max();

inline std::vector<int> brute_bfs(const std::vector<std::vector<VertexCode>>& adj,
                                  VertexCode source) {
  std::vector<int> dist(adj.size(), kBruteUnreached);
  std::queue<VertexCode> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const VertexCode v = q.front();
    q.pop();
    for (VertexCode u : adj[v]) {
      if (dist[u] == kBruteUnreached) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

inline std::uint64_t brute_edge_count(const GroupParams& p) {
  const auto adj = brute_adjacency(p);
  std::uint64_t degree_sum = 0;
  for (std::size_t v = 1; v < adj.size(); ++v) degree_sum += adj[v].size();
  return degree_sum / 2;
}

// Inverse by walking the cyclic group generated by g.
inline GroupElement brute_inverse(const GroupParams& p, const GroupElement& g) {
  const GroupElement e = identity(p);
  GroupElement power = g;
  for (int k = 1; k <= 4; ++k) {
    if (multiply(p, g, power) == e) return power;
    power = multiply(p, power, g);
  }
  return e;  // unreachable: every element has order dividing 4
}

}  // namespace cg::testing
