#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commgraph/group.hpp"

namespace cg {

// Bit encoding of a nonzero vector of V_m; valid codes are 1 .. 2^m - 1.
using VertexCode = std::uint32_t;

inline constexpr std::uint16_t kUnreached = 0xFFFF;

// Compressed adjacency over 1-based vertex ids; slot 0 is unused.
struct Csr {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> offsets;  // size n + 2
  std::vector<VertexCode> adj;

  std::span<const VertexCode> neighbors(VertexCode v) const {
    return {adj.data() + offsets[v], adj.data() + offsets[v + 1]};
  }
  std::uint32_t degree(VertexCode v) const { return offsets[v + 1] - offsets[v]; }
};

struct DistanceMap {
  VertexCode source = 0;
  std::vector<std::uint16_t> dist;  // indexed by code; dist[0] unused
};

enum class DiameterAlgo { kExactAllSources, kPruned };

// diameter/radius of -1 mean infinite (disconnected).
struct DiameterReport {
  int m = 0;
  std::uint64_t n_vertices = 0;
  std::uint64_t n_edges = 0;
  bool connected = false;
  int diameter = -1;
  int radius = -1;
  VertexCode witness_u = 0;
  VertexCode witness_v = 0;
  double elapsed_seconds = 0.0;
};

// ---- engine entry points, usable on any undirected Csr ----

DistanceMap bfs_csr(const Csr& g, VertexCode source);

// Per-source eccentricities (kUnreached when the source misses part of
// the graph) plus the first farthest vertex per source.
struct SweepResult {
  std::vector<std::uint16_t> ecc;
  std::vector<VertexCode> farthest;
};

SweepResult all_sources_sweep_serial(const Csr& g);
SweepResult all_sources_sweep_parallel(const Csr& g, int threads = 0);

// Exact diameter/radius; threads only affects the all-sources sweep.
DiameterReport diameter_of(const Csr& g, DiameterAlgo algo, int threads = 0);

// ---- the commuting graph on the nonzero transversal vectors ----

inline constexpr std::uint64_t kDefaultCacheBudget = std::uint64_t{1} << 30;
inline constexpr int kGraphMaxM = 24;

// Vertices are the nonzero v in V_m; u ~ v iff B(u, v) = 0. Adjacency is
// implicit: neighbor lists come from the kernel of phi_matrix(v) and are
// cached in CSR form when the estimate fits the memory budget.
class CommutingGraph {
 public:
  explicit CommutingGraph(const GroupParams& p,
                          std::uint64_t cache_budget_bytes = kDefaultCacheBudget);

  const GroupParams& params() const { return params_; }
  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return n_edges_; }
  std::uint32_t degree(VertexCode v) const;
  std::uint32_t min_degree() const;
  bool adjacency_cached() const { return cached_; }

  // Kernel-of-phi enumeration minus {0, v}, in span enumeration order.
  std::vector<VertexCode> neighbors(VertexCode v) const;

  DistanceMap bfs(VertexCode source) const;
  // nullopt means infinite (some vertex unreached).
  std::optional<int> eccentricity(VertexCode v) const;
  bool connected() const;
  DiameterReport diameter(DiameterAlgo algo, int threads = 0) const;

 private:
  void require_code(VertexCode v) const;

  GroupParams params_;
  std::uint32_t n_ = 0;
  std::uint64_t n_edges_ = 0;
  std::vector<std::uint32_t> degrees_;
  bool cached_ = false;
  Csr csr_;
};

// ---- the explicit commuting graph on all non-central elements ----

inline constexpr int kExplicitGraphMaxM = 7;

struct ExplicitCommutingGraph {
  int m = 0;
  std::uint32_t n = 0;  // (2^m - 1) * 2^(m-2)
  Csr csr;              // 1-based ids

  GroupElement element_of(std::uint32_t id) const;
  std::uint32_t id_of(const GroupElement& g) const;
};

ExplicitCommutingGraph full_commuting_graph(const GroupParams& p);

// Checks the coordinate bijection (v, w) -> (base vertex v, clone w)
// against the lexicographic product adjacency rule, and that both
// diameters agree. 4 <= m <= 6.
bool lex_product_check(const GroupParams& p);

// ---- exports ----

std::string vertex_label(const GroupParams& p, VertexCode v);  // "x1+x3"

void write_dot(const CommutingGraph& g, std::ostream& out);            // m <= 6
void write_adjacency_csv(const CommutingGraph& g, std::ostream& out);  // m <= 10

}  // namespace cg
