#include "commgraph/graph.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<VertexCode> compute_neighbors(const GroupParams& p, VertexCode v) {
  const Gf2Vec vec(v, p.m());
  const std::vector<Gf2Vec> basis = nullspace(phi_matrix(p, vec));
  const std::vector<Gf2Vec> members = span_enumerate(basis);
  std::vector<VertexCode> out;
  out.reserve(members.size() - 2);
  for (const Gf2Vec& s : members) {
    const VertexCode code = static_cast<VertexCode>(s.bits());
    if (code != 0 && code != v) out.push_back(code);
  }
  return out;
}

void check_level_fits(int level) {
  if (level >= int(kUnreached) - 1) {
    throw std::length_error("bfs: distance exceeds the 16-bit range");
  }
}

template <typename NbrFn>
DistanceMap bfs_generic(std::uint32_t n, VertexCode source, NbrFn&& nbrs) {
  if (source < 1 || source > n) {
    throw std::invalid_argument("bfs: source code out of range");
  }
  DistanceMap out;
  out.source = source;
  out.dist.assign(n + 1, kUnreached);
  out.dist[source] = 0;
  std::vector<VertexCode> cur{source}, next;
  int level = 0;
  while (!cur.empty()) {
    check_level_fits(level);
    ++level;
    next.clear();
    for (VertexCode v : cur) {
      for (VertexCode u : nbrs(v)) {
        if (out.dist[u] == kUnreached) {
          out.dist[u] = static_cast<std::uint16_t>(level);
          next.push_back(u);
        }
      }
    }
    std::swap(cur, next);
  }
  return out;
}

// Visited marks are epoch labels so the sweep never clears its arrays.
struct EccScratch {
  std::vector<std::uint32_t> mark;
  std::uint32_t epoch = 0;
  std::vector<VertexCode> cur, next;
};

struct EccOut {
  int level = 0;
  std::uint32_t reached = 0;
  VertexCode farthest = 0;  // smallest code on the last BFS level
};

EccOut bfs_ecc(const Csr& g, VertexCode s, EccScratch& sc) {
  if (sc.mark.size() != g.n + 1) {
    sc.mark.assign(g.n + 1, 0);
    sc.epoch = 0;
  }
  const std::uint32_t ep = ++sc.epoch;
  sc.cur.clear();
  sc.cur.push_back(s);
  sc.mark[s] = ep;
  EccOut out{0, 1, s};
  while (true) {
    sc.next.clear();
    for (VertexCode v : sc.cur) {
      for (VertexCode u : g.neighbors(v)) {
        if (sc.mark[u] != ep) {
          sc.mark[u] = ep;
          sc.next.push_back(u);
        }
      }
    }
    if (sc.next.empty()) break;
    check_level_fits(out.level);
    ++out.level;
    out.reached += static_cast<std::uint32_t>(sc.next.size());
    out.farthest = *std::min_element(sc.next.begin(), sc.next.end());
    std::swap(sc.cur, sc.next);
  }
  return out;
}

void reduce_sweep(const Csr& g, const SweepResult& sweep, DiameterReport& rep) {
  int diam = 0;
  int rad = INT_MAX;
  for (VertexCode v = 1; v <= g.n; ++v) {
    diam = std::max(diam, int(sweep.ecc[v]));
    rad = std::min(rad, int(sweep.ecc[v]));
  }
  rep.diameter = diam;
  rep.radius = rad;
  for (VertexCode v = 1; v <= g.n; ++v) {
    if (int(sweep.ecc[v]) == diam) {
      rep.witness_u = v;
      rep.witness_v = sweep.farthest[v];
      break;
    }
  }
}

// Bound-sweep diameter/radius: repeated BFS from bound extremes with
// per-vertex eccentricity intervals, exact on termination.
void run_pruned(const Csr& g, DiameterReport& rep) {
  const std::uint32_t n = g.n;
  std::vector<int> lb(n + 1, 0), ub(n + 1, INT_MAX);
  std::vector<char> alive(n + 1, 1);
  alive[0] = 0;
  std::uint32_t alive_count = n;
  int diam_lb = 0, rad_ub = INT_MAX;
  VertexCode wit_u = 1, wit_v = 1;
  bool wit_resolved = false;

  std::vector<std::uint16_t> dist;
  std::vector<VertexCode> cur, next;
  const auto bfs_dist = [&](VertexCode s, VertexCode& farthest) -> int {
    dist.assign(n + 1, kUnreached);
    dist[s] = 0;
    cur.clear();
    cur.push_back(s);
    int level = 0;
    farthest = s;
    while (true) {
      check_level_fits(level);
      next.clear();
      for (VertexCode v : cur) {
        for (VertexCode u : g.neighbors(v)) {
          if (dist[u] == kUnreached) {
            dist[u] = static_cast<std::uint16_t>(level + 1);
            next.push_back(u);
          }
        }
      }
      if (next.empty()) break;
      ++level;
      farthest = *std::min_element(next.begin(), next.end());
      std::swap(cur, next);
    }
    return level;
  };

  VertexCode current = 1;
  for (VertexCode v = 2; v <= n; ++v) {
    if (g.degree(v) > g.degree(current)) current = v;
  }

  bool pick_hi = true;
  while (alive_count > 0) {
    VertexCode far = current;
    const int e = bfs_dist(current, far);
    if (e > diam_lb) {
      diam_lb = e;
      wit_u = current;
      wit_v = far;
      wit_resolved = true;
    }
    rad_ub = std::min(rad_ub, e);

    for (VertexCode w = 1; w <= n; ++w) {
      if (!alive[w]) continue;
      const int d = dist[w];
      lb[w] = std::max({lb[w], d, e - d});
      ub[w] = std::min(ub[w], e + d);
      if (lb[w] == ub[w]) {
        if (lb[w] > diam_lb) {
          diam_lb = lb[w];
          wit_u = w;
          wit_resolved = false;
        }
        rad_ub = std::min(rad_ub, lb[w]);
        alive[w] = 0;
        --alive_count;
      }
    }
    for (VertexCode w = 1; w <= n; ++w) {
      if (alive[w] && ub[w] <= diam_lb && lb[w] >= rad_ub) {
        alive[w] = 0;
        --alive_count;
      }
    }
    if (alive_count == 0) break;

    VertexCode best = 0;
    if (pick_hi) {
      int best_ub = -1;
      for (VertexCode w = 1; w <= n; ++w) {
        if (alive[w] && ub[w] > best_ub) {
          best_ub = ub[w];
          best = w;
        }
      }
    } else {
      int best_lb = INT_MAX;
      for (VertexCode w = 1; w <= n; ++w) {
        if (alive[w] && lb[w] < best_lb) {
          best_lb = lb[w];
          best = w;
        }
      }
    }
    pick_hi = !pick_hi;
    current = best;
  }

  if (!wit_resolved) {
    VertexCode far = wit_u;
    bfs_dist(wit_u, far);
    wit_v = far;
  }
  rep.diameter = diam_lb;
  rep.radius = rad_ub;
  rep.witness_u = wit_u;
  rep.witness_v = wit_v;
}

}  // namespace

DistanceMap bfs_csr(const Csr& g, VertexCode source) {
  return bfs_generic(g.n, source, [&g](VertexCode v) { return g.neighbors(v); });
}

SweepResult all_sources_sweep_serial(const Csr& g) {
  SweepResult r;
  r.ecc.assign(g.n + 1, kUnreached);
  r.farthest.assign(g.n + 1, 0);
  EccScratch sc;
  for (VertexCode v = 1; v <= g.n; ++v) {
    const EccOut e = bfs_ecc(g, v, sc);
    if (e.reached == g.n) r.ecc[v] = static_cast<std::uint16_t>(e.level);
    r.farthest[v] = e.farthest;
  }
  return r;
}

SweepResult all_sources_sweep_parallel(const Csr& g, int threads) {
#ifndef _OPENMP
  (void)threads;
  return all_sources_sweep_serial(g);
#else
  SweepResult r;
  r.ecc.assign(g.n + 1, kUnreached);
  r.farthest.assign(g.n + 1, 0);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
  {
    EccScratch sc;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t v = 1; v <= std::int64_t(g.n); ++v) {
      const EccOut e = bfs_ecc(g, static_cast<VertexCode>(v), sc);
      if (e.reached == g.n) r.ecc[v] = static_cast<std::uint16_t>(e.level);
      r.farthest[v] = e.farthest;
    }
  }
  return r;
#endif
}

DiameterReport diameter_of(const Csr& g, DiameterAlgo algo, int threads) {
  if (g.n == 0) throw std::invalid_argument("diameter_of: empty graph");
  const auto t0 = Clock::now();
  DiameterReport rep;
  rep.n_vertices = g.n;
  rep.n_edges = g.adj.size() / 2;

  EccScratch probe_scratch;
  const EccOut probe = bfs_ecc(g, 1, probe_scratch);
  if (probe.reached != g.n) {
    rep.connected = false;  // diameter and radius stay infinite
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
  }
  rep.connected = true;

  if (algo == DiameterAlgo::kExactAllSources) {
    const SweepResult sweep = threads == 1 ? all_sources_sweep_serial(g)
                                           : all_sources_sweep_parallel(g, threads);
    reduce_sweep(g, sweep, rep);
  } else {
    run_pruned(g, rep);
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

namespace {

Csr build_adjacency(const GroupParams& p, const std::vector<std::uint32_t>& degrees,
                    std::uint32_t n) {
  Csr g;
  g.n = n;
  g.offsets.assign(n + 2, 0);
  for (VertexCode v = 1; v <= n; ++v) {
    g.offsets[v + 1] = g.offsets[v] + degrees[v];
  }
  g.adj.resize(g.offsets[n + 1]);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
  for (std::int64_t v = 1; v <= std::int64_t(n); ++v) {
    const std::vector<VertexCode> nb = compute_neighbors(p, static_cast<VertexCode>(v));
    std::copy(nb.begin(), nb.end(), g.adj.begin() + g.offsets[v]);
  }
  return g;
}

}  // namespace

CommutingGraph::CommutingGraph(const GroupParams& p, std::uint64_t cache_budget_bytes)
    : params_(p) {
  if (p.m() < 4) {
    throw std::invalid_argument("CommutingGraph: graph semantics require m >= 4");
  }
  if (p.m() > kGraphMaxM) {
    throw std::length_error("CommutingGraph: m > " + std::to_string(kGraphMaxM) +
                            " exceeds the vertex budget");
  }
  n_ = (std::uint32_t{1} << p.m()) - 1;
  degrees_.assign(n_ + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t v = 1; v <= std::int64_t(n_); ++v) {
    const Gf2Vec vec(static_cast<std::uint64_t>(v), params_.m());
    const int r = rank(phi_matrix(params_, vec));
    degrees_[v] = (std::uint32_t{1} << (params_.m() - r)) - 2;
  }
  const std::uint64_t degree_sum =
      std::accumulate(degrees_.begin(), degrees_.end(), std::uint64_t{0});
  n_edges_ = degree_sum / 2;

  const std::uint64_t bytes = (degree_sum + n_ + 2) * sizeof(std::uint32_t);
  if (bytes <= cache_budget_bytes) {
    csr_ = build_adjacency(params_, degrees_, n_);
    cached_ = true;
  }
}

void CommutingGraph::require_code(VertexCode v) const {
  if (v < 1 || v > n_) {
    throw std::invalid_argument("CommutingGraph: vertex code " + std::to_string(v) +
                                " outside [1, " + std::to_string(n_) + "]");
  }
}

std::uint32_t CommutingGraph::degree(VertexCode v) const {
  require_code(v);
  return degrees_[v];
}

std::uint32_t CommutingGraph::min_degree() const {
  return *std::min_element(degrees_.begin() + 1, degrees_.end());
}

std::vector<VertexCode> CommutingGraph::neighbors(VertexCode v) const {
  require_code(v);
  if (cached_) {
    const auto span = csr_.neighbors(v);
    return {span.begin(), span.end()};
  }
  return compute_neighbors(params_, v);
}

DistanceMap CommutingGraph::bfs(VertexCode source) const {
  require_code(source);
  if (cached_) return bfs_csr(csr_, source);
  return bfs_generic(n_, source,
                     [this](VertexCode v) { return compute_neighbors(params_, v); });
}

std::optional<int> CommutingGraph::eccentricity(VertexCode v) const {
  const DistanceMap dm = bfs(v);
  int ecc = 0;
  for (VertexCode u = 1; u <= n_; ++u) {
    if (dm.dist[u] == kUnreached) return std::nullopt;
    ecc = std::max(ecc, int(dm.dist[u]));
  }
  return ecc;
}

bool CommutingGraph::connected() const {
  const DistanceMap dm = bfs(1);
  for (VertexCode u = 1; u <= n_; ++u) {
    if (dm.dist[u] == kUnreached) return false;
  }
  return true;
}

DiameterReport CommutingGraph::diameter(DiameterAlgo algo, int threads) const {
  const auto t0 = Clock::now();
  DiameterReport rep;
  if (cached_) {
    rep = diameter_of(csr_, algo, threads);
  } else {
    // The sweep needs materialized adjacency; build it transiently.
    const Csr tmp = build_adjacency(params_, degrees_, n_);
    rep = diameter_of(tmp, algo, threads);
  }
  rep.m = params_.m();
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

GroupElement ExplicitCommutingGraph::element_of(std::uint32_t id) const {
  if (id < 1 || id > n) {
    throw std::invalid_argument("ExplicitCommutingGraph: id out of range");
  }
  const std::uint32_t zsize = std::uint32_t{1} << (m - 2);
  const std::uint32_t vcode = (id - 1) / zsize + 1;
  const std::uint32_t wbits = (id - 1) % zsize;
  return GroupElement{Gf2Vec(vcode, m), Gf2Vec(wbits, m - 2)};
}

std::uint32_t ExplicitCommutingGraph::id_of(const GroupElement& g) const {
  if (g.v.is_zero()) {
    throw std::invalid_argument("ExplicitCommutingGraph: central element has no id");
  }
  const std::uint32_t zsize = std::uint32_t{1} << (m - 2);
  return static_cast<std::uint32_t>((g.v.bits() - 1) * zsize + g.w.bits()) + 1;
}

ExplicitCommutingGraph full_commuting_graph(const GroupParams& p) {
  if (p.m() < 4) {
    throw std::invalid_argument("full_commuting_graph: m >= 4 required");
  }
  if (p.m() > kExplicitGraphMaxM) {
    throw std::length_error("full_commuting_graph: explicit form capped at m <= " +
                            std::to_string(kExplicitGraphMaxM));
  }
  const std::uint32_t zsize = std::uint32_t{1} << (p.m() - 2);
  const std::uint32_t vstar = (std::uint32_t{1} << p.m()) - 1;

  ExplicitCommutingGraph out;
  out.m = p.m();
  out.n = vstar * zsize;

  const CommutingGraph star(p);

  out.csr.n = out.n;
  out.csr.offsets.assign(out.n + 2, 0);
  for (std::uint32_t id = 1; id <= out.n; ++id) {
    const std::uint32_t vcode = (id - 1) / zsize + 1;
    const std::uint32_t deg = (zsize - 1) + zsize * star.degree(vcode);
    out.csr.offsets[id + 1] = out.csr.offsets[id] + deg;
  }
  out.csr.adj.resize(out.csr.offsets[out.n + 1]);

  for (std::uint32_t vcode = 1; vcode <= vstar; ++vcode) {
    std::vector<VertexCode> star_nbrs = star.neighbors(vcode);
    std::sort(star_nbrs.begin(), star_nbrs.end());
    for (std::uint32_t w = 0; w < zsize; ++w) {
      const std::uint32_t id = (vcode - 1) * zsize + w + 1;
      std::uint32_t pos = out.csr.offsets[id];
      for (std::uint32_t w2 = 0; w2 < zsize; ++w2) {
        if (w2 != w) out.csr.adj[pos++] = (vcode - 1) * zsize + w2 + 1;
      }
      for (VertexCode u : star_nbrs) {
        for (std::uint32_t w2 = 0; w2 < zsize; ++w2) {
          out.csr.adj[pos++] = (u - 1) * zsize + w2 + 1;
        }
      }
    }
  }
  return out;
}

bool lex_product_check(const GroupParams& p) {
  if (p.m() < 4 || p.m() > 6) {
    throw std::invalid_argument("lex_product_check: requires 4 <= m <= 6");
  }
  const ExplicitCommutingGraph full = full_commuting_graph(p);
  const std::uint32_t n = full.n;

  // Adjacency matrix of the explicit graph, for O(1) pair queries.
  const std::size_t words = (n + 2 + 63) / 64;
  std::vector<std::uint64_t> adjbits(std::size_t(n + 1) * words, 0);
  for (std::uint32_t id = 1; id <= n; ++id) {
    for (VertexCode u : full.csr.neighbors(id)) {
      adjbits[std::size_t(id) * words + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
  const auto has_edge = [&](std::uint32_t a, std::uint32_t b) {
    return (adjbits[std::size_t(a) * words + b / 64] >> (b % 64)) & 1;
  };

  for (std::uint32_t id1 = 1; id1 <= n; ++id1) {
    const GroupElement g1 = full.element_of(id1);
    for (std::uint32_t id2 = id1 + 1; id2 <= n; ++id2) {
      const GroupElement g2 = full.element_of(id2);
      const bool expected = (g1.v == g2.v) ? (g1.w != g2.w)
                                           : commutes(p, g1.v, g2.v);
      if (bool(has_edge(id1, id2)) != expected) return false;
    }
  }

  const DiameterReport dfull = diameter_of(full.csr, DiameterAlgo::kExactAllSources);
  const CommutingGraph star(p);
  const DiameterReport dstar = star.diameter(DiameterAlgo::kExactAllSources);
  return dfull.connected && dstar.connected && dfull.diameter == dstar.diameter;
}

std::string vertex_label(const GroupParams& p, VertexCode v) {
  return v_to_string(Gf2Vec(v, p.m()));
}

void write_dot(const CommutingGraph& g, std::ostream& out) {
  const int m = g.params().m();
  if (m > 6) {
    throw std::length_error("write_dot: DOT export capped at m <= 6");
  }
  out << "graph commuting_star_" << m << " {\n";
  for (VertexCode v = 1; v <= g.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << vertex_label(g.params(), v) << "\"];\n";
  }
  for (VertexCode v = 1; v <= g.vertex_count(); ++v) {
    std::vector<VertexCode> nbrs = g.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    for (VertexCode u : nbrs) {
      if (u > v) out << "  v" << v << " -- v" << u << ";\n";
    }
  }
  out << "}\n";
}

void write_adjacency_csv(const CommutingGraph& g, std::ostream& out) {
  const int m = g.params().m();
  if (m > 10) {
    throw std::length_error("write_adjacency_csv: CSV export capped at m <= 10");
  }
  out << "code_u,code_v\n";
  for (VertexCode v = 1; v <= g.vertex_count(); ++v) {
    std::vector<VertexCode> nbrs = g.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    for (VertexCode u : nbrs) {
      if (u > v) out << v << ',' << u << '\n';
    }
  }
}

}  // namespace cg
