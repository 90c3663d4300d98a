#include "commgraph/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require_m_range(const GroupParams& p, int lo, int hi, const char* op) {
  if (p.m() < lo) {
    throw std::invalid_argument(std::string(op) + ": requires m >= " + std::to_string(lo));
  }
  if (p.m() > hi) {
    throw std::length_error(std::string(op) + ": capped at m <= " + std::to_string(hi));
  }
}

// All 2^(2m-2) elements of the group, identity first.
std::vector<GroupElement> enumerate_group(const GroupParams& p) {
  const std::uint64_t zsize = std::uint64_t{1} << p.w_dim();
  const std::uint64_t vsize = std::uint64_t{1} << p.m();
  std::vector<GroupElement> out;
  out.reserve(vsize * zsize);
  for (std::uint64_t v = 0; v < vsize; ++v) {
    for (std::uint64_t w = 0; w < zsize; ++w) {
      out.push_back(GroupElement{Gf2Vec(v, p.m()), Gf2Vec(w, p.w_dim())});
    }
  }
  return out;
}

std::uint64_t element_key(const GroupParams& p, const GroupElement& g) {
  return (g.v.bits() << p.w_dim()) | g.w.bits();
}

// The four vectors of the 2-dimensional subspace spanned by two basis indices.
std::set<std::uint64_t> two_gen_span(int a, int b) {
  const std::uint64_t ba = std::uint64_t{1} << (a - 1);
  const std::uint64_t bb = std::uint64_t{1} << (b - 1);
  return {0, ba, bb, ba | bb};
}

std::set<std::uint64_t> span_set(const std::vector<Gf2Vec>& basis) {
  std::set<std::uint64_t> out;
  for (const Gf2Vec& s : span_enumerate(basis)) out.insert(s.bits());
  return out;
}

std::string join_codes(const std::set<std::uint64_t>& codes, int m) {
  std::string out;
  for (std::uint64_t c : codes) {
    if (!out.empty()) out += ", ";
    out += v_to_string(Gf2Vec(c, m));
  }
  return out;
}

ClaimResult make_result(std::string claim_id, int m, bool passed, std::string details,
                        Clock::time_point t0) {
  return ClaimResult{std::move(claim_id), m, passed, std::move(details),
                     seconds_since(t0)};
}

}  // namespace

namespace {

// Explicit centralizer of (x_idx, 0): every element commuting with it,
// found by exhaustive multiplication over the whole group.
bool explicit_centralizer_matches(const GroupParams& p, int idx,
                                  const std::set<std::uint64_t>& v_span,
                                  std::string& mismatch) {
  const GroupElement target{Gf2Vec::unit(idx, p.m()), Gf2Vec::zero(p.w_dim())};
  for (const GroupElement& g : enumerate_group(p)) {
    const bool commutes_with = multiply(p, g, target) == multiply(p, target, g);
    const bool expected = v_span.count(g.v.bits()) != 0;
    if (commutes_with != expected) {
      mismatch = to_string(p, g) + (commutes_with ? " commutes with x" : " misses x") +
                 std::to_string(idx);
      return false;
    }
  }
  return true;
}

}  // namespace

ClaimResult verify_centralizers(const GroupParams& p, int explicit_cap) {
  require_m_range(p, 4, 20, "verify_centralizers");
  const auto t0 = Clock::now();
  const int m = p.m();

  const auto kernel_of = [&](int idx) {
    return span_set(nullspace(phi_matrix(p, Gf2Vec::unit(idx, m))));
  };
  const std::set<std::uint64_t> ker_x1 = kernel_of(1);
  const std::set<std::uint64_t> ker_xm = kernel_of(m);
  const std::set<std::uint64_t> want_x1 = two_gen_span(1, 2);
  const std::set<std::uint64_t> want_xm = two_gen_span(m - 1, m);

  bool ok = ker_x1 == want_x1 && ker_xm == want_xm;
  std::string details;
  if (ok) {
    details = "ker phi_x1 = {" + join_codes(ker_x1, m) + "}, ker phi_x" +
              std::to_string(m) + " = {" + join_codes(ker_xm, m) + "}";
  } else {
    details = "expected span{x1,x2} and span{x" + std::to_string(m - 1) + ",x" +
              std::to_string(m) + "}; got {" + join_codes(ker_x1, m) + "} and {" +
              join_codes(ker_xm, m) + "}";
  }

  // Up to the explicit cap, confirm the full centralizers element by
  // element: C((x1,0)) = {(v,w) : v in span{x1,x2}} and likewise at x_m.
  if (ok && m <= explicit_cap) {
    std::string mismatch;
    if (!explicit_centralizer_matches(p, 1, want_x1, mismatch) ||
        !explicit_centralizer_matches(p, m, want_xm, mismatch)) {
      ok = false;
      details = "explicit centralizer mismatch: " + mismatch;
    } else {
      details += "; explicit centralizers confirmed over all " +
                 std::to_string(std::uint64_t{1} << (2 * m - 2)) + " elements";
    }
  }
  return make_result("lemma_facts_i", m, ok, std::move(details), t0);
}

ClaimResult verify_center_derived_special(const GroupParams& p, int cap) {
  require_m_range(p, 4, cap, "verify_center_derived_special");
  const auto t0 = Clock::now();
  const int m = p.m();
  const std::vector<GroupElement> all = enumerate_group(p);
  const GroupElement e = identity(p);

  // Centre by exhaustive commutation.
  std::set<std::uint64_t> centre;
  for (const GroupElement& g : all) {
    bool central = true;
    for (const GroupElement& h : all) {
      const GroupElement lhs = multiply(p, g, h);
      const GroupElement rhs = multiply(p, h, g);
      if (!(lhs == rhs)) {
        central = false;
        break;
      }
    }
    if (central) centre.insert(element_key(p, g));
  }

  const std::uint64_t want_order = std::uint64_t{1} << p.w_dim();
  bool centre_is_w = centre.size() == want_order;
  for (const GroupElement& g : all) {
    const bool in_centre = centre.count(element_key(p, g)) != 0;
    if (in_centre != g.v.is_zero()) {
      centre_is_w = false;
      break;
    }
  }
  if (!centre_is_w) {
    return make_result("lemma_facts_ii_special", m, false,
                       "centre differs from {(0,w)}: order " +
                           std::to_string(centre.size()) + ", expected " +
                           std::to_string(want_order),
                       t0);
  }

  // Derived subgroup: closure of all commutators g^-1 h^-1 g h.
  std::set<std::uint64_t> commutators;
  for (const GroupElement& g : all) {
    for (const GroupElement& h : all) {
      const GroupElement c = multiply(
          p, multiply(p, inverse(p, g), inverse(p, h)), multiply(p, g, h));
      commutators.insert(element_key(p, c));
      if (!c.v.is_zero()) {
        return make_result("lemma_facts_ii_special", m, false,
                           "non-central commutator [" + to_string(p, g) + ", " +
                               to_string(p, h) + "] = " + to_string(p, c),
                           t0);
      }
    }
  }
  std::set<std::uint64_t> derived{element_key(p, e)};
  std::vector<GroupElement> frontier{e};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : frontier) {
      for (std::uint64_t key : commutators) {
        const GroupElement c{Gf2Vec(0, m), Gf2Vec(key & ((std::uint64_t{1} << p.w_dim()) - 1),
                                                  p.w_dim())};
        const GroupElement prod = multiply(p, g, c);
        if (derived.insert(element_key(p, prod)).second) next.push_back(prod);
      }
    }
    frontier = std::move(next);
  }
  if (derived != centre) {
    return make_result("lemma_facts_ii_special", m, false,
                       "derived subgroup has order " + std::to_string(derived.size()) +
                           ", centre has order " + std::to_string(centre.size()),
                       t0);
  }

  // Squares central; centre and quotient elementary abelian.
  for (const GroupElement& g : all) {
    const GroupElement sq = square(p, g);
    if (!(multiply(p, g, g) == sq)) {
      return make_result("lemma_facts_ii_special", m, false,
                         "square formula mismatch at " + to_string(p, g), t0);
    }
    if (!centre.count(element_key(p, sq))) {
      return make_result("lemma_facts_ii_special", m, false,
                         "square outside the centre: " + to_string(p, g), t0);
    }
  }
  for (std::uint64_t zk : centre) {
    const GroupElement z{Gf2Vec(0, m),
                         Gf2Vec(zk & ((std::uint64_t{1} << p.w_dim()) - 1), p.w_dim())};
    if (!(multiply(p, z, z) == e)) {
      return make_result("lemma_facts_ii_special", m, false,
                         "central element of order > 2: " + to_string(p, z), t0);
    }
  }

  return make_result("lemma_facts_ii_special", m, true,
                     "|Z| = " + std::to_string(centre.size()) +
                         ", [H,H] = Z, squares in Z, Z and H/Z elementary abelian",
                     t0);
}

ClaimResult verify_transversal(const GroupParams& p, int cap) {
  require_m_range(p, 4, cap, "verify_transversal");
  const auto t0 = Clock::now();
  const int m = p.m();
  const std::vector<GroupElement> all = enumerate_group(p);
  const std::uint64_t zsize = std::uint64_t{1} << p.w_dim();

  // Coset key: the minimum element key of h * Z, computed by multiplication.
  std::map<std::uint64_t, int> transversal_hits;
  for (const GroupElement& h : all) {
    std::uint64_t key = ~std::uint64_t{0};
    for (std::uint64_t w = 0; w < zsize; ++w) {
      const GroupElement z{Gf2Vec(0, m), Gf2Vec(w, p.w_dim())};
      key = std::min(key, element_key(p, multiply(p, h, z)));
    }
    transversal_hits.try_emplace(key, 0);
    if (h.w.is_zero()) ++transversal_hits[key];
  }

  const std::uint64_t want_cosets = std::uint64_t{1} << m;
  if (transversal_hits.size() != want_cosets) {
    return make_result("lemma_facts_iii", m, false,
                       std::to_string(transversal_hits.size()) +
                           " cosets, expected " + std::to_string(want_cosets),
                       t0);
  }
  for (const auto& [key, hits] : transversal_hits) {
    if (hits != 1) {
      return make_result("lemma_facts_iii", m, false,
                         "coset with " + std::to_string(hits) +
                             " transversal elements (key " + std::to_string(key) + ")",
                         t0);
    }
  }
  return make_result("lemma_facts_iii", m, true,
                     std::to_string(want_cosets) +
                         " cosets, each meeting {(v,0)} exactly once",
                     t0);
}

ClaimResult verify_subgroup_embedding(const GroupParams& p, int cap) {
  require_m_range(p, 5, cap, "verify_subgroup_embedding");
  const auto t0 = Clock::now();
  const int m = p.m();
  const GroupParams q(m - 1);
  const std::vector<GroupElement> small = enumerate_group(q);

  // Homomorphism and injectivity of the padding map.
  std::set<std::uint64_t> image;
  for (const GroupElement& g : small) image.insert(element_key(p, embed_element(q, g)));
  if (image.size() != small.size()) {
    return make_result("lemma_facts_iv", m, false, "padding map is not injective", t0);
  }
  for (const GroupElement& g : small) {
    for (const GroupElement& h : small) {
      const GroupElement lhs = embed_element(q, multiply(q, g, h));
      const GroupElement rhs = multiply(p, embed_element(q, g), embed_element(q, h));
      if (!(lhs == rhs)) {
        return make_result("lemma_facts_iv", m, false,
                           "not a homomorphism at " + to_string(q, g) + " * " +
                               to_string(q, h),
                           t0);
      }
    }
  }

  // Image equals the subgroup generated by the first m-1 involutions.
  std::vector<GroupElement> gens;
  for (int i = 1; i < m; ++i) {
    gens.push_back(GroupElement{Gf2Vec::unit(i, m), Gf2Vec::zero(p.w_dim())});
  }
  std::set<std::uint64_t> generated{element_key(p, identity(p))};
  std::vector<GroupElement> frontier{identity(p)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : frontier) {
      for (const GroupElement& s : gens) {
        const GroupElement prod = multiply(p, g, s);
        if (generated.insert(element_key(p, prod)).second) next.push_back(prod);
      }
    }
    frontier = std::move(next);
  }
  if (generated != image) {
    return make_result("lemma_facts_iv", m, false,
                       "generated subgroup has order " + std::to_string(generated.size()) +
                           ", image has order " + std::to_string(image.size()),
                       t0);
  }
  return make_result("lemma_facts_iv", m, true,
                     "injective homomorphism onto the subgroup of order " +
                         std::to_string(generated.size()),
                     t0);
}

ClaimResult verify_support_bound(const GroupParams& p) {
  require_m_range(p, 4, 20, "verify_support_bound");
  const auto t0 = Clock::now();
  const int m = p.m();
  const CommutingGraph graph(p);
  const DistanceMap dm = graph.bfs(1);

  std::map<int, int> level_max;
  int violations = 0;
  std::string first_violation;
  for (VertexCode v = 1; v <= graph.vertex_count(); ++v) {
    if (dm.dist[v] == kUnreached || dm.dist[v] == 0) continue;
    const int d = dm.dist[v];
    const int idx = Gf2Vec(v, m).max_support_index();
    auto [it, inserted] = level_max.try_emplace(d, idx);
    if (!inserted) it->second = std::max(it->second, idx);
    if (d - 1 >= 31) continue;
    const std::int64_t half = std::int64_t{1} << (d - 1);
    if (half >= m) continue;  // lemma hypothesis m > 2^(d-1)
    if (idx > half + 1) {
      ++violations;
      if (first_violation.empty()) {
        first_violation = v_to_string(Gf2Vec(v, m)) + " at distance " +
                          std::to_string(d) + " has index " + std::to_string(idx) +
                          " > " + std::to_string(half + 1);
      }
    }
  }

  std::ostringstream summary;
  for (const auto& [d, idx] : level_max) {
    if (summary.tellp() > 0) summary << "; ";
    summary << "d=" << d << " max_index=" << idx;
  }
  if (violations > 0) {
    return make_result("support_bound", m, false,
                       std::to_string(violations) + " violations, first: " +
                           first_violation,
                       t0);
  }
  return make_result("support_bound", m, true, summary.str(), t0);
}

ClaimResult verify_log_lower_bound(const GroupParams& p) {
  require_m_range(p, 4, 20, "verify_log_lower_bound");
  const auto t0 = Clock::now();
  const int m = p.m();
  const CommutingGraph graph(p);
  const DistanceMap dm = graph.bfs(1);
  const VertexCode xm = VertexCode{1} << (m - 1);
  const int bound = 1 + static_cast<int>(std::bit_width(static_cast<std::uint32_t>(m - 2)));

  if (dm.dist[xm] == kUnreached) {
    return make_result("log_lower_bound", m, false, "x" + std::to_string(m) +
                           " unreachable from x1", t0);
  }
  const int d = dm.dist[xm];
  const bool ok = d >= bound;
  return make_result("log_lower_bound", m, ok,
                     "d(x1, x" + std::to_string(m) + ") = " + std::to_string(d) +
                         ", bound " + std::to_string(bound),
                     t0);
}

ClaimResult verify_gamma4_star() {
  const auto t0 = Clock::now();
  const GroupParams p(4);
  const CommutingGraph graph(p);
  const DiameterReport rep = graph.diameter(DiameterAlgo::kExactAllSources);
  const bool ok = graph.vertex_count() == 15 && rep.connected && rep.diameter == 3;
  return make_result("gamma4_star", 4, ok,
                     std::to_string(graph.vertex_count()) + " vertices, " +
                         (rep.connected ? "connected" : "disconnected") +
                         ", diameter " + std::to_string(rep.diameter),
                     t0);
}

std::vector<ClaimResult> verify_diameter_table(int from, int to, int threads) {
  if (from < 4 || from > to || to > 20) {
    throw std::invalid_argument("verify_diameter_table: requires 4 <= from <= to <= 20");
  }
  std::vector<ClaimResult> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  for (int m = from; m <= to; ++m) {
    const auto t0 = Clock::now();
    const CommutingGraph graph((GroupParams(m)));
    const DiameterReport rep = graph.diameter(DiameterAlgo::kPruned, threads);
    const bool ok = rep.connected && rep.diameter == m - 1;
    out.push_back(make_result(
        "diameter_table", m, ok,
        "vertices=" + std::to_string(rep.n_vertices) +
            " edges=" + std::to_string(rep.n_edges) +
            " diameter=" + std::to_string(rep.diameter) +
            " radius=" + std::to_string(rep.radius) +
            " expected_diameter=" + std::to_string(m - 1),
        t0));
  }
  return out;
}

std::vector<ClaimResult> run_default_suite(int threads) {
  std::vector<ClaimResult> out;
  out.push_back(verify_gamma4_star());
  for (int m = 4; m <= 12; ++m) out.push_back(verify_centralizers(GroupParams(m)));
  for (int m = 4; m <= 6; ++m) out.push_back(verify_center_derived_special(GroupParams(m)));
  for (int m = 4; m <= 6; ++m) out.push_back(verify_transversal(GroupParams(m)));
  for (int m = 5; m <= 6; ++m) out.push_back(verify_subgroup_embedding(GroupParams(m)));
  for (int m = 4; m <= 12; ++m) out.push_back(verify_support_bound(GroupParams(m)));
  for (int m = 4; m <= 12; ++m) out.push_back(verify_log_lower_bound(GroupParams(m)));
  std::vector<ClaimResult> table = verify_diameter_table(4, 12, threads);
  out.insert(out.end(), std::make_move_iterator(table.begin()),
             std::make_move_iterator(table.end()));
  return out;
}

bool all_passed(const std::vector<ClaimResult>& claims) {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.passed; });
}

}  // namespace cg
