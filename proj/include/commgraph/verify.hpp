#pragma once

#include <string>
#include <vector>

#include "commgraph/graph.hpp"

namespace cg {

struct ClaimResult {
  std::string claim_id;
  int m = 0;
  bool passed = false;
  std::string details;  // counterexample when failed, summary otherwise
  double elapsed_seconds = 0.0;
};

// Default brute-force caps, raisable per call when more patience is
// available: full-group enumerations stop at m = 7 (order 2^12), explicit
// centralizer enumerations at m = 10 (order 2^18).
inline constexpr int kFullGroupCap = 7;
inline constexpr int kExplicitCentralizerCap = 10;

// Kernel of phi at x1 is exactly span{x1, x2}, and at x_m exactly
// span{x_{m-1}, x_m}, for any 4 <= m <= 20. Up to the explicit cap the
// full centralizers are also enumerated element by element and compared
// against the generated form span{..} x W.
ClaimResult verify_centralizers(const GroupParams& p,
                                int explicit_cap = kExplicitCentralizerCap);

// Brute force over the whole group (4 <= m <= cap): the centre is
// {(0, w)} of order 2^(m-2), equals the derived subgroup, contains all
// squares, and centre and central quotient are elementary abelian.
ClaimResult verify_center_derived_special(const GroupParams& p,
                                          int cap = kFullGroupCap);

// Each of the 2^m cosets of the centre meets {(v, 0)} exactly once.
// 4 <= m <= cap.
ClaimResult verify_transversal(const GroupParams& p, int cap = kFullGroupCap);

// The coordinate padding map from the previous family member is an
// injective homomorphism onto the subgroup generated by the first m-1
// involutions. 5 <= m <= cap.
ClaimResult verify_subgroup_embedding(const GroupParams& p, int cap = kFullGroupCap);

// BFS from x1: every vertex at distance d (with 2^(d-1) < m) has its
// highest support index bounded by 2^(d-1) + 1. 4 <= m <= 20.
ClaimResult verify_support_bound(const GroupParams& p);

// d(x1, x_m) >= 1 + ceil(log2(m-1)). 4 <= m <= 20.
ClaimResult verify_log_lower_bound(const GroupParams& p);

// The m = 4 graph has 15 vertices, is connected, and has diameter 3.
ClaimResult verify_gamma4_star();

// One result per m: the graph is connected with diameter m - 1.
std::vector<ClaimResult> verify_diameter_table(int from, int to, int threads = 0);

// Every claim at its default ranges; deterministic report order.
std::vector<ClaimResult> run_default_suite(int threads = 0);

bool all_passed(const std::vector<ClaimResult>& claims);

}  // namespace cg
