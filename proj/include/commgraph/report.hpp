#pragma once

#include <iosfwd>
#include <vector>

#include "commgraph/graph.hpp"
#include "commgraph/verify.hpp"

namespace cg {

// Diameter rows as CSV: header + one row per report, LF endings.
// Columns: m,vertices,edges,connected,diameter,radius,witness_u,witness_v,seconds.
// Infinite diameter/radius print as "inf"; zero_timing pins seconds to 0.
void write_table_csv(const std::vector<DiameterReport>& rows, std::ostream& out,
                     bool zero_timing = false);

// Verification report: one JSON array with one object per claim, or the
// flattened CSV form (claim_id,m,passed,details,seconds).
void write_claims_json(const std::vector<ClaimResult>& claims, std::ostream& out,
                       bool zero_timing = false);
void write_claims_csv(const std::vector<ClaimResult>& claims, std::ostream& out,
                      bool zero_timing = false);

void write_diameter_json(const DiameterReport& rep, std::ostream& out,
                         bool zero_timing = false);

// BFS distances as CSV: code,dist with "inf" for unreached vertices.
void write_bfs_csv(const DistanceMap& dm, std::ostream& out);
void write_bfs_json(const DistanceMap& dm, std::ostream& out);

}  // namespace cg
