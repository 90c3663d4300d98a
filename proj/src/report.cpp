#include "commgraph/report.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

namespace cg {

namespace {

std::string seconds_field(double s, bool zero_timing) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", zero_timing ? 0.0 : s);
  return buf;
}

std::string int_or_inf(int value) {
  return value < 0 ? "inf" : std::to_string(value);
}

// Minimal CSV quoting: wrap when the field contains a comma or quote.
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json claim_to_json(const ClaimResult& c, bool zero_timing) {
  return nlohmann::ordered_json{{"claim_id", c.claim_id},
                                {"m", c.m},
                                {"passed", c.passed},
                                {"details", c.details},
                                {"elapsed_seconds", zero_timing ? 0.0 : c.elapsed_seconds}};
}

}  // namespace

void write_table_csv(const std::vector<DiameterReport>& rows, std::ostream& out,
                     bool zero_timing) {
  out << "m,vertices,edges,connected,diameter,radius,witness_u,witness_v,seconds\n";
  for (const DiameterReport& r : rows) {
    out << r.m << ',' << r.n_vertices << ',' << r.n_edges << ','
        << (r.connected ? "true" : "false") << ',' << int_or_inf(r.diameter) << ','
        << int_or_inf(r.radius) << ',' << r.witness_u << ',' << r.witness_v << ','
        << seconds_field(r.elapsed_seconds, zero_timing) << '\n';
  }
}

void write_claims_json(const std::vector<ClaimResult>& claims, std::ostream& out,
                       bool zero_timing) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ClaimResult& c : claims) doc.push_back(claim_to_json(c, zero_timing));
  out << doc.dump(2) << '\n';
}

void write_claims_csv(const std::vector<ClaimResult>& claims, std::ostream& out,
                      bool zero_timing) {
  out << "claim_id,m,passed,details,seconds\n";
  for (const ClaimResult& c : claims) {
    out << c.claim_id << ',' << c.m << ',' << (c.passed ? "true" : "false") << ','
        << csv_escape(c.details) << ',' << seconds_field(c.elapsed_seconds, zero_timing)
        << '\n';
  }
}

void write_diameter_json(const DiameterReport& rep, std::ostream& out,
                         bool zero_timing) {
  nlohmann::ordered_json doc{{"m", rep.m},
                             {"vertices", rep.n_vertices},
                             {"edges", rep.n_edges},
                             {"connected", rep.connected},
                             {"diameter", rep.diameter},
                             {"radius", rep.radius},
                             {"witness_u", rep.witness_u},
                             {"witness_v", rep.witness_v},
                             {"elapsed_seconds", zero_timing ? 0.0 : rep.elapsed_seconds}};
  out << doc.dump(2) << '\n';
}

void write_bfs_csv(const DistanceMap& dm, std::ostream& out) {
  out << "code,dist\n";
  for (std::size_t code = 1; code < dm.dist.size(); ++code) {
    out << code << ',';
    if (dm.dist[code] == kUnreached) {
      out << "inf";
    } else {
      out << dm.dist[code];
    }
    out << '\n';
  }
}

void write_bfs_json(const DistanceMap& dm, std::ostream& out) {
  nlohmann::ordered_json dist = nlohmann::ordered_json::array();
  for (std::size_t code = 1; code < dm.dist.size(); ++code) {
    if (dm.dist[code] == kUnreached) {
      dist.push_back(nullptr);
    } else {
      dist.push_back(dm.dist[code]);
    }
  }
  nlohmann::ordered_json doc{{"source", dm.source}, {"dist", dist}};
  out << doc.dump(2) << '\n';
}

}  // namespace cg
