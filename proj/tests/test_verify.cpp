#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "commgraph/report.hpp"
#include "commgraph/verify.hpp"

using namespace cg;

TEST_CASE("centralizer kernels are exactly the two-generator spans") {
  for (int m : {4, 5, 8, 16}) {
    const ClaimResult r = verify_centralizers(GroupParams(m));
    CHECK(r.passed);
    CHECK(r.claim_id == "lemma_facts_i");
    CHECK(r.m == m);
    if (m <= kExplicitCentralizerCap) {
      CHECK(r.details.find("explicit centralizers confirmed") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(verify_centralizers(GroupParams(3)), std::invalid_argument);
}

TEST_CASE("brute-force caps can be raised per call") {
  CHECK_THROWS_AS(verify_transversal(GroupParams(8)), std::length_error);
  const ClaimResult r = verify_transversal(GroupParams(8), 8);
  CHECK(r.passed);
  CHECK(r.details.find("256 cosets") != std::string::npos);
}

TEST_CASE("centre, derived subgroup, and the special property") {
  const ClaimResult r4 = verify_center_derived_special(GroupParams(4));
  CHECK(r4.passed);
  CHECK(r4.details.find("|Z| = 4") != std::string::npos);

  const ClaimResult r5 = verify_center_derived_special(GroupParams(5));
  CHECK(r5.passed);
  CHECK(r5.details.find("|Z| = 8") != std::string::npos);

  CHECK_THROWS_AS(verify_center_derived_special(GroupParams(8)), std::length_error);
}

TEST_CASE("transversal hits every coset exactly once") {
  for (int m : {4, 5}) {
    const ClaimResult r = verify_transversal(GroupParams(m));
    CHECK(r.passed);
    CHECK(r.details.find(std::to_string(1 << m) + " cosets") != std::string::npos);
  }
}

TEST_CASE("subgroup embedding") {
  for (int m : {5, 6}) {
    const ClaimResult r = verify_subgroup_embedding(GroupParams(m));
    CHECK(r.passed);
  }
  CHECK_THROWS_AS(verify_subgroup_embedding(GroupParams(4)), std::invalid_argument);
}

TEST_CASE("support bound along BFS levels") {
  for (int m : {8, 16}) {
    const ClaimResult r = verify_support_bound(GroupParams(m));
    CHECK(r.passed);
    CHECK(r.details.find("d=1 max_index=2") != std::string::npos);
  }
}

TEST_CASE("logarithmic lower bound on the distance to the last involution") {
  for (int m = 4; m <= 16; ++m) {
    const ClaimResult r = verify_log_lower_bound(GroupParams(m));
    CHECK(r.passed);
  }
  const ClaimResult r4 = verify_log_lower_bound(GroupParams(4));
  CHECK(r4.details.find("d(x1, x4) = 3") != std::string::npos);
}

TEST_CASE("the 15-vertex graph") {
  const ClaimResult r = verify_gamma4_star();
  CHECK(r.passed);
  CHECK(r.details == "15 vertices, connected, diameter 3");
}

TEST_CASE("diameter table rows") {
  const std::vector<ClaimResult> rows = verify_diameter_table(4, 8);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].passed);
    const int m = 4 + int(i);
    CHECK(rows[i].m == m);
    CHECK(rows[i].details.find("diameter=" + std::to_string(m - 1)) != std::string::npos);
  }
  CHECK_THROWS_AS(verify_diameter_table(3, 8), std::invalid_argument);
  CHECK_THROWS_AS(verify_diameter_table(8, 4), std::invalid_argument);
}

TEST_CASE("default suite passes and covers every claim family") {
  const std::vector<ClaimResult> claims = run_default_suite();
  CHECK(all_passed(claims));
  std::set<std::string> ids;
  for (const ClaimResult& c : claims) ids.insert(c.claim_id);
  CHECK(ids == std::set<std::string>{"gamma4_star", "lemma_facts_i",
                                     "lemma_facts_ii_special", "lemma_facts_iii",
                                     "lemma_facts_iv", "support_bound",
                                     "log_lower_bound", "diameter_table"});
}

TEST_CASE("claim report serialization is deterministic") {
  const std::vector<ClaimResult> claims = {
      {"gamma4_star", 4, true, "15 vertices, connected, diameter 3", 0.25},
      {"support_bound", 8, false, "details, with a comma", 1.5},
  };

  std::ostringstream json1, json2;
  write_claims_json(claims, json1, true);
  write_claims_json(claims, json2, true);
  CHECK(json1.str() == json2.str());
  CHECK(json1.str().find("\"elapsed_seconds\": 0.0") != std::string::npos);
  CHECK(json1.str().find("\"passed\": false") != std::string::npos);

  std::ostringstream csv;
  write_claims_csv(claims, csv, true);
  const std::string want =
      "claim_id,m,passed,details,seconds\n"
      "gamma4_star,4,true,\"15 vertices, connected, diameter 3\",0.000000\n"
      "support_bound,8,false,\"details, with a comma\",0.000000\n";
  CHECK(csv.str() == want);
}

TEST_CASE("table CSV format") {
  DiameterReport rep;
  rep.m = 4;
  rep.n_vertices = 15;
  rep.n_edges = 21;
  rep.connected = true;
  rep.diameter = 3;
  rep.radius = 2;
  rep.witness_u = 1;
  rep.witness_v = 8;
  rep.elapsed_seconds = 0.125;

  std::ostringstream out;
  write_table_csv({rep}, out, true);
  CHECK(out.str() ==
        "m,vertices,edges,connected,diameter,radius,witness_u,witness_v,seconds\n"
        "4,15,21,true,3,2,1,8,0.000000\n");

  DiameterReport inf;
  inf.m = 4;
  inf.n_vertices = 6;
  inf.n_edges = 6;
  inf.connected = false;
  std::ostringstream out2;
  write_table_csv({inf}, out2, true);
  CHECK(out2.str().find("false,inf,inf,0,0,") != std::string::npos);
}
