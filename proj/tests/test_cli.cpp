#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string capture = "cli_capture_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      std::string(COMMGRAPH_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(capture.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string csv_field(const std::string& line, int index) {
  std::istringstream in(line);
  std::string field;
  for (int i = 0; i <= index; ++i) std::getline(in, field, ',');
  return field;
}

}  // namespace

TEST_CASE("table command emits the expected diameters") {
  const RunResult r = run_cli("table --from 4 --to 8 --deterministic-timing");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = lines_of(r.output);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "m,vertices,edges,connected,diameter,radius,witness_u,witness_v,seconds");
  const int expected_vertices[] = {15, 31, 63, 127, 255};
  for (int i = 0; i < 5; ++i) {
    const std::string& row = lines[1 + i];
    CHECK(csv_field(row, 0) == std::to_string(4 + i));
    CHECK(csv_field(row, 1) == std::to_string(expected_vertices[i]));
    CHECK(csv_field(row, 3) == "true");
    CHECK(csv_field(row, 4) == std::to_string(3 + i));
    CHECK(csv_field(row, 8) == "0.000000");
  }
}

TEST_CASE("identical configs give byte-identical output across thread counts") {
  const std::string base = "table --from 4 --to 9 --deterministic-timing --algo all-sources";
  const RunResult one = run_cli(base + " --threads 1");
  const RunResult two = run_cli(base + " --threads 2");
  REQUIRE(one.exit_code == 0);
  REQUIRE(two.exit_code == 0);
  CHECK(one.output == two.output);

  const RunResult again = run_cli(base + " --threads 2");
  CHECK(two.output == again.output);
}

TEST_CASE("diameter command validates m") {
  const RunResult bad = run_cli("diameter -m 99");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("[4, 20]") != std::string::npos);

  const RunResult ok = run_cli("diameter -m 5 --deterministic-timing");
  REQUIRE(ok.exit_code == 0);
  const std::vector<std::string> lines = lines_of(ok.output);
  REQUIRE(lines.size() == 2);
  CHECK(csv_field(lines[1], 4) == "4");

  const RunResult json = run_cli("diameter -m 4 --format json --deterministic-timing");
  REQUIRE(json.exit_code == 0);
  CHECK(json.output.find("\"diameter\": 3") != std::string::npos);
  CHECK(json.output.find("\"vertices\": 15") != std::string::npos);
}

TEST_CASE("bfs command") {
  const RunResult r = run_cli("bfs -m 4 --source 1");
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = lines_of(r.output);
  REQUIRE(lines.size() == 16);
  CHECK(lines[0] == "code,dist");
  CHECK(lines[1] == "1,0");
  CHECK(lines[2] == "2,1");
  CHECK(lines[3] == "3,1");
  CHECK(lines[8] == "8,3");

  const RunResult bad = run_cli("bfs -m 4 --source 99");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify command exit codes and formats") {
  const RunResult gamma = run_cli("verify --claim gamma4 --deterministic-timing");
  CHECK(gamma.exit_code == 0);
  CHECK(gamma.output.find("\"claim_id\": \"gamma4_star\"") != std::string::npos);
  CHECK(gamma.output.find("\"passed\": true") != std::string::npos);

  const RunResult csv = run_cli("verify --claim centralizers -m 6 --format csv "
                                "--deterministic-timing");
  CHECK(csv.exit_code == 0);
  const std::vector<std::string> lines = lines_of(csv.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "claim_id,m,passed,details,seconds");
  CHECK(csv_field(lines[1], 0) == "lemma_facts_i");
  CHECK(csv_field(lines[1], 1) == "6");
  CHECK(csv_field(lines[1], 2) == "true");

  const RunResult unknown = run_cli("verify --claim nonsense");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("export command") {
  const RunResult dot = run_cli("export -m 4 --format dot");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.output.find("graph commuting_star_4 {") == 0);
  CHECK(dot.output.find("label=\"x1+x2+x3+x4\"") != std::string::npos);

  const std::string path = "export_test_m5.csv";
  const RunResult csv = run_cli("export -m 5 --format csv -o " + path);
  REQUIRE(csv.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "code_u,code_v");
  std::remove(path.c_str());

  // DOT is capped at m <= 6.
  const RunResult toobig = run_cli("export -m 7 --format dot");
  CHECK(toobig.exit_code == 2);
  CHECK(toobig.output.find("m <= 6") != std::string::npos);

  const RunResult badpath = run_cli("export -m 4 --format dot -o /nonexistent/dir/out.dot");
  CHECK(badpath.exit_code == 2);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("table --from 4").exit_code == 2);
  CHECK(run_cli("table --from 6 --to 4").exit_code == 2);
  CHECK(run_cli("table --from 4 --to 5 --threads 0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
