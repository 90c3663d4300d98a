#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commgraph/report.hpp"

namespace {

constexpr int kDefaultMaxM = 20;

struct CommonOpts {
  int threads = 0;
  int max_m = kDefaultMaxM;
  bool zero_timing = false;
  std::string output;
  std::string format;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--threads", opts->threads,
                  "Worker threads (defaults to all available)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-m", opts->max_m,
                  "Raise the m cap above the default of " + std::to_string(kDefaultMaxM))
      ->check(CLI::Range(4, cg::kGraphMaxM));
  cmd->add_flag("--deterministic-timing", opts->zero_timing,
                "Report all timings as zero (for fixture comparisons)");
  cmd->add_option("-o,--output", opts->output, "Write output here instead of stdout");
}

void check_m(int m, const CommonOpts& opts) {
  if (m < 4 || m > opts.max_m) {
    throw CLI::ValidationError(
        "m", "m = " + std::to_string(m) + " outside [4, " + std::to_string(opts.max_m) +
                 "]" + (opts.max_m < cg::kGraphMaxM ? " (raise with --max-m)" : ""));
  }
}

// Opens --output when given, else stdout. Throws on unwritable paths.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) {
        throw std::runtime_error("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

cg::DiameterAlgo parse_algo(const std::string& name) {
  if (name == "all-sources") return cg::DiameterAlgo::kExactAllSources;
  if (name == "pruned") return cg::DiameterAlgo::kPruned;
  throw CLI::ValidationError("--algo", "unknown algorithm: " + name);
}

int run_table(int from, int to, const std::string& algo, const CommonOpts& opts) {
  check_m(from, opts);
  check_m(to, opts);
  if (from > to) {
    throw CLI::ValidationError("--from", "--from must not exceed --to");
  }
  std::vector<cg::DiameterReport> rows;
  for (int m = from; m <= to; ++m) {
    const cg::CommutingGraph graph((cg::GroupParams(m)));
    rows.push_back(graph.diameter(parse_algo(algo), opts.threads));
  }
  OutputSink sink(opts.output);
  cg::write_table_csv(rows, sink.stream(), opts.zero_timing);
  return 0;
}

int run_diameter(int m, const std::string& algo, const CommonOpts& opts) {
  check_m(m, opts);
  const cg::CommutingGraph graph((cg::GroupParams(m)));
  const cg::DiameterReport rep = graph.diameter(parse_algo(algo), opts.threads);
  OutputSink sink(opts.output);
  if (opts.format == "json") {
    cg::write_diameter_json(rep, sink.stream(), opts.zero_timing);
  } else {
    cg::write_table_csv({rep}, sink.stream(), opts.zero_timing);
  }
  return 0;
}

int run_bfs(int m, std::uint32_t source, const CommonOpts& opts) {
  check_m(m, opts);
  const cg::CommutingGraph graph((cg::GroupParams(m)));
  if (source < 1 || source > graph.vertex_count()) {
    throw CLI::ValidationError("--source", "source code outside [1, " +
                                               std::to_string(graph.vertex_count()) + "]");
  }
  const cg::DistanceMap dm = graph.bfs(source);
  OutputSink sink(opts.output);
  if (opts.format == "json") {
    cg::write_bfs_json(dm, sink.stream());
  } else {
    cg::write_bfs_csv(dm, sink.stream());
  }
  return 0;
}

int run_verify(const std::string& claim, std::optional<int> m_opt, int from, int to,
               const CommonOpts& opts) {
  std::vector<cg::ClaimResult> claims;
  if (claim.empty()) {
    claims = cg::run_default_suite(opts.threads);
  } else if (claim == "gamma4") {
    claims.push_back(cg::verify_gamma4_star());
  } else if (claim == "table") {
    claims = cg::verify_diameter_table(from, to, opts.threads);
  } else {
    std::function<cg::ClaimResult(const cg::GroupParams&)> fn;
    int def_lo = 4, def_hi = 12;
    if (claim == "centralizers") {
      fn = [](const cg::GroupParams& p) { return cg::verify_centralizers(p); };
    } else if (claim == "special") {
      fn = [](const cg::GroupParams& p) { return cg::verify_center_derived_special(p); };
      def_hi = 6;
    } else if (claim == "transversal") {
      fn = [](const cg::GroupParams& p) { return cg::verify_transversal(p); };
      def_hi = 6;
    } else if (claim == "embedding") {
      fn = [](const cg::GroupParams& p) { return cg::verify_subgroup_embedding(p); };
      def_lo = 5;
      def_hi = 6;
    } else if (claim == "support") {
      fn = cg::verify_support_bound;
    } else if (claim == "logbound") {
      fn = cg::verify_log_lower_bound;
    } else {
      throw CLI::ValidationError(
          "--claim", "unknown claim: " + claim +
                         " (expected one of centralizers, special, transversal, "
                         "embedding, support, logbound, gamma4, table)");
    }
    const int lo = m_opt ? *m_opt : def_lo;
    const int hi = m_opt ? *m_opt : def_hi;
    for (int m = lo; m <= hi; ++m) claims.push_back(fn(cg::GroupParams(m)));
  }

  OutputSink sink(opts.output);
  if (opts.format == "csv") {
    cg::write_claims_csv(claims, sink.stream(), opts.zero_timing);
  } else {
    cg::write_claims_json(claims, sink.stream(), opts.zero_timing);
  }
  return cg::all_passed(claims) ? 0 : 1;
}

int run_export(int m, const CommonOpts& opts) {
  check_m(m, opts);
  const cg::CommutingGraph graph((cg::GroupParams(m)));
  OutputSink sink(opts.output);
  if (opts.format == "dot") {
    cg::write_dot(graph, sink.stream());
  } else {
    cg::write_adjacency_csv(graph, sink.stream());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting-graph construction, exact diameters, and claim verification "
               "for the bit-packed 2-group family"};
  app.require_subcommand(1);

  CommonOpts table_opts, diam_opts, bfs_opts, verify_opts, export_opts;
  int from = 4, to = 12, diam_m = 4, bfs_m = 4, export_m = 4;
  std::uint32_t bfs_source = 1;
  std::string table_algo = "pruned", diam_algo = "pruned", verify_claim;
  int verify_m_raw = -1;
  int verify_from = 4, verify_to = 12;

  CLI::App* table = app.add_subcommand("table", "Diameter table as CSV");
  table->add_option("--from", from, "First m")->required();
  table->add_option("--to", to, "Last m")->required();
  table->add_option("--algo", table_algo, "Diameter algorithm (pruned | all-sources)");
  add_common(table, &table_opts);

  CLI::App* diameter = app.add_subcommand("diameter", "Single-m diameter report");
  diameter->add_option("-m", diam_m, "Family parameter m")->required();
  diameter->add_option("--algo", diam_algo, "Diameter algorithm (pruned | all-sources)");
  diameter->add_option("--format", diam_opts.format, "Output format (csv | json)")
      ->check(CLI::IsMember({"csv", "json"}));
  add_common(diameter, &diam_opts);

  CLI::App* bfs = app.add_subcommand("bfs", "Single-source distances");
  bfs->add_option("-m", bfs_m, "Family parameter m")->required();
  bfs->add_option("--source", bfs_source, "Source vertex code (default 1 = x1)");
  bfs->add_option("--format", bfs_opts.format, "Output format (csv | json)")
      ->check(CLI::IsMember({"csv", "json"}));
  add_common(bfs, &bfs_opts);

  CLI::App* verify = app.add_subcommand("verify", "Run claim verifiers");
  verify->add_option("--claim", verify_claim,
                     "Single claim (centralizers, special, transversal, embedding, "
                     "support, logbound, gamma4, table); default runs the full suite");
  verify->add_option("-m", verify_m_raw,
                     "Verify one m instead of the claim's default range")
      ->check(CLI::Range(4, 20));
  verify->add_option("--from", verify_from, "Table claim: first m");
  verify->add_option("--to", verify_to, "Table claim: last m");
  verify->add_option("--format", verify_opts.format, "Output format (json | csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  add_common(verify, &verify_opts);

  CLI::App* exp = app.add_subcommand("export", "Graph export (DOT or adjacency CSV)");
  exp->add_option("-m", export_m, "Family parameter m")->required();
  exp->add_option("--format", export_opts.format, "Output format (dot | csv)")
      ->required()
      ->check(CLI::IsMember({"dot", "csv"}));
  add_common(exp, &export_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return run_table(from, to, table_algo, table_opts);
    if (diameter->parsed()) return run_diameter(diam_m, diam_algo, diam_opts);
    if (bfs->parsed()) return run_bfs(bfs_m, bfs_source, bfs_opts);
    if (verify->parsed()) {
      const std::optional<int> verify_m =
          verify_m_raw >= 0 ? std::optional<int>(verify_m_raw) : std::nullopt;
      return run_verify(verify_claim, verify_m, verify_from, verify_to, verify_opts);
    }
    if (exp->parsed()) return run_export(export_m, export_opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
