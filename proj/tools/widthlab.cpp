// widthlab command-line interface.
//
// Exit codes: 0 success, 1 invalid input, 2 I/O failure, 3 a certificate
// check failed (an implementation bug, since the checked bounds are theorems).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "widthlab/bounds.hpp"
#include "widthlab/census.hpp"
#include "widthlab/error.hpp"
#include "widthlab/handles.hpp"
#include "widthlab/inequalities.hpp"
#include "widthlab/parallel.hpp"
#include "widthlab/report_json.hpp"
#include "widthlab/width.hpp"

namespace {

using namespace widthlab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitViolation = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Errc::Io, "cannot read " + path);
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Error(Errc::Io, "cannot write " + path);
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Io: return kExitIo;
    case Errc::Internal: return kExitViolation;
    default: return kExitInvalid;
  }
}

void emit(const json& j, const std::string& output) {
  const std::string text = j.dump(2) + "\n";
  if (output.empty()) std::cout << text;
  else write_file(output, text);
}

// ---------------------------------------------------------------------------

struct CheckOptions {
  std::string path;
  std::string format = "text";
};

int run_check(const CheckOptions& opt) {
  const Triangulation tri = parse_triangulation(read_file(opt.path));
  const auto report = validate_closed(tri);
  const bool orientable = report.valid() && check_orientable(tri);
  const auto summary = skeleton(tri);
  if (opt.format == "json") {
    emit({{"file", opt.path}, {"validation", report}, {"orientable", orientable}, {"skeleton", summary}}, "");
  } else {
    std::cout << opt.path << ": " << tri.size() << " tetrahedra, V=" << summary.vertex_count
              << " E=" << summary.edge_count << " F=" << summary.triangle_count << " T=" << summary.tet_count
              << " euler=" << summary.euler << '\n';
    for (const auto& issue : report.issues)
      std::cout << "  " << to_string(issue.kind) << ' ' << issue.index << ": " << issue.detail << '\n';
    std::cout << (report.valid() ? (orientable ? "valid closed orientable\n" : "valid closed, not orientable\n")
                                 : "invalid\n");
  }
  return report.valid() && orientable ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------------------

struct WidthOptions {
  std::string path;
  std::string graph;
  std::string param = "all";
  bool heuristic = false;
  std::optional<std::uint64_t> seed;
  ExactLimits limits;
  std::string witness;
  std::string format = "json";
  bool irreducible = false;
  bool non_haken = false;
};

std::string witness_text(const WidthReport& r) {
  return std::visit(
      [](const auto& w) -> std::string {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, LinearLayout>) return format_layout(w);
        else if constexpr (std::is_same_v<W, HostTree>) return format_host(w);
        else return format_decomposition(w);
      },
      r.witness);
}

int run_width(const WidthOptions& opt) {
  if (opt.path.empty() == opt.graph.empty())
    throw Error(Errc::InvalidArgument, "give exactly one of a triangulation path or --graph");
  if (opt.heuristic && !opt.seed) throw Error(Errc::InvalidArgument, "--heuristic requires --seed");
  for (int limit : {opt.limits.treewidth, opt.limits.pathwidth, opt.limits.cutwidth, opt.limits.congestion})
    if (limit <= 0) throw Error(Errc::InvalidArgument, "exact thresholds must be positive");

  MultiGraph g;
  std::optional<Triangulation> tri;
  if (!opt.graph.empty()) {
    g = parse_edge_list(read_file(opt.graph));
  } else {
    tri = parse_triangulation(read_file(opt.path));
    require_closed_orientable(*tri);
    g = build_dual(*tri);
  }
  if (!g.is_connected()) throw Error(Errc::Disconnected, "graph is disconnected");

  std::vector<Param> params;
  if (opt.param == "all") params = {Param::Treewidth, Param::Pathwidth, Param::Cutwidth, Param::Congestion};
  else params = {parse_param(opt.param)};

  std::vector<WidthReport> reports;
  for (Param p : params) {
    try {
      reports.push_back(opt.heuristic ? heuristic_upper(g, p, *opt.seed) : width_exact(g, p, opt.limits));
    } catch (const Error& e) {
      if (e.code() == Errc::TooLarge) throw Error(Errc::TooLarge, std::string(e.what()) + " (try --heuristic --seed S)");
      throw;
    }
  }
  if (!opt.witness.empty()) {
    for (const auto& r : reports) {
      const std::string path = reports.size() == 1 ? opt.witness : opt.witness + "." + std::string(to_string(r.kind));
      write_file(path, witness_text(r));
    }
  }

  std::optional<BoundsReport> bounds;
  if (tri) {
    WidthSet widths;
    for (const auto& r : reports) {
      const WidthValue v{r.value, r.exact};
      switch (r.kind) {
        case Param::Treewidth: widths.tw = v; break;
        case Param::Pathwidth: widths.pw = v; break;
        case Param::Cutwidth: widths.cw = v; break;
        case Param::Congestion: widths.cng = v; break;
      }
    }
    bounds = genus_bounds(widths, {true, true, opt.irreducible, opt.non_haken});
  }

  const std::string input = opt.graph.empty() ? opt.path : opt.graph;
  if (opt.format == "json") {
    json j = {{"input", input}, {"nodes", g.node_count()}, {"arcs", g.arc_count()}, {"reports", reports}};
    if (bounds) j["bounds"] = *bounds;
    emit(j, "");
  } else if (opt.format == "csv") {
    std::cout << "input,param,value,exact\n";
    for (const auto& r : reports)
      std::cout << input << ',' << to_string(r.kind) << ',' << r.value << ',' << (r.exact ? "true" : "false") << '\n';
  } else {
    for (const auto& r : reports)
      std::cout << to_string(r.kind) << " = " << r.value << (r.exact ? " (exact)" : " (upper bound)") << '\n';
    if (bounds) std::cout << '\n' << format_bounds_table(*bounds);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CertifyOptions {
  std::string path;
  std::string mode = "linear";
  std::string layout;
  std::string host;
  std::optional<int> root_arc;
  std::string output;
  std::string format = "json";
};

// Optimal witness when the exact solver can run, a seeded heuristic one
// otherwise.
WidthReport witness_for(const MultiGraph& g, Param p, std::string& source) {
  try {
    source = "exact";
    return width_exact(g, p);
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
    source = "heuristic";
    return heuristic_upper(g, p, 0);
  }
}

int run_certify(const CertifyOptions& opt) {
  const Triangulation tri = parse_triangulation(read_file(opt.path));
  require_closed_orientable(tri);
  const MultiGraph dual = build_dual(tri);
  const HandleDecomposition hd(tri);
  json j;
  bool passed = false;
  std::string source = "file";
  if (opt.mode == "linear") {
    LinearLayout layout = opt.layout.empty()
                              ? std::get<LinearLayout>(witness_for(dual, Param::Cutwidth, source).witness)
                              : parse_layout(dual, read_file(opt.layout));
    const auto cert = linear_certificate(hd, layout);
    passed = cert.all_checks_pass();
    j = cert;
  } else if (opt.mode == "graph") {
    HostTree host = opt.host.empty() ? std::get<HostTree>(witness_for(dual, Param::Congestion, source).witness)
                                     : parse_host(read_file(opt.host));
    const auto cert = graph_certificate(hd, host, opt.root_arc);
    passed = cert.all_checks_pass();
    j = cert;
  } else {
    throw Error(Errc::InvalidArgument, "unknown mode '" + opt.mode + "'");
  }
  j["input"] = opt.path;
  j["witness_source"] = source;
  if (opt.format == "json" || !opt.output.empty()) emit(j, opt.output);
  if (opt.format != "json") {
    std::cout << opt.mode << " certificate for " << opt.path << ": k=" << j["k"].get<int>() << ' '
              << (passed ? "all checks pass" : "CHECK FAILED") << '\n';
    if (opt.mode == "linear")
      std::cout << "  max genus sum " << j["max_genus_sum"] << " <= " << j["bound_3k4"]["value"] << ", L(M) <= "
                << j["L_upper"]["value"] << '\n';
    else if (j["single_tet_case"].get<bool>())
      std::cout << "  single tetrahedron: the graph-width bound does not apply\n";
    else
      std::cout << "  max top genus " << j["max_top_genus"] << " < " << j["bound_6k"]["value"] << '\n';
  }
  if (!passed) std::cerr << "widthlab: certificate check failed\n";
  return passed ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------

struct IneqOptions {
  std::string dir;
  std::string format = "csv";
};

int run_verify_ineq(const IneqOptions& opt) {
  const auto rows = verify_directory(opt.dir);
  int ok = 0, violated = 0, failed = 0;
  for (const auto& row : rows) {
    if (!row.report) {
      ++failed;
      std::cerr << "widthlab: warning: " << row.file << ": " << row.error << '\n';
    } else if (row.report->all_hold()) {
      ++ok;
    } else {
      ++violated;
    }
  }
  if (opt.format == "json") {
    emit({{"directory", opt.dir},
          {"rows", rows},
          {"summary", {{"graphs", rows.size()}, {"all_hold", ok}, {"violations", violated}, {"errors", failed}}}},
         "");
  } else {
    std::cout << "file,max_degree,tw,pw,cw,cng,bodlaender_lhs,bodlaender_rhs,bienstock_lhs,bienstock_rhs,error\n";
    auto b = [](bool x) { return x ? "true" : "false"; };
    for (const auto& row : rows) {
      if (row.report) {
        const auto& r = *row.report;
        std::cout << row.file << ',' << r.max_degree << ',' << r.tw << ',' << r.pw << ',' << r.cw << ',' << r.cng
                  << ',' << b(r.bodlaender_lhs) << ',' << b(r.bodlaender_rhs) << ',' << b(r.bienstock_lhs) << ','
                  << b(r.bienstock_rhs) << ",\n";
      } else {
        std::string error = row.error;
        std::replace(error.begin(), error.end(), ',', ';');
        std::cout << row.file << ",,,,,,,,,," << error << '\n';
      }
    }
    std::cerr << rows.size() << " graphs: " << ok << " all hold, " << violated << " with violations, " << failed
              << " errors\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CensusOptions {
  int max_tets = 1;
  std::string format = "json";
};

int run_census(const CensusOptions& opt) {
  const auto census = enumerate_census(opt.max_tets);
  const auto records =
      parallel_map(static_cast<int>(census.size()), [&](int i) { return certify_entry(census[i]); });
  std::vector<int> per_size(opt.max_tets + 1, 0);
  int failures = 0, max_genus = 0, max_top = 0;
  for (const auto& r : records) {
    ++per_size[r.tri.size()];
    if (!r.passed()) ++failures;
    max_genus = std::max(max_genus, r.linear.max_genus_sum);
    max_top = std::max(max_top, r.graph.max_top_genus);
  }
  if (opt.format == "json") {
    json counts = json::object();
    for (int n = 1; n <= opt.max_tets; ++n) counts[std::to_string(n)] = per_size[n];
    emit({{"max_tets", opt.max_tets},
          {"triangulations", records},
          {"summary",
           {{"count", records.size()},
            {"per_size", counts},
            {"failures", failures},
            {"max_linear_genus_sum", max_genus},
            {"max_top_genus", max_top}}}},
         "");
  } else {
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      std::cout << "# " << i << ": " << r.tri.size() << " tets, cw=" << r.cutwidth << " cng=" << r.congestion
                << " linear " << r.linear.max_genus_sum << "/" << r.linear.bound_3k4 << " graph "
                << (r.graph.single_tet_case ? std::string("single-tet") : std::to_string(r.graph.max_top_genus) + "/" + std::to_string(r.graph.bound_6k))
                << (r.passed() ? " ok" : " FAILED") << '\n'
                << serialize(r.tri);
    }
    std::cout << records.size() << " triangulations, " << failures << " failures\n";
  }
  return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Width parameters of dual graphs and handle-decomposition certificates for 3-manifold triangulations"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Validate a closed orientable triangulation");
  check_cmd->add_option("path", check.path, "Gluing-table file")->required();
  check_cmd->add_option("--format", check.format)->check(CLI::IsMember({"json", "text"}));

  WidthOptions width;
  auto* width_cmd = app.add_subcommand("width", "Compute width parameters of a dual graph or edge list");
  width_cmd->add_option("path", width.path, "Gluing-table file");
  width_cmd->add_option("--graph", width.graph, "Edge-list file instead of a triangulation");
  width_cmd->add_option("--param", width.param)->check(CLI::IsMember({"tw", "pw", "cw", "cng", "all"}));
  auto* exact_flag = width_cmd->add_flag("--exact", "Exact solvers (default)");
  width_cmd->add_flag("--heuristic", width.heuristic, "Seeded heuristic upper bounds")->excludes(exact_flag);
  width_cmd->add_option("--seed", width.seed);
  width_cmd->add_option("--max-tw", width.limits.treewidth, "Exact treewidth node limit");
  width_cmd->add_option("--max-pw", width.limits.pathwidth, "Exact pathwidth node limit");
  width_cmd->add_option("--max-cw", width.limits.cutwidth, "Exact cutwidth node limit");
  width_cmd->add_option("--max-cng", width.limits.congestion, "Exact congestion node limit");
  width_cmd->add_option("--witness", width.witness, "Write witnesses here (suffixed by parameter for --param all)");
  width_cmd->add_option("--format", width.format)->check(CLI::IsMember({"json", "csv", "text"}));
  width_cmd->add_flag("--irreducible", width.irreducible, "Assert the manifold is irreducible");
  width_cmd->add_flag("--non-haken", width.non_haken, "Assert the manifold is non-Haken");

  CertifyOptions certify;
  auto* certify_cmd = app.add_subcommand("certify", "Build a linear or graph splitting certificate");
  certify_cmd->add_option("path", certify.path, "Gluing-table file")->required();
  certify_cmd->add_option("--mode", certify.mode)->check(CLI::IsMember({"linear", "graph"}));
  certify_cmd->add_option("--layout", certify.layout, "Layout file (linear mode)");
  certify_cmd->add_option("--host", certify.host, "Host tree file (graph mode)");
  certify_cmd->add_option("--root-arc", certify.root_arc, "Host arc index to root at (graph mode)");
  certify_cmd->add_option("--output", certify.output, "Write the JSON certificate here");
  certify_cmd->add_option("--format", certify.format)->check(CLI::IsMember({"json", "text"}));

  IneqOptions ineq;
  auto* ineq_cmd = app.add_subcommand("verify-ineq", "Check the parameter inequalities on a directory of edge lists");
  ineq_cmd->add_option("dir", ineq.dir)->required();
  ineq_cmd->add_option("--format", ineq.format)->check(CLI::IsMember({"json", "csv"}));

  CensusOptions census;
  auto* census_cmd = app.add_subcommand("census", "Enumerate and certify small closed orientable triangulations");
  census_cmd->add_option("--max-tets", census.max_tets)->required();
  census_cmd->add_option("--format", census.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*width_cmd) return run_width(width);
    if (*certify_cmd) return run_certify(certify);
    if (*ineq_cmd) return run_verify_ineq(ineq);
    if (*census_cmd) return run_census(census);
  } catch (const Error& e) {
    std::cerr << "widthlab: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "widthlab: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitInvalid;
}
