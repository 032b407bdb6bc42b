#include "widthlab/inequalities.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "widthlab/error.hpp"
#include "widthlab/parallel.hpp"

namespace widthlab {

InequalityReport verify_chain(const MultiGraph& g, std::string graph_id, const ExactLimits& limits) {
  if (g.node_count() == 0) throw Error(Errc::InvalidArgument, "graph has no nodes");
  if (!g.is_connected()) throw Error(Errc::Disconnected, "inequalities are evaluated on connected graphs");
  const MultiGraph h = g.without_loops();
  InequalityReport r;
  r.graph_id = std::move(graph_id);
  r.loops_stripped = g.arc_count() - h.arc_count();
  r.max_degree = h.max_degree();
  r.tw = treewidth_exact(h, limits).value;
  r.pw = pathwidth_exact(h, limits).value;
  r.cw = cutwidth_exact(h, limits).value;
  r.cng = congestion_exact(h, limits).value;
  r.bodlaender_lhs = r.pw <= r.cw;
  r.bodlaender_rhs = r.cw <= r.max_degree * r.pw;
  r.bienstock_lhs = 2 * (r.tw + 1) <= 3 * r.cng && r.max_degree <= r.cng;
  r.bienstock_rhs = r.cng <= r.max_degree * (r.tw + 1);
  return r;
}

std::vector<BatchRow> verify_directory(const std::filesystem::path& dir, const ExactLimits& limits) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(Errc::Io, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (!entry.is_directory()) files.push_back(entry.path());
  if (ec) throw Error(Errc::Io, "cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  return parallel_map(static_cast<int>(files.size()), [&](int i) {
    BatchRow row;
    row.file = files[i].filename().string();
    try {
      std::ifstream in(files[i]);
      if (!in) throw Error(Errc::Io, "cannot read " + files[i].string());
      std::stringstream text;
      text << in.rdbuf();
      if (in.bad()) throw Error(Errc::Io, "cannot read " + files[i].string());
      row.report = verify_chain(parse_edge_list(text.str()), files[i].stem().string(), limits);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    return row;
  });
}

}  // namespace widthlab
