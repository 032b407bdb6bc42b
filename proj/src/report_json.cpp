#include "widthlab/report_json.hpp"

namespace widthlab {

using nlohmann::json;

void to_json(json& j, const SkeletonSummary& s) {
  j = {{"vertices", s.vertex_count}, {"edges", s.edge_count}, {"triangles", s.triangle_count},
       {"tetrahedra", s.tet_count}, {"euler", s.euler}};
}

void to_json(json& j, const ValidationReport& r) {
  json issues = json::array();
  for (const auto& issue : r.issues)
    issues.push_back({{"kind", to_string(issue.kind)}, {"index", issue.index}, {"detail", issue.detail}});
  j = {{"valid", r.valid()},         {"all_faces_glued", r.all_faces_glued},
       {"connected", r.connected},   {"edges_ok", r.edges_ok},
       {"links_ok", r.links_ok},     {"issues", std::move(issues)}};
}

void to_json(json& j, const LinearLayout& layout) {
  j = {{"ordering", layout.ordering}, {"cuts", layout.cuts}};
}

void to_json(json& j, const HostTree& host) {
  json arcs = json::array();
  for (auto [a, b] : host.arcs) arcs.push_back({a, b});
  j = {{"node_count", host.node_count}, {"arcs", std::move(arcs)}, {"leaf_of", host.leaf_of}};
}

namespace {

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (auto [a, b] : arcs) out.push_back({a, b});
  return out;
}

}  // namespace

void to_json(json& j, const TreeDecomposition& d) {
  j = {{"bags", d.bags}, {"arcs", arcs_json(d.arcs)}};
}

void to_json(json& j, const PathDecomposition& d) { j = {{"bags", d.bags}}; }

void to_json(json& j, const NiceTreeDecomposition& d) {
  json bags = json::array();
  for (const auto& b : d.bags) {
    json node = {{"kind", to_string(b.kind)}, {"bag", b.bag}, {"children", b.children}};
    if (b.kind == NiceKind::Introduce || b.kind == NiceKind::Forget) node["vertex"] = b.vertex;
    bags.push_back(std::move(node));
  }
  j = {{"root", d.root}, {"bags", std::move(bags)}};
}

void to_json(json& j, const WidthReport& r) {
  j = {{"param", to_string(r.kind)}, {"value", r.value}, {"exact", r.exact}};
  std::visit([&](const auto& w) { j["witness"] = w; }, r.witness);
}

void to_json(json& j, const SurfaceSummary& s) {
  j = {{"component_genera", s.component_genera},
       {"total_genus", s.total_genus},
       {"complexity", s.complexity},
       {"euler", s.euler}};
}

void to_json(json& j, const LinearCertificate& c) {
  json steps = json::array();
  for (const auto& step : c.steps) {
    json attachments = json::array();
    for (const auto& a : step.attachments)
      attachments.push_back({{"handle", a.handle}, {"index", a.which.index}, {"face", a.which.face},
                             {"surface", a.surface}});
    steps.push_back({{"tet", step.tet},
                     {"handles_added", step.handles_added},
                     {"genus_before", step.genus_before},
                     {"max_genus", step.max_genus},
                     {"within_handle_limit", step.within_handle_limit},
                     {"within_genus_step", step.within_genus_step},
                     {"attachments", std::move(attachments)}});
  }
  j = {{"mode", "linear"},
       {"layout", c.layout},
       {"k", c.k},
       {"steps", std::move(steps)},
       {"max_genus_sum", c.max_genus_sum},
       {"bound_3k4", {{"formula", "3*k+4"}, {"value", c.bound_3k4}, {"holds", c.holds_3k4}}},
       {"steps_ok", c.steps_ok},
       {"linear_splitting_width", {{"complexity_multiset", c.splitting_width}, {"max", c.linear_width}}},
       {"L_upper", {{"formula", "6*k+7"}, {"value", c.L_upper}}},
       {"euler_failures", c.euler_failures},
       {"passed", c.all_checks_pass()}};
}

void to_json(json& j, const GraphSplittingCertificate& c) {
  json leaves = json::array();
  for (const auto& leaf : c.leaves)
    leaves.push_back({{"host_node", leaf.host_node}, {"tet", leaf.tet}, {"class", to_string(leaf.cls)},
                      {"genus", leaf.genus}});
  json internal = json::array();
  for (const auto& node : c.internal_nodes)
    internal.push_back({{"host_node", node.host_node},
                        {"children", node.children},
                        {"surface", node.surface},
                        {"incident_arcs", node.incident_arcs},
                        {"incidence_ok", node.incidence_ok}});
  j = {{"mode", "graph"},
       {"host", c.host},
       {"k", c.k},
       {"single_tet_case", c.single_tet_case},
       {"leaves", std::move(leaves)},
       {"internal_nodes", std::move(internal)},
       {"max_top_genus", c.max_top_genus},
       {"bound_6k", {{"formula", "6*k"}, {"value", c.bound_6k}, {"strict", true}, {"holds", c.holds_6k}}},
       {"leaves_ok", c.leaves_ok},
       {"incidence_ok", c.incidence_ok},
       {"graph_width_multiset", c.graph_width},
       {"euler_failures", c.euler_failures},
       {"passed", c.all_checks_pass()}};
  if (c.single_tet_case) {
    j["root"] = nullptr;
  } else {
    j["root"] = {{"arc", c.root.arc}, {"ends", {c.root.ends.first, c.root.ends.second}}, {"surface", c.root.surface}};
  }
}

void to_json(json& j, const InequalityReport& r) {
  j = {{"graph", r.graph_id},
       {"loops_stripped", r.loops_stripped},
       {"max_degree", r.max_degree},
       {"tw", r.tw},
       {"pw", r.pw},
       {"cw", r.cw},
       {"cng", r.cng},
       {"bodlaender_lhs", r.bodlaender_lhs},
       {"bodlaender_rhs", r.bodlaender_rhs},
       {"bienstock_lhs", r.bienstock_lhs},
       {"bienstock_rhs", r.bienstock_rhs},
       {"all_hold", r.all_hold()}};
}

void to_json(json& j, const BatchRow& row) {
  j = {{"file", row.file}};
  if (row.report) j["report"] = *row.report;
  else j["error"] = row.error;
}

void to_json(json& j, const BoundsReport& r) {
  json widths = json::object();
  auto put = [&](const char* name, const std::optional<WidthValue>& w) {
    if (w) widths[name] = {{"value", w->value}, {"exact", w->exact}};
  };
  put("tw", r.widths.tw);
  put("pw", r.widths.pw);
  put("cw", r.widths.cw);
  put("cng", r.widths.cng);
  json lines = json::array();
  for (const auto& line : r.lines)
    lines.push_back({{"quantity", line.quantity},
                     {"relation", to_string(line.relation)},
                     {"value", line.value},
                     {"width", line.width},
                     {"formula", line.formula},
                     {"hypothesis", line.hypothesis},
                     {"conditional", line.conditional},
                     {"from_exact", line.from_exact}});
  j = {{"widths", std::move(widths)},
       {"flags",
        {{"closed", r.flags.closed},
         {"orientable", r.flags.orientable},
         {"irreducible_asserted", r.flags.irreducible},
         {"non_haken_asserted", r.flags.non_haken}}},
       {"bounds", std::move(lines)}};
}

void to_json(json& j, const CensusRecord& r) {
  j = {{"tets", r.tri.size()},
       {"gluings", serialize(r.tri)},
       {"cw", r.cutwidth},
       {"cng", r.congestion},
       {"linear",
        {{"k", r.linear.k},
         {"max_genus_sum", r.linear.max_genus_sum},
         {"bound_3k4", r.linear.bound_3k4},
         {"L_upper", r.linear.L_upper},
         {"passed", r.linear.all_checks_pass()}}},
       {"graph",
        {{"k", r.graph.k},
         {"single_tet_case", r.graph.single_tet_case},
         {"max_top_genus", r.graph.max_top_genus},
         {"bound_6k", r.graph.bound_6k},
         {"passed", r.graph.all_checks_pass()}}},
       {"passed", r.passed()}};
}

}  // namespace widthlab
