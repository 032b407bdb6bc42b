#pragma once

#include <json.hpp>

#include "widthlab/bounds.hpp"
#include "widthlab/census.hpp"
#include "widthlab/handles.hpp"
#include "widthlab/inequalities.hpp"
#include "widthlab/triangulation.hpp"
#include "widthlab/width.hpp"

namespace widthlab {

// JSON encodings used by the CLI and the Python bindings; the shapes are
// described by the schemas shipped in schemas/.

void to_json(nlohmann::json& j, const SkeletonSummary& s);
void to_json(nlohmann::json& j, const ValidationReport& r);
void to_json(nlohmann::json& j, const LinearLayout& layout);
void to_json(nlohmann::json& j, const HostTree& host);
void to_json(nlohmann::json& j, const TreeDecomposition& d);
void to_json(nlohmann::json& j, const PathDecomposition& d);
void to_json(nlohmann::json& j, const NiceTreeDecomposition& d);
void to_json(nlohmann::json& j, const WidthReport& r);
void to_json(nlohmann::json& j, const SurfaceSummary& s);
void to_json(nlohmann::json& j, const LinearCertificate& c);
void to_json(nlohmann::json& j, const GraphSplittingCertificate& c);
void to_json(nlohmann::json& j, const InequalityReport& r);
void to_json(nlohmann::json& j, const BatchRow& row);
void to_json(nlohmann::json& j, const BoundsReport& r);
void to_json(nlohmann::json& j, const CensusRecord& r);

}  // namespace widthlab
