#pragma once

#include "liegraph/catalog.hpp"
#include "liegraph/structure.hpp"

// single-header nlohmann/json from vendor/
#include <json.hpp>

namespace liegraph {

/// Malformed input file; the message carries a JSON-pointer-style path.
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlgebraFile {
    LieAlgebra algebra;
    std::optional<AdmissibleBasis> basis;
    std::optional<MagmaGradation> gradation;
    AlgebraFile() : algebra(1, {"x1"}, 0) {}
};

AlgebraFile load_algebra_json(const nlohmann::json& j);
AlgebraFile load_algebra_file(const std::string& path);

nlohmann::json algebra_to_json(const std::string& name, const LieAlgebra& g,
                               const std::optional<AdmissibleBasis>& basis,
                               const std::optional<MagmaGradation>& gradation);
void save_algebra_file(const std::string& path, const nlohmann::json& j);

struct DotOptions {
    bool collapse_multi_edges = true;  // one arrow per (start,end), comma-joined labels
    std::vector<int> highlight_vertices;   // colored green (e.g. radical part)
    std::vector<Edge> dashed_edges;        // auxiliary / cross edges
    bool levi_colors = false;              // green radical, blue complement, dashed orange cross
};

std::string emit_dot(const LieGraph& g, const DotOptions& opts = {});
std::string emit_dot_stage(const LieGraph& g, const GraphSeries::Stage& stage);
std::string emit_dot_levi(const LieGraph& g, const LeviReport& rep);

}  // namespace liegraph
