#include "liegraph/graded.hpp"

#include <stdexcept>

namespace liegraph {

GradationCheck verify_gradation(const LieAlgebra& g, const std::vector<Subspace>& parts,
                                const std::vector<std::vector<int>>& delta_table,
                                std::vector<std::string> part_names) {
    GradationCheck res;
    int m = static_cast<int>(parts.size());
    if (m == 0) {
        res.error = "empty decomposition";
        return res;
    }
    int total = 0;
    Subspace all(g.dim());
    for (const auto& p : parts) {
        if (p.ambient() != g.dim()) {
            res.error = "part ambient dimension mismatch";
            return res;
        }
        total += p.dim();
        all = sum(all, p);
    }
    if (total != g.dim() || all.dim() != g.dim()) {
        res.error = "parts do not form a direct-sum decomposition";
        return res;
    }
    MagmaGradation mg;
    mg.parts = parts;
    mg.delta.assign(m, std::vector<int>(m, kNoTarget));
    for (int j = 0; j < m; ++j)
        for (int k = j; k < m; ++k) {
            Subspace br = subspace_bracket(g, parts[j], parts[k]);
            if (br.is_zero()) continue;  // vanishing brackets are recorded as no-target
            int target = (j < static_cast<int>(delta_table.size()) &&
                          k < static_cast<int>(delta_table[j].size()))
                             ? delta_table[j][k]
                             : kNoTarget;
            if (target < 0 || target >= m || !parts[target].contains(br)) {
                res.error = "bracket escapes the stated target part";
                res.witness_j = j;
                res.witness_k = k;
                res.escaping = br.basis().row(0);
                return res;
            }
            mg.delta[j][k] = target;
            mg.delta[k][j] = target;
        }
    if (!part_names.empty()) {
        if (static_cast<int>(part_names.size()) != m)
            throw std::invalid_argument("part name count mismatch");
        mg.part_names = std::move(part_names);
    } else {
        for (int j = 0; j < m; ++j) mg.part_names.push_back("g" + std::to_string(j + 1));
    }
    res.gradation = std::move(mg);
    return res;
}

LieGraph build_graded_graph(const MagmaGradation& mg) {
    LieGraph g;
    g.n_vertices = mg.granularity();
    g.vertex_names = mg.part_names;
    g.allow_self_label = true;
    for (int j = 0; j < g.n_vertices; ++j)
        for (int k = j; k < g.n_vertices; ++k) {
            int t = mg.delta[j][k];
            if (t == kNoTarget) continue;
            g.edges.push_back({j, k, t});
            g.edges.push_back({k, j, t});
        }
    g.normalize();
    return g;
}

namespace {

GradedSeriesResult run_graded(const LieAlgebra& g, const MagmaGradation& mg, bool lower_central) {
    GradedSeriesResult out;
    LieGraph graph = build_graded_graph(mg);
    out.series = lower_central ? lcs_graph_series(graph) : derived_graph_series(graph);
    SeriesOracle oracle =
        lower_central ? lower_central_series_oracle(g) : derived_series_oracle(g);
    for (size_t s = 0; s < out.series.stages.size(); ++s) {
        Subspace span(g.dim());
        for (int v : out.series.stages[s].vertices) span = sum(span, mg.parts[v]);
        // oracle stages stop at their fixpoint; extend by repetition
        const Subspace& want = s < oracle.stages.size() ? oracle.stages[s] : oracle.stages.back();
        if (!out.first_mismatch && !(span == want))
            out.first_mismatch = static_cast<int>(s);
        out.stage_spans.push_back(std::move(span));
    }
    // a terminated oracle series that the graded graph never reaches is also a
    // mismatch ("gradation too coarse")
    if (!out.first_mismatch && oracle.terminated != out.series.terminated)
        out.first_mismatch = static_cast<int>(out.series.stages.size());
    return out;
}

}  // namespace

GradedSeriesResult graded_derived_series(const LieAlgebra& g, const MagmaGradation& mg) {
    return run_graded(g, mg, false);
}

GradedSeriesResult graded_lcs(const LieAlgebra& g, const MagmaGradation& mg) {
    return run_graded(g, mg, true);
}

FinestKnown is_finest_known(const MagmaGradation& mg, const LieAlgebra& g) {
    return mg.granularity() == g.dim() ? FinestKnown::yes_minimal : FinestKnown::unknown;
}

MagmaGradation gradation_from_minimal_basis(const LieAlgebra& g, const AdmissibleBasis& b) {
    if (!b.minimal) throw std::invalid_argument("singleton gradation needs a minimal basis");
    std::vector<Subspace> parts;
    for (const auto& e : b.elements) parts.push_back(Subspace::span(g.dim(), {e}));
    auto chk = verify_gradation(g, parts, b.delta, b.names);
    if (!chk.ok()) throw std::logic_error("minimal basis did not induce a gradation: " + chk.error);
    return *chk.gradation;
}

}  // namespace liegraph
