// Command-line front end: load algebras from JSON files or the built-in
// catalog, build their graphs, and print structural classifications.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "liegraph/io.hpp"
#include "liegraph/walks.hpp"

using namespace liegraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSchema = 2;

struct Loaded {
    std::string name;
    LieAlgebra algebra{1, {"x1"}, 0};
    std::optional<AdmissibleBasis> basis;
    std::optional<MagmaGradation> gradation;
};

Loaded load_source(const std::string& src) {
    Loaded out;
    if (src.rfind("catalog:", 0) == 0) {
        auto entry = catalog_get(src.substr(8));
        out.name = entry.name;
        out.algebra = entry.algebra;
        out.basis = entry.basis;
        out.gradation = entry.gradation;
        return out;
    }
    AlgebraFile f = load_algebra_file(src);
    out.name = src;
    out.algebra = f.algebra;
    out.basis = f.basis;
    out.gradation = f.gradation;
    return out;
}

/// Basis for graph construction: the declared one, else a bounded search.
AdmissibleBasis require_basis(Loaded& l) {
    if (l.basis) return *l.basis;
    auto found = eigen_basis_search(l.algebra);
    if (!found)
        throw std::runtime_error("no admissible spanning set found for '" + l.name +
                                 "' (bounded search exhausted)");
    return *found;
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
    std::cout << "wrote " << path << "\n";
}

int cmd_validate(const std::string& src) {
    Loaded l = load_source(src);
    auto rep = l.algebra.verify_lie();
    if (!rep.ok) {
        for (const auto& v : rep.violations)
            std::cout << "jacobi violation on (" << l.algebra.name(v.j) << ", "
                      << l.algebra.name(v.k) << ", " << l.algebra.name(v.l)
                      << "), residual " << pretty_combination(v.residual, l.algebra.names())
                      << "\n";
        std::cout << "INVALID: " << rep.violations.size() << " Jacobi violation(s)\n";
        return kExitValidation;
    }
    std::cout << "valid Lie algebra, dim " << l.algebra.dim() << "\n";
    if (l.basis)
        std::cout << "admissible spanning set with " << l.basis->size() << " elements ("
                  << (l.basis->minimal ? "minimal" : "redundant") << ")\n";
    if (l.gradation)
        std::cout << "magma gradation with granularity " << l.gradation->granularity() << "\n";
    return kExitOk;
}

int cmd_graph(const std::string& src, const std::string& dot_path) {
    Loaded l = load_source(src);
    AdmissibleBasis b = require_basis(l);
    LieGraph g = build_graph(b);
    std::cout << g.n_vertices << " vertices, " << g.edges.size() << " edges\n";
    auto rules = validate_edge_rules(g);
    auto bounds = validate_bounds(g);
    std::cout << "edge rules: " << (rules.ok ? "pass" : "FAIL") << ", bounds: "
              << (bounds.ok ? "pass" : "FAIL") << "\n";
    if (!dot_path.empty()) write_or_print(emit_dot(g), dot_path);
    return rules.ok && bounds.ok ? kExitOk : kExitValidation;
}

void print_series(const GraphSeries& s, const LieGraph& g, const std::string& kind,
                  const std::string& dot_prefix) {
    std::cout << kind << " series vertex counts:";
    for (const auto& st : s.stages) std::cout << " " << st.vertices.size();
    if (!s.terminated) std::cout << " (stable)";
    std::cout << "\n";
    if (!dot_prefix.empty())
        for (size_t i = 0; i < s.stages.size(); ++i)
            write_or_print(emit_dot_stage(g, s.stages[i]),
                           dot_prefix + "." + std::to_string(i) + ".dot");
}

int cmd_derived(const std::string& src, const std::string& dot_prefix) {
    Loaded l = load_source(src);
    AdmissibleBasis b = require_basis(l);
    LieGraph g = build_graph(b);
    auto s = b.minimal ? derived_graph_series(g) : derived_graph_series_redundant(g, b);
    print_series(s, g, "derived", dot_prefix);
    std::cout << (s.terminated ? "terminates (solvable" : "does not terminate (non-solvable");
    if (s.terminated)
        std::cout << ", derived length " << s.stages.size() - 1 << ")\n";
    else
        std::cout << ")\n";
    return kExitOk;
}

int cmd_lcs(const std::string& src, const std::string& dot_prefix) {
    Loaded l = load_source(src);
    AdmissibleBasis b = require_basis(l);
    LieGraph g = build_graph(b);
    auto s = lcs_graph_series(g);
    print_series(s, g, "lower central", dot_prefix);
    std::cout << (s.terminated ? "terminates (nilpotent)" : "does not terminate (non-nilpotent)")
              << "\n";
    return kExitOk;
}

int cmd_ideals(const std::string& src) {
    Loaded l = load_source(src);
    AdmissibleBasis b = require_basis(l);
    LieGraph g = build_graph(b);
    auto en = enumerate_ideals(l.algebra, b, g);
    if (en.truncated) std::cout << "note: union lattice truncated to pairs of closures\n";
    for (const auto& ideal : en.ideals) {
        std::cout << "ideal dim " << ideal.span.dim() << ": {";
        for (size_t i = 0; i < ideal.vertices.size(); ++i)
            std::cout << (i ? "," : "") << g.name(ideal.vertices[i]);
        std::cout << "}" << (ideal.is_closure ? " (closure)" : "") << "\n";
    }
    return kExitOk;
}

int cmd_classify(const std::string& src, const std::string& dot_path) {
    Loaded l = load_source(src);
    auto lie = l.algebra.verify_lie();
    if (!lie.ok) {
        std::cout << "not a Lie algebra (" << lie.violations.size() << " Jacobi violations)\n";
        return kExitValidation;
    }
    AdmissibleBasis b = require_basis(l);
    LieGraph g = build_graph(b);

    std::cout << "algebra: " << l.name << " (dim " << l.algebra.dim() << ", "
              << (b.minimal ? "minimal" : "redundant") << " graph with " << g.n_vertices
              << " vertices, " << g.edges.size() << " edges)\n";
    bool abelian = is_abelian_graph(g);
    std::cout << "abelian: " << (abelian ? "yes" : "no") << "\n";
    auto solv = is_solvable_graph(g);
    std::cout << "solvable: " << (solv.solvable ? "yes" : "no");
    if (!solv.solvable && solv.witness) {
        std::cout << " (self-contained closed walk:";
        for (int v : solv.witness->vertices) std::cout << " " << g.name(v);
        std::cout << ")";
    }
    std::cout << "\n";
    auto nil = is_nilpotent_graph(g);
    std::cout << "nilpotent: " << (nil.nilpotent ? "yes" : "no");
    if (nil.nilpotent) {
        if (abelian)
            std::cout << " (abelian, index 1)";
        else if (auto idx = nilpotency_index(g))
            std::cout << " (index " << *idx << ")";
    }
    std::cout << "\n";
    Subspace z = center_oracle(l.algebra);
    std::cout << "center dim: " << z.dim() << "\n";
    auto levi = levi_report(l.algebra, b, g);
    std::cout << "radical dim: " << levi.radical.dim();
    if (!levi.radical.is_zero() && levi.radical_nilpotent)
        std::cout << " (nilpotent, " << levi.radical_lcs_steps << "-step)";
    std::cout << "\n";
    auto ss = semisimplicity_report(l.algebra, b, g);
    std::cout << "semisimple: " << (ss.cartan_semisimple ? "yes" : "no")
              << " [graph diagnostics: sinkhole-free=" << (ss.sinkhole_free ? "y" : "n")
              << " loose-end-free=" << (ss.loose_end_free ? "y" : "n")
              << " all-vertices-on-self-contained-walks="
              << (ss.every_vertex_on_self_contained_closed_walk ? "y" : "n") << " (conjecture)]\n";
    std::cout << "simple candidate: " << (ss.simple_candidate ? "yes" : "no") << " ("
              << ss.components.size() << " component" << (ss.components.size() == 1 ? "" : "s")
              << ")\n";
    std::cout << "reductive: " << (is_reductive_oracle(l.algebra) ? "yes" : "no") << "\n";
    auto ltd = ltd_classification(g);
    int lakes = 0, tribs = 0, streams = 0;
    for (auto c : ltd.vertex_class) {
        lakes += c == FlowClass::Lake;
        tribs += c == FlowClass::Tributary;
        streams += c == FlowClass::DisappearingStream;
    }
    std::cout << "flow classes: " << lakes << " lake, " << tribs << " tributary, " << streams
              << " disappearing-stream vertices\n";
    auto zn = zn_symmetry(g);
    std::cout << "cyclic vertex symmetry: " << (zn.symmetric ? "yes" : "no") << "\n";
    if (!dot_path.empty()) write_or_print(emit_dot_levi(g, levi), dot_path);
    return kExitOk;
}

int cmd_graded(const std::string& src, const std::string& dot_path) {
    Loaded l = load_source(src);
    if (!l.gradation) {
        std::cout << "no gradation declared for '" << l.name << "'\n";
        return kExitValidation;
    }
    const auto& mg = *l.gradation;
    LieGraph g = build_graded_graph(mg);
    std::cout << "granularity " << mg.granularity() << "; graded graph has " << g.n_vertices
              << " vertices, " << g.edges.size() << " edges\n";
    std::cout << "finest known: "
              << (is_finest_known(mg, l.algebra) == FinestKnown::yes_minimal ? "yes (minimal)"
                                                                             : "unknown")
              << "\n";
    auto der = graded_derived_series(l.algebra, mg);
    std::cout << "graded derived spans:";
    for (const auto& sp : der.stage_spans) std::cout << " " << sp.dim();
    if (der.first_mismatch)
        std::cout << "  (gradation too coarse at stage " << *der.first_mismatch << ")";
    std::cout << "\n";
    auto lcs = graded_lcs(l.algebra, mg);
    std::cout << "graded lower central spans:";
    for (const auto& sp : lcs.stage_spans) std::cout << " " << sp.dim();
    if (!lcs.series.terminated) std::cout << " (stable)";
    if (lcs.first_mismatch)
        std::cout << "  (gradation too coarse at stage " << *lcs.first_mismatch << ")";
    std::cout << "\n";
    if (!dot_path.empty()) write_or_print(emit_dot(g), dot_path);
    return kExitOk;
}

int cmd_similarity(const std::string& src, const std::string& by, const std::string& on,
                   int order) {
    Loaded l = load_source(src);
    AdmissibleBasis b = require_basis(l);
    LieGraph g = build_graph(b);
    auto index_of = [&](const std::string& nm) {
        for (int i = 0; i < b.size(); ++i)
            if (b.names[i] == nm) return i;
        throw std::runtime_error("unknown basis element '" + nm + "'");
    };
    int gen = index_of(by), start = index_of(on);
    auto series = similarity_series(b, g, gen, start, order);
    const auto& w = series.walk;
    if (w.terminating)
        std::cout << "walk terminates after " << w.length << " step(s)\n";
    else
        std::cout << "walk is eventually periodic (preperiod " << w.preperiod << ", period "
                  << w.period << ")\n";
    for (const auto& t : series.terms) {
        std::cout << "  " << b.names[t.vertex] << ": ";
        for (size_t i = 0; i < t.contributions.size() && i < 6; ++i) {
            const auto& [n, f] = t.contributions[i];
            std::cout << (i ? " + " : "") << "w(" << n << ")/" << rational_str(Rat(1) / f);
        }
        if (t.contributions.size() > 6) std::cout << " + ...";
        std::cout << "  [partial sum " << t.coefficient_sum.str() << " ~ "
                  << t.coefficient_sum.to_double() << "]\n";
    }
    return kExitOk;
}

int cmd_export(const std::string& name, const std::string& out_path) {
    auto entry = catalog_get(name);
    auto j = algebra_to_json(entry.name, entry.algebra, entry.basis, entry.gradation);
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_algebra_file(out_path, j);
    return kExitOk;
}

int cmd_selftest();

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural analysis of Lie algebras via labeled directed graphs"};
    app.require_subcommand(1);

    std::string src, dot_path, dot_prefix, by, on, out_path;
    int order = 8;

    auto* validate = app.add_subcommand("validate", "check the Jacobi identity and declared data");
    validate->add_option("source", src, "file or catalog:NAME")->required();

    auto* graph = app.add_subcommand("graph", "build and check the associated graph");
    graph->add_option("source", src)->required();
    graph->add_option("--dot", dot_path, "write DOT output");

    auto* derived = app.add_subcommand("derived", "graph-level derived series");
    derived->add_option("source", src)->required();
    derived->add_option("--dot", dot_prefix, "write one DOT file per stage (prefix)");

    auto* lcs = app.add_subcommand("lcs", "graph-level lower central series");
    lcs->add_option("source", src)->required();
    lcs->add_option("--dot", dot_prefix);

    auto* ideals = app.add_subcommand("ideals", "enumerate ideal-spanning vertex sets");
    ideals->add_option("source", src)->required();

    auto* classify = app.add_subcommand("classify", "full structural report");
    classify->add_option("source", src)->required();
    classify->add_option("--dot", dot_path, "write the Levi-colored DOT view");

    auto* graded = app.add_subcommand("graded", "gradation pipeline");
    graded->add_option("source", src)->required();
    graded->add_option("--dot", dot_path);

    auto* similarity = app.add_subcommand("similarity", "ad-walk similarity series");
    similarity->add_option("source", src)->required();
    similarity->add_option("--by", by, "generator element name")->required();
    similarity->add_option("--on", on, "transformed element name")->required();
    similarity->add_option("--order", order, "series truncation order");

    auto* catalog = app.add_subcommand("catalog", "list built-in algebras");
    catalog->add_subcommand("list", "print entry names");

    auto* exp = app.add_subcommand("export", "write a catalog entry as JSON");
    exp->add_option("name", src)->required();
    exp->add_option("-o,--out", out_path, "output path (stdout otherwise)");

    app.add_subcommand("selftest", "oracle-equivalence suite over the catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(src);
        if (graph->parsed()) return cmd_graph(src, dot_path);
        if (derived->parsed()) return cmd_derived(src, dot_prefix);
        if (lcs->parsed()) return cmd_lcs(src, dot_prefix);
        if (ideals->parsed()) return cmd_ideals(src);
        if (classify->parsed()) return cmd_classify(src, dot_path);
        if (graded->parsed()) return cmd_graded(src, dot_path);
        if (similarity->parsed()) return cmd_similarity(src, by, on, order);
        if (catalog->parsed()) {
            for (const auto& n : catalog_names()) std::cout << n << "\n";
            return kExitOk;
        }
        if (exp->parsed()) return cmd_export(src, out_path);
        if (app.got_subcommand("selftest")) return cmd_selftest();
    } catch (const schema_error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

namespace {

int cmd_selftest() {
    int checked = 0, failed = 0;
    for (const auto& name : catalog_names()) {
        auto entry = catalog_get(name);
        const auto& g = entry.algebra;
        auto note = [&](bool ok, const std::string& what) {
            ++checked;
            if (!ok) {
                ++failed;
                std::cout << "FAIL " << name << ": " << what << "\n";
            }
        };
        note(g.verify_lie().ok, "Jacobi identity");
        if (entry.basis) {
            LieGraph graph = build_graph(*entry.basis);
            note(validate_edge_rules(graph).ok, "edge rules");
            note(validate_bounds(graph).ok, "bounds");
            auto ds = entry.basis->minimal ? derived_graph_series(graph)
                                           : derived_graph_series_redundant(graph, *entry.basis);
            auto oracle = derived_series_oracle(g);
            bool spans_ok = true;
            for (size_t s = 0; s < ds.stages.size(); ++s) {
                std::vector<Vec> gens;
                for (int v : ds.stages[s].vertices) gens.push_back(entry.basis->elements[v]);
                Subspace span = Subspace::span(g.dim(), gens);
                const Subspace& want =
                    s < oracle.stages.size() ? oracle.stages[s] : oracle.stages.back();
                spans_ok = spans_ok && span == want;
            }
            note(spans_ok, "derived series spans");
            note(is_solvable_graph(graph).solvable == is_solvable_oracle(g), "solvability verdict");
            note(is_nilpotent_graph(graph).nilpotent == is_nilpotent_oracle(g),
                 "nilpotency verdict");
            if (entry.basis->minimal)
                note(center_via_kernels(g, *entry.basis) == center_oracle(g), "center via kernels");
        }
        if (entry.gradation) {
            note(!graded_derived_series(g, *entry.gradation).first_mismatch,
                 "graded derived spans");
            note(!graded_lcs(g, *entry.gradation).first_mismatch, "graded lower central spans");
        }
    }
    std::cout << checked << " checks, " << failed << " failures\n";
    return failed == 0 ? kExitOk : kExitValidation;
}

}  // namespace
