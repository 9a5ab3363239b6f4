#include "liegraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace liegraph {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw schema_error(path + ": " + what);
}

Scalar parse_scalar(const json& j, int field_d, const std::string& path) {
    try {
        if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
        if (j.is_number_integer()) return Scalar(Rat(j.get<long>()));
        if (j.is_object()) {
            Rat a(0), b(0);
            if (j.contains("a")) a = parse_rational(j.at("a").get<std::string>());
            if (j.contains("b")) b = parse_rational(j.at("b").get<std::string>());
            return Scalar(a, b, field_d);
        }
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    fail(path, "expected a rational string, integer, or {a,b} object");
}

json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return rational_str(s.a());
    return json{{"a", rational_str(s.a())}, {"b", rational_str(s.b())}};
}

Vec parse_vector(const json& j, int dim, int field_d, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        fail(path, "expected an array of " + std::to_string(dim) + " scalars");
    Vec v(dim);
    for (int i = 0; i < dim; ++i)
        v[i] = parse_scalar(j[i], field_d, path + "/" + std::to_string(i));
    return v;
}

}  // namespace

AlgebraFile load_algebra_json(const json& j) {
    if (!j.is_object()) fail("", "top level must be an object");
    if (!j.contains("dim") || !j.at("dim").is_number_integer()) fail("/dim", "missing integer");
    int dim = j.at("dim").get<int>();
    if (dim <= 0 || dim > 64) fail("/dim", "dimension must be in 1..64");
    int field_d = 0;
    if (j.contains("field_d")) {
        if (!j.at("field_d").is_number_integer()) fail("/field_d", "must be an integer");
        field_d = j.at("field_d").get<int>();
        if (field_d < 0) fail("/field_d", "must be nonnegative");
    }
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        if (!j.at("basis_names").is_array() || static_cast<int>(j.at("basis_names").size()) != dim)
            fail("/basis_names", "expected " + std::to_string(dim) + " names");
        for (const auto& n : j.at("basis_names")) names.push_back(n.get<std::string>());
    }

    AlgebraFile out;
    out.algebra = LieAlgebra(dim, names, field_d);
    std::map<std::pair<int, int>, Vec> seen;
    if (j.contains("brackets")) {
        if (!j.at("brackets").is_array()) fail("/brackets", "must be an array");
        int idx = 0;
        for (const auto& b : j.at("brackets")) {
            std::string path = "/brackets/" + std::to_string(idx++);
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
                fail(path, "expected {i, j, coeffs}");
            int bi = b.at("i").get<int>(), bj = b.at("j").get<int>();
            if (bi < 1 || bi > dim || bj < 1 || bj > dim) fail(path, "bracket index out of range");
            if (bi == bj) fail(path, "bracket of an element with itself");
            Vec v(dim);
            for (const auto& [key, val] : b.at("coeffs").items()) {
                int t = 0;
                try {
                    t = std::stoi(key);
                } catch (...) {
                    fail(path + "/coeffs", "non-integer target index '" + key + "'");
                }
                if (t < 1 || t > dim) fail(path + "/coeffs", "target index out of range");
                v[t - 1] = parse_scalar(val, field_d, path + "/coeffs/" + key);
            }
            // an explicitly repeated pair must be consistently antisymmetric
            Vec neg(dim);
            for (int t = 0; t < dim; ++t) neg[t] = -v[t];
            auto mirror = seen.find({bj, bi});
            if (mirror != seen.end() && !(mirror->second == neg))
                fail(path, "antisymmetry violated against earlier (j,i) entry");
            if (seen.count({bi, bj})) fail(path, "duplicate bracket pair");
            seen[{bi, bj}] = v;
            out.algebra.set_bracket(bi - 1, bj - 1, std::move(v));
        }
    }

    if (j.contains("admissible_basis")) {
        const auto& ab = j.at("admissible_basis");
        if (!ab.is_array() || ab.empty()) fail("/admissible_basis", "expected a nonempty array");
        std::vector<Vec> elems;
        for (size_t i = 0; i < ab.size(); ++i)
            elems.push_back(
                parse_vector(ab[i], dim, field_d, "/admissible_basis/" + std::to_string(i)));
        auto chk = check_admissible(out.algebra, elems);
        if (!chk.ok()) fail("/admissible_basis", to_string(chk.error));
        out.basis = chk.basis;
    }

    if (j.contains("gradation")) {
        const auto& gr = j.at("gradation");
        if (!gr.is_object() || !gr.contains("parts") || !gr.contains("delta"))
            fail("/gradation", "expected {parts, delta}");
        std::vector<Subspace> parts;
        for (size_t p = 0; p < gr.at("parts").size(); ++p) {
            std::vector<Vec> gens;
            for (size_t i = 0; i < gr.at("parts")[p].size(); ++i)
                gens.push_back(parse_vector(gr.at("parts")[p][i], dim, field_d,
                                            "/gradation/parts/" + std::to_string(p)));
            parts.push_back(Subspace::span(dim, gens));
        }
        int m = static_cast<int>(parts.size());
        const auto& dj = gr.at("delta");
        if (!dj.is_array() || static_cast<int>(dj.size()) != m)
            fail("/gradation/delta", "expected " + std::to_string(m) + " rows");
        std::vector<std::vector<int>> delta(m, std::vector<int>(m, kNoTarget));
        for (int r = 0; r < m; ++r) {
            const auto& row = dj[r];
            bool triangular = static_cast<int>(row.size()) == m - r;
            if (!triangular && static_cast<int>(row.size()) != m)
                fail("/gradation/delta", "row " + std::to_string(r) + " has the wrong length");
            for (int c = 0; c < static_cast<int>(row.size()); ++c) {
                int col = triangular ? r + c : c;
                int v = row[c].get<int>();
                if (v < 0 || v > m) fail("/gradation/delta", "entry out of range");
                delta[r][col] = v == 0 ? kNoTarget : v - 1;
                delta[col][r] = delta[r][col];
            }
        }
        auto chk = verify_gradation(out.algebra, parts, delta);
        if (!chk.ok()) fail("/gradation", chk.error);
        out.gradation = chk.gradation;
    }
    return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error(path + ": cannot open file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw schema_error(path + ": " + e.what());
    }
    return load_algebra_json(j);
}

nlohmann::json algebra_to_json(const std::string& name, const LieAlgebra& g,
                               const std::optional<AdmissibleBasis>& basis,
                               const std::optional<MagmaGradation>& gradation) {
    json j;
    j["name"] = name;
    j["dim"] = g.dim();
    j["field_d"] = g.field_d();
    j["basis_names"] = g.names();
    json brackets = json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int k = i + 1; k < g.dim(); ++k) {
            const Vec& v = g.bracket_basis(i, k);
            if (is_zero(v)) continue;
            json coeffs = json::object();
            for (int t = 0; t < g.dim(); ++t)
                if (!v[t].is_zero()) coeffs[std::to_string(t + 1)] = scalar_to_json(v[t]);
            brackets.push_back({{"i", i + 1}, {"j", k + 1}, {"coeffs", coeffs}});
        }
    j["brackets"] = brackets;
    if (basis) {
        json ab = json::array();
        for (const auto& e : basis->elements) {
            json row = json::array();
            for (const auto& s : e) row.push_back(scalar_to_json(s));
            ab.push_back(row);
        }
        j["admissible_basis"] = ab;
    }
    if (gradation) {
        json parts = json::array();
        for (const auto& p : gradation->parts) {
            json rows = json::array();
            for (int r = 0; r < p.dim(); ++r) {
                json row = json::array();
                for (const auto& s : p.basis().row(r)) row.push_back(scalar_to_json(s));
                rows.push_back(row);
            }
            parts.push_back(rows);
        }
        json delta = json::array();
        int m = gradation->granularity();
        for (int r = 0; r < m; ++r) {
            json row = json::array();
            for (int c = r; c < m; ++c)
                row.push_back(gradation->delta[r][c] == kNoTarget ? 0 : gradation->delta[r][c] + 1);
            delta.push_back(row);
        }
        j["gradation"] = {{"parts", parts}, {"delta", delta}};
    }
    return j;
}

void save_algebra_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot write file");
    out << j.dump(2) << "\n";
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string emit_dot(const LieGraph& g, const DotOptions& opts) {
    std::ostringstream os;
    os << "digraph lie {\n  rankdir=LR;\n  node [shape=circle];\n";
    std::set<int> green(opts.highlight_vertices.begin(), opts.highlight_vertices.end());
    for (int v = 0; v < g.n_vertices; ++v) {
        os << "  n" << v << " [label=" << quote(g.name(v));
        if (opts.levi_colors)
            os << ", color=" << (green.count(v) ? "\"green\"" : "\"blue\"");
        os << "];\n";
    }
    std::set<Edge> dashed(opts.dashed_edges.begin(), opts.dashed_edges.end());
    // group by (start, end, dashed-ness); labels joined in label order
    std::map<std::tuple<int, int, bool>, std::vector<int>> grouped;
    auto add = [&](const Edge& e, bool dash) {
        if (opts.collapse_multi_edges)
            grouped[{e.start, e.end, dash}].push_back(e.label);
        else
            grouped[{e.start, e.end, dash}] = {e.label};
    };
    for (const auto& e : g.edges) add(e, dashed.count(e) > 0);
    for (const auto& e : g.aux_edges) add(e, true);
    for (auto& [key, labels] : grouped) {
        auto [s, t, dash] = key;
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        std::string lab;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i) lab += ",";
            lab += g.name(labels[i]);
        }
        os << "  n" << s << " -> n" << t << " [label=" << quote(lab);
        if (dash) {
            os << ", style=dashed";
            if (opts.levi_colors) os << ", color=\"orange\"";
        } else if (opts.levi_colors) {
            os << ", color=" << (green.count(s) && green.count(t) ? "\"green\"" : "\"blue\"");
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_dot_stage(const LieGraph& g, const GraphSeries::Stage& stage) {
    // auxiliary edges may be labeled by vertices outside the stage, so label
    // text comes from the full graph
    std::ostringstream os;
    os << "digraph lie {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int v : stage.vertices) os << "  n" << v << " [label=" << quote(g.name(v)) << "];\n";
    std::map<std::tuple<int, int, bool>, std::vector<int>> grouped;
    for (const auto& e : stage.edges) grouped[{e.start, e.end, false}].push_back(e.label);
    for (const auto& e : stage.aux_edges) grouped[{e.start, e.end, true}].push_back(e.label);
    for (auto& [key, labels] : grouped) {
        auto [s, t, dash] = key;
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        std::string lab;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i) lab += ",";
            lab += g.name(labels[i]);
        }
        os << "  n" << s << " -> n" << t << " [label=" << quote(lab)
           << (dash ? ", style=dashed" : "") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_dot_levi(const LieGraph& g, const LeviReport& rep) {
    DotOptions opts;
    opts.levi_colors = true;
    opts.highlight_vertices = rep.radical_vertices;
    opts.dashed_edges = rep.cross_edges;
    return emit_dot(g, opts);
}

}  // namespace liegraph
