#include "liegraph/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace liegraph {

CentralVertices central_vertices(const LieGraph& g, const AdmissibleBasis& b) {
    CentralVertices cv{{}, Subspace(static_cast<int>(b.elements.empty() ? 0 : b.elements[0].size()))};
    std::vector<Vec> gens;
    for (int v = 0; v < g.n_vertices; ++v)
        if (g.out_degree(v) == 0) {
            cv.vertices.push_back(v);
            gens.push_back(b.elements[v]);
        }
    if (!gens.empty()) cv.span = Subspace::span(static_cast<int>(gens[0].size()), gens);
    return cv;
}

AdmissibleBasis extend_basis_with_center(const LieAlgebra& g, const AdmissibleBasis& b) {
    Subspace z = center_oracle(g);
    std::vector<Vec> elements = b.elements;
    std::vector<std::string> names = b.names;
    for (int i = 0; i < z.dim(); ++i) {
        Vec c = z.basis().row(i);
        bool dup = false;
        for (const auto& e : elements)
            if (proportional(c, e)) dup = true;
        if (!dup) {
            names.push_back(pretty_combination(c, g.names()));
            elements.push_back(std::move(c));
        }
    }
    auto chk = check_admissible(g, elements, names);
    if (!chk.ok())
        throw std::logic_error("central extension broke admissibility: " + to_string(chk.error));
    return *chk.basis;
}

Subspace center_via_kernels(const LieAlgebra& g, const AdmissibleBasis& b) {
    if (!b.minimal) throw std::invalid_argument("kernel-slice center needs a minimal basis");
    int n = b.size();
    // stack all alpha slices: row (l, k) has entries alpha[j][k] where
    // delta(j,k) == l
    Mat stacked(n * n, n);
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                if (b.delta[j][k] == l) stacked.at(l * n + k, j) = b.alpha.at(j, k);
    std::vector<Vec> coords = kernel(stacked);
    // map coefficient vectors through the basis elements
    std::vector<Vec> gens;
    for (const auto& lam : coords) {
        Vec x(g.dim());
        for (int j = 0; j < n; ++j)
            if (!lam[j].is_zero()) x = x + lam[j] * b.elements[j];
        gens.push_back(std::move(x));
    }
    return Subspace::span(g.dim(), gens);
}

bool is_abelian_graph(const LieGraph& g) { return g.edges.empty(); }

bool satisfies_igp(const LieGraph& g, const std::vector<int>& w) {
    std::vector<bool> in(g.n_vertices, false);
    for (int v : w) in.at(v) = true;
    for (const auto& e : g.edges)
        if (in[e.start] && !in[e.end]) return false;
    return true;
}

namespace {

uint64_t closure_mask(const LieGraph& g, int seed) {
    uint64_t mask = 1ULL << seed;
    bool grown = true;
    while (grown) {
        grown = false;
        for (const auto& e : g.edges)
            if ((mask >> e.start & 1) && !(mask >> e.end & 1)) {
                mask |= 1ULL << e.end;
                grown = true;
            }
    }
    return mask;
}

std::vector<int> mask_to_list(uint64_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

}  // namespace

IdealEnumeration enumerate_ideals(const LieAlgebra& g, const AdmissibleBasis& b,
                                  const LieGraph& graph) {
    if (graph.n_vertices > 63) throw std::invalid_argument("ideal enumeration limited to 63 vertices");
    IdealEnumeration out;
    int n = graph.n_vertices;
    std::set<uint64_t> closures;
    for (int seed = 0; seed < n; ++seed) closures.insert(closure_mask(graph, seed));
    std::vector<uint64_t> cl(closures.begin(), closures.end());

    std::set<uint64_t> candidates;
    candidates.insert(0);
    candidates.insert(n == 64 ? ~0ULL : (1ULL << n) - 1);
    if (cl.size() <= 20) {
        // all unions of distinct closures, deduplicated incrementally
        std::set<uint64_t> acc{0};
        for (uint64_t c : cl) {
            std::set<uint64_t> next = acc;
            for (uint64_t m : acc) next.insert(m | c);
            acc = std::move(next);
        }
        candidates.insert(acc.begin(), acc.end());
    } else {
        out.truncated = true;
        for (size_t i = 0; i < cl.size(); ++i) {
            candidates.insert(cl[i]);
            for (size_t j = i + 1; j < cl.size(); ++j) candidates.insert(cl[i] | cl[j]);
        }
    }

    std::set<uint64_t> closure_set(cl.begin(), cl.end());
    for (uint64_t mask : candidates) {
        auto verts = mask_to_list(mask, n);
        std::vector<Vec> gens;
        for (int v : verts) gens.push_back(b.elements[v]);
        Subspace span = Subspace::span(g.dim(), gens);
        if (!is_ideal(g, span)) continue;  // re-verification against the algebra
        out.ideals.push_back({verts, closure_set.count(mask) > 0, std::move(span)});
    }
    return out;
}

LTDClass ltd_classification(const LieGraph& g) {
    int n = g.n_vertices;
    LTDClass r;
    r.sinkhole.assign(n, false);
    r.loose_end.assign(n, false);
    for (int v = 0; v < n; ++v) {
        int od = g.out_degree(v), id = g.in_degree(v);
        r.sinkhole[v] = (od == 0);
        r.loose_end[v] = (id == 0 && od > 0);
    }
    // strongly connected components of the start->end digraph
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) adj[e.start].push_back(e.end);
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<int> comp_size;
    int counter = 0;
    std::function<void(int)> dfs = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : adj[v]) {
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            int size = 0;
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = static_cast<int>(comp_size.size());
                ++size;
                if (w == v) break;
            }
            comp_size.push_back(size);
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) dfs(v);

    std::vector<bool> has_self(n, false);
    for (const auto& e : g.edges)
        if (e.start == e.end) has_self[e.start] = true;
    std::vector<bool> lake(n, false);
    for (int v = 0; v < n; ++v) lake[v] = comp_size[comp[v]] > 1 || has_self[v];
    // vertices that reach a lake: reverse reachability
    std::vector<bool> reaches(lake);
    bool grown = true;
    while (grown) {
        grown = false;
        for (const auto& e : g.edges)
            if (reaches[e.end] && !reaches[e.start]) {
                reaches[e.start] = true;
                grown = true;
            }
    }
    r.vertex_class.assign(n, FlowClass::DisappearingStream);
    for (int v = 0; v < n; ++v) {
        if (lake[v])
            r.vertex_class[v] = FlowClass::Lake;
        else if (reaches[v])
            r.vertex_class[v] = FlowClass::Tributary;
    }
    r.edge_class.assign(g.edges.size(), FlowClass::DisappearingStream);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        bool on_cycle = comp[e.start] == comp[e.end] && (comp_size[comp[e.start]] > 1 || e.start == e.end);
        if (on_cycle)
            r.edge_class[i] = FlowClass::Lake;
        else if (reaches[e.end] || lake[e.end])
            r.edge_class[i] = FlowClass::Tributary;
    }
    return r;
}

bool simplicity_necessary(const LieGraph& g) {
    int n = g.n_vertices;
    if (n == 0) return false;
    if (g.edges.empty()) return false;
    if (n == 1) {
        for (const auto& e : g.edges)
            if (e.start == 0 && e.end == 0) return true;
        return false;
    }
    // strong connectivity of the start->end digraph
    auto reach_all = [&](bool reversed) {
        std::vector<bool> seen(n, false);
        seen[0] = true;
        bool grown = true;
        while (grown) {
            grown = false;
            for (const auto& e : g.edges) {
                int from = reversed ? e.end : e.start;
                int to = reversed ? e.start : e.end;
                if (seen[from] && !seen[to]) {
                    seen[to] = true;
                    grown = true;
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
    };
    if (!reach_all(false) || !reach_all(true)) return false;
    // cross-check: no proper nonempty subset may have the ideal-graph-property
    for (int seed = 0; seed < n; ++seed) {
        uint64_t m = closure_mask(g, seed);
        if (m != (n == 64 ? ~0ULL : (1ULL << n) - 1))
            throw std::logic_error("strong connectivity disagrees with closure enumeration");
    }
    return true;
}

SemisimplicityReport semisimplicity_report(const LieAlgebra& g, const AdmissibleBasis& b,
                                           const LieGraph& graph) {
    SemisimplicityReport rep;
    auto ltd = ltd_classification(graph);
    rep.sinkhole_free = std::none_of(ltd.sinkhole.begin(), ltd.sinkhole.end(), [](bool x) { return x; });
    rep.loose_end_free = std::none_of(ltd.loose_end.begin(), ltd.loose_end.end(), [](bool x) { return x; });
    auto scc = self_contained_cycle_vertices(graph);
    rep.every_vertex_on_self_contained_closed_walk =
        static_cast<int>(scc.size()) == graph.n_vertices;
    rep.cartan_semisimple = is_semisimple_cartan(g);
    rep.components = unconnected_components(graph);
    rep.simple_candidate = rep.cartan_semisimple && rep.components.size() == 1;
    (void)b;
    return rep;
}

std::vector<std::vector<bool>> killing_support(const LieGraph& g) {
    int n = g.n_vertices;
    std::vector<std::vector<bool>> support(n, std::vector<bool>(n, false));
    for (const auto& e1 : g.edges)
        for (const auto& e2 : g.edges)
            if (e2.start == e1.end && e2.end == e1.start)
                support[e2.label][e1.label] = true;  // two-step return through e1 then e2
    return support;
}

bool semisimple_killing_necessary(const LieGraph& g) {
    auto s = killing_support(g);
    for (const auto& row : s)
        if (std::none_of(row.begin(), row.end(), [](bool x) { return x; })) return false;
    return !s.empty();
}

ZnSymmetry zn_symmetry(const LieGraph& g) {
    int n = g.n_vertices;
    if (n == 1) return {true, {0}};
    // build sigma as one n-cycle seeded at vertex 0; sigma[v] = image
    std::vector<int> cycle_order{0};  // sequence 0 -> x1 -> ... -> x_{n-1} -> 0
    std::vector<bool> used(n, false);
    used[0] = true;
    std::vector<int> sigma(n, -1);
    auto edges_ok = [&](const std::vector<int>& sig) {
        for (const auto& e : g.edges) {
            int s = sig[e.start], l = sig[e.label], t = sig[e.end];
            if (s < 0 || l < 0 || t < 0) continue;
            if (!g.has_edge({s, l, t})) return false;
        }
        return true;
    };
    std::function<bool()> go = [&]() -> bool {
        if (static_cast<int>(cycle_order.size()) == n) {
            sigma[cycle_order.back()] = cycle_order.front();
            bool ok = edges_ok(sigma);
            if (!ok) sigma[cycle_order.back()] = -1;
            return ok;
        }
        int prev = cycle_order.back();
        for (int next = 0; next < n; ++next) {
            if (used[next]) continue;
            cycle_order.push_back(next);
            used[next] = true;
            sigma[prev] = next;
            if (edges_ok(sigma) && go()) return true;
            sigma[prev] = -1;
            used[next] = false;
            cycle_order.pop_back();
        }
        return false;
    };
    if (go()) return {true, sigma};
    return {false, {}};
}

LeviReport levi_report(const LieAlgebra& g, const AdmissibleBasis& b, const LieGraph& graph) {
    LeviReport rep{radical_oracle(g), 0, {}, false, {}, false, 0};
    rep.semisimple_dim = g.dim() - rep.radical.dim();
    // vertices whose element lies in the radical
    std::vector<bool> in_rad(graph.n_vertices, false);
    std::vector<Vec> gens;
    for (int v = 0; v < graph.n_vertices; ++v)
        if (rep.radical.contains(b.elements[v])) {
            in_rad[v] = true;
            rep.radical_vertices.push_back(v);
            gens.push_back(b.elements[v]);
        }
    Subspace vertex_span = gens.empty() ? Subspace(g.dim()) : Subspace::span(g.dim(), gens);
    rep.radical_vertex_match =
        vertex_span == rep.radical && satisfies_igp(graph, rep.radical_vertices);
    for (const auto& e : graph.edges)
        if (!in_rad[e.start] && in_rad[e.end]) rep.cross_edges.push_back(e);
    if (!rep.radical.is_zero()) {
        LieAlgebra restricted = g.restrict_to(rep.radical);
        auto lcs = lower_central_series_oracle(restricted);
        rep.radical_nilpotent = lcs.terminated;
        rep.radical_lcs_steps = static_cast<int>(lcs.stages.size()) - 1;
    }
    return rep;
}

}  // namespace liegraph
