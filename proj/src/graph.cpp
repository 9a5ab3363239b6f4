#include "liegraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace liegraph {

void LieGraph::normalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(aux_edges.begin(), aux_edges.end());
    aux_edges.erase(std::unique(aux_edges.begin(), aux_edges.end()), aux_edges.end());
}

bool LieGraph::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

int LieGraph::out_degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.start == v);
    return d;
}

int LieGraph::in_degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.end == v);
    return d;
}

LieGraph build_graph(const AdmissibleBasis& b) {
    LieGraph g;
    g.n_vertices = b.size();
    g.vertex_names = b.names;
    for (int j = 0; j < b.size(); ++j)
        for (int k = j + 1; k < b.size(); ++k) {
            if (b.alpha.at(j, k).is_zero()) continue;
            int t = b.delta[j][k];
            g.edges.push_back({j, k, t});
            g.edges.push_back({k, j, t});
        }
    g.normalize();
    return g;
}

RuleReport validate_edge_rules(const LieGraph& g) {
    RuleReport rep;
    auto fail = [&](char rule, const Edge& e, std::string detail) {
        rep.ok = false;
        rep.violations.push_back({rule, e, std::move(detail)});
    };
    std::map<std::pair<int, int>, int> targets;
    for (const auto& e : g.edges) {
        if (e.start == e.label && !g.allow_self_label) fail('a', e, "start equals label");
        if (!g.has_edge({e.label, e.start, e.end}))
            fail('b', e, "mirrored edge (label,start,end) missing");
        auto key = std::make_pair(e.start, e.label);
        auto it = targets.find(key);
        if (it == targets.end())
            targets[key] = e.end;
        else if (it->second != e.end)
            fail('c', e, "second end for the same (start,label) pair");
    }
    return rep;
}

RuleReport validate_bounds(const LieGraph& g) {
    RuleReport rep;
    int n = g.n_vertices;
    long m = static_cast<long>(g.edges.size());
    auto fail = [&](std::string detail) {
        rep.ok = false;
        rep.violations.push_back({'B', Edge{-1, -1, -1}, std::move(detail)});
    };
    if (m % 2 != 0) fail("edge count is odd");
    if (m > static_cast<long>(n) * (n - 1)) fail("edge count exceeds n(n-1)");
    for (int v = 0; v < n; ++v) {
        if (g.out_degree(v) > n - 1)
            fail("out-degree of " + g.name(v) + " exceeds n-1");
        if (g.in_degree(v) > n * (n - 1))
            fail("in-degree of " + g.name(v) + " exceeds n(n-1)");
    }
    return rep;
}

namespace {

// three-vertex templates over symbols 0,1,2 (a,b,c)
struct Template {
    SubgraphType type;
    std::vector<Edge> edges;
};

const std::vector<Template>& templates() {
    static const std::vector<Template> t = {
        {SubgraphType::I, {}},
        {SubgraphType::II, {{0, 1, 2}, {1, 0, 2}}},
        {SubgraphType::III, {{0, 2, 2}, {2, 0, 2}}},
        {SubgraphType::IV, {{2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}}},
        {SubgraphType::V, {{0, 2, 2}, {2, 0, 2}, {1, 2, 2}, {2, 1, 2}}},
        {SubgraphType::VI, {{2, 0, 0}, {0, 2, 0}, {2, 1, 1}, {1, 2, 1}}},
        {SubgraphType::VII, {{0, 2, 2}, {2, 0, 2}, {0, 1, 2}, {1, 0, 2}}},
        {SubgraphType::VIII, {{0, 2, 2}, {2, 0, 2}, {1, 2, 0}, {2, 1, 0}}},
        {SubgraphType::IX,
         {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}, {2, 0, 1}, {0, 2, 1}}},
        {SubgraphType::X,
         {{2, 0, 0}, {0, 2, 0}, {2, 1, 1}, {1, 2, 1}, {0, 1, 2}, {1, 0, 2}}},
        {SubgraphType::XI,
         {{0, 2, 2}, {2, 0, 2}, {1, 2, 2}, {2, 1, 2}, {0, 1, 2}, {1, 0, 2}}},
        {SubgraphType::InvalidXII, {{0, 2, 2}, {2, 0, 2}, {2, 1, 1}, {1, 2, 1}}},
        {SubgraphType::InvalidXIII,
         {{0, 2, 2}, {2, 0, 2}, {2, 1, 1}, {1, 2, 1}, {1, 0, 0}, {0, 1, 0}}},
        {SubgraphType::InvalidXIV,
         {{2, 0, 0}, {0, 2, 0}, {2, 1, 1}, {1, 2, 1}, {0, 1, 1}, {1, 0, 1}}},
        {SubgraphType::InvalidXV,
         {{0, 2, 2}, {2, 0, 2}, {0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}}},
        {SubgraphType::InvalidXVI,
         {{0, 2, 2}, {2, 0, 2}, {0, 1, 2}, {1, 0, 2}, {2, 1, 1}, {1, 2, 1}}},
    };
    return t;
}

}  // namespace

const char* type_name(SubgraphType t) {
    switch (t) {
        case SubgraphType::I: return "I";
        case SubgraphType::II: return "II";
        case SubgraphType::III: return "III";
        case SubgraphType::IV: return "IV";
        case SubgraphType::V: return "V";
        case SubgraphType::VI: return "VI";
        case SubgraphType::VII: return "VII";
        case SubgraphType::VIII: return "VIII";
        case SubgraphType::IX: return "IX";
        case SubgraphType::X: return "X";
        case SubgraphType::XI: return "XI";
        case SubgraphType::InvalidXII: return "XII(invalid)";
        case SubgraphType::InvalidXIII: return "XIII(invalid)";
        case SubgraphType::InvalidXIV: return "XIV(invalid)";
        case SubgraphType::InvalidXV: return "XV(invalid)";
        case SubgraphType::InvalidXVI: return "XVI(invalid)";
    }
    return "?";
}

SubgraphClass type_metadata(SubgraphType t) {
    bool proper = true, choice = false;
    switch (t) {
        case SubgraphType::VIII:
        case SubgraphType::InvalidXII:
        case SubgraphType::InvalidXIII:
        case SubgraphType::InvalidXIV:
        case SubgraphType::InvalidXV:
        case SubgraphType::InvalidXVI: proper = false; break;
        case SubgraphType::X:
        case SubgraphType::XI: choice = true; break;
        default: break;
    }
    return {t, proper, choice};
}

std::optional<SubgraphClass> classify_three_vertex(const LieGraph& g, int a, int b, int c) {
    if (a == b || b == c || a == c) throw std::invalid_argument("vertices must be distinct");
    std::array<int, 3> verts{a, b, c};
    std::set<Edge> induced;
    for (const auto& e : g.edges) {
        bool in = true;
        for (int v : {e.start, e.label, e.end})
            in = in && (v == a || v == b || v == c);
        if (in) induced.insert(e);
    }
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        // template symbol i maps to vertex verts[perm[i]]
        for (const auto& t : templates()) {
            if (t.edges.size() != induced.size()) continue;
            bool match = true;
            for (const auto& te : t.edges) {
                Edge mapped{verts[perm[te.start]], verts[perm[te.label]], verts[perm[te.end]]};
                if (!induced.count(mapped)) {
                    match = false;
                    break;
                }
            }
            if (match) return type_metadata(t.type);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

TripleScan scan_all_triples(const LieGraph& g) {
    TripleScan s;
    for (int a = 0; a < g.n_vertices; ++a)
        for (int b = a + 1; b < g.n_vertices; ++b)
            for (int c = b + 1; c < g.n_vertices; ++c) {
                auto cls = classify_three_vertex(g, a, b, c);
                if (!cls)
                    s.all_valid = s.all_proper = false;
                else if (!cls->proper)
                    s.all_proper = false;
                s.triples[{a, b, c}] = cls;
            }
    return s;
}

DeltaCompositionResult delta_composition_check(const AdmissibleBasis& b) {
    int m = b.size();
    auto d = [&](int j, int k) { return (j < 0 || k < 0) ? kNoTarget : b.delta[j][k]; };
    bool all_zero = true;
    std::set<int> distinct_targets;
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
                int two_step = d(j, d(k, l));
                if (two_step != kNoTarget) all_zero = false;
                if (j != k && k != l && j != l && two_step != kNoTarget)
                    distinct_targets.insert(two_step);
            }
    return {all_zero, distinct_targets.size() <= 1};
}

std::optional<std::vector<int>> graph_isomorphic(const LieGraph& g1, const LieGraph& g2) {
    if (g1.n_vertices != g2.n_vertices || g1.edges.size() != g2.edges.size())
        return std::nullopt;
    int n = g1.n_vertices;
    // degree profile: (as start, as label, as end) counts must be preserved
    auto profile = [](const LieGraph& g, int v) {
        std::array<int, 3> p{0, 0, 0};
        for (const auto& e : g.edges) {
            p[0] += (e.start == v);
            p[1] += (e.label == v);
            p[2] += (e.end == v);
        }
        return p;
    };
    std::vector<std::array<int, 3>> p1(n), p2(n);
    for (int v = 0; v < n; ++v) {
        p1[v] = profile(g1, v);
        p2[v] = profile(g2, v);
    }
    std::vector<int> map(n, -1), used(n, 0);
    // adjacency of g1 for incremental checking
    auto consistent = [&](int next) {
        for (const auto& e : g1.edges) {
            int s = map[e.start], l = map[e.label], t = map[e.end];
            if (e.start > next || e.label > next || e.end > next) continue;
            if (!g2.has_edge({s, l, t})) return false;
        }
        return true;
    };
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || p1[v] != p2[w]) continue;
            map[v] = w;
            used[w] = 1;
            if (consistent(v) && go(v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (go(0)) return map;
    return std::nullopt;
}

std::vector<std::vector<int>> unconnected_components(const LieGraph& g) {
    int n = g.n_vertices;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges) parent[find(e.start)] = find(e.end);
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, verts] : comps) out.push_back(std::move(verts));
    return out;
}

EdgeKind edge_type(const Edge& e) {
    if (e.end == e.label || e.end == e.start) return EdgeKind::Loop;
    return EdgeKind::Wedge;
}

}  // namespace liegraph
