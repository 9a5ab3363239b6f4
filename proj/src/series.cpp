#include "liegraph/series.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace liegraph {

bool Walk::well_formed() const {
    if (vertices.size() != edges.size() + 1) return false;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].start != vertices[i] || edges[i].end != vertices[i + 1]) return false;
    if (closed && (vertices.empty() || vertices.front() != vertices.back())) return false;
    if (self_contained) {
        std::set<int> vs(vertices.begin(), vertices.end());
        for (const auto& e : edges)
            if (!vs.count(e.label)) return false;
    }
    return true;
}

namespace {

std::vector<int> alive_to_list(const std::vector<bool>& alive) {
    std::vector<int> out;
    for (size_t i = 0; i < alive.size(); ++i)
        if (alive[i]) out.push_back(static_cast<int>(i));
    return out;
}

GraphSeries::Stage make_stage(const LieGraph& g, const std::vector<bool>& alive, bool with_aux) {
    GraphSeries::Stage st;
    st.vertices = alive_to_list(alive);
    for (const auto& e : g.edges) {
        if (!alive[e.start] || !alive[e.end]) continue;
        if (alive[e.label])
            st.edges.push_back(e);
        else if (with_aux)
            st.aux_edges.push_back(e);
    }
    return st;
}

}  // namespace

GraphSeries derived_graph_series(const LieGraph& g) {
    GraphSeries s;
    std::vector<bool> alive(g.n_vertices, true);
    s.stages.push_back(make_stage(g, alive, false));
    while (true) {
        std::vector<bool> next(g.n_vertices, false);
        for (const auto& e : g.edges)
            if (alive[e.start] && alive[e.label]) next[e.end] = true;
        if (next == alive) {
            s.stable_from = static_cast<int>(s.stages.size()) - 1;
            break;
        }
        alive = next;
        s.stages.push_back(make_stage(g, alive, false));
        if (s.stages.back().vertices.empty()) {
            s.terminated = true;
            s.stable_from = static_cast<int>(s.stages.size()) - 1;
            break;
        }
    }
    return s;
}

GraphSeries derived_graph_series_redundant(const LieGraph& g, const AdmissibleBasis& b) {
    GraphSeries s;
    std::vector<bool> alive(g.n_vertices, true);
    s.stages.push_back(make_stage(g, alive, false));
    while (true) {
        std::vector<bool> next(g.n_vertices, false);
        for (const auto& e : g.edges)
            if (alive[e.start] && alive[e.label]) next[e.end] = true;
        // re-add dropped vertices lying in the span of the survivors
        std::vector<Vec> surv;
        for (int v = 0; v < g.n_vertices; ++v)
            if (next[v]) surv.push_back(b.elements[v]);
        for (int v = 0; v < g.n_vertices; ++v)
            if (alive[v] && !next[v] && in_span(b.elements[v], surv)) next[v] = true;
        if (next == alive) {
            s.stable_from = static_cast<int>(s.stages.size()) - 1;
            break;
        }
        alive = next;
        s.stages.push_back(make_stage(g, alive, false));
        if (s.stages.back().vertices.empty()) {
            s.terminated = true;
            s.stable_from = static_cast<int>(s.stages.size()) - 1;
            break;
        }
    }
    return s;
}

GraphSeries lcs_graph_series(const LieGraph& g) {
    GraphSeries s;
    std::vector<bool> alive(g.n_vertices, true);
    s.stages.push_back(make_stage(g, alive, true));
    while (true) {
        // targets of edges whose start or label survives; the auxiliary set is
        // exactly the surviving-start, dropped-label case, and the mirrored
        // edge covers the surviving-label case
        std::vector<bool> next(g.n_vertices, false);
        for (const auto& e : g.edges)
            if (alive[e.start] || alive[e.label]) next[e.end] = true;
        for (int v = 0; v < g.n_vertices; ++v) next[v] = next[v] && alive[v];
        if (next == alive) {
            s.stable_from = static_cast<int>(s.stages.size()) - 1;
            break;
        }
        alive = next;
        s.stages.push_back(make_stage(g, alive, true));
        if (s.stages.back().vertices.empty()) {
            s.terminated = true;
            s.stable_from = static_cast<int>(s.stages.size()) - 1;
            break;
        }
    }
    return s;
}

std::vector<int> self_contained_cycle_vertices(const LieGraph& g) {
    int n = g.n_vertices;
    std::vector<bool> alive(n, true);
    std::vector<Edge> pool = g.edges;
    while (true) {
        // strongly connected components of the start->end digraph restricted
        // to alive vertices and edges labeled by alive vertices in the same
        // component as their endpoints
        std::vector<std::vector<int>> adj(n);
        for (const auto& e : pool)
            if (alive[e.start] && alive[e.end] && alive[e.label]) adj[e.start].push_back(e.end);
        // Tarjan
        std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
        std::vector<bool> on_stack(n, false);
        int counter = 0, ncomp = 0;
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
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = ncomp;
                    if (w == v) break;
                }
                ++ncomp;
            }
        };
        for (int v = 0; v < n; ++v)
            if (alive[v] && index[v] < 0) dfs(v);
        // keep edges internal to one component with the label in the same
        // component; keep vertices with at least one such incident edge
        std::vector<Edge> kept;
        std::vector<bool> next(n, false);
        for (const auto& e : pool) {
            if (!alive[e.start] || !alive[e.end] || !alive[e.label]) continue;
            if (comp[e.start] != comp[e.end] || comp[e.label] != comp[e.start]) continue;
            kept.push_back(e);
            next[e.start] = true;
            next[e.end] = true;
        }
        if (next == alive && kept.size() == pool.size()) return alive_to_list(alive);
        if (std::none_of(next.begin(), next.end(), [](bool b) { return b; })) return {};
        alive = next;
        pool = std::move(kept);
    }
}

namespace {

/// Closed walk visiting every vertex of a strongly connected edge set,
/// assembled by chaining shortest paths between consecutive vertices.
Walk closed_walk_through(const std::vector<int>& comp, const std::vector<Edge>& pool) {
    std::map<int, std::vector<Edge>> out;
    for (const auto& e : pool) out[e.start].push_back(e);
    auto bfs_path = [&](int from, int to) -> std::vector<Edge> {
        if (from == to) return {};
        std::map<int, Edge> pred;
        std::queue<int> q;
        q.push(from);
        std::set<int> seen{from};
        while (!q.empty() && !pred.count(to)) {
            int v = q.front();
            q.pop();
            for (const auto& e : out[v]) {
                if (seen.count(e.end)) continue;
                seen.insert(e.end);
                pred[e.end] = e;
                q.push(e.end);
            }
        }
        std::vector<Edge> path;
        int cur = to;
        while (cur != from) {
            Edge e = pred.at(cur);
            path.push_back(e);
            cur = e.start;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };
    Walk w;
    w.vertices.push_back(comp.front());
    if (comp.size() == 1) {
        for (const auto& e : pool)
            if (e.start == comp[0] && e.end == comp[0]) {
                w.edges.push_back(e);
                w.vertices.push_back(comp[0]);
                break;
            }
    } else {
        for (size_t i = 0; i < comp.size(); ++i) {
            for (const auto& e : bfs_path(comp[i], comp[(i + 1) % comp.size()])) {
                w.edges.push_back(e);
                w.vertices.push_back(e.end);
            }
        }
    }
    w.closed = w.vertices.size() > 1 && w.vertices.front() == w.vertices.back();
    std::set<int> vs(w.vertices.begin(), w.vertices.end());
    w.self_contained = true;
    for (const auto& e : w.edges) w.self_contained = w.self_contained && vs.count(e.label) > 0;
    return w;
}

}  // namespace

SolvableResult is_solvable_graph(const LieGraph& g) {
    auto series = derived_graph_series(g);
    if (series.terminated) return {true, std::nullopt};
    auto cyc = self_contained_cycle_vertices(g);
    if (cyc.empty())
        throw std::logic_error("derived series did not terminate but no self-contained cycle found");
    // restrict to the first stable component containing cyc.front()
    std::set<int> alive(cyc.begin(), cyc.end());
    std::vector<Edge> pool;
    for (const auto& e : g.edges)
        if (alive.count(e.start) && alive.count(e.end) && alive.count(e.label)) pool.push_back(e);
    // extract the strongly connected component of cyc.front()
    std::vector<int> comp;
    {
        std::set<int> fwd{cyc.front()}, bwd{cyc.front()};
        bool grown = true;
        while (grown) {
            grown = false;
            for (const auto& e : pool) {
                if (fwd.count(e.start) && !fwd.count(e.end)) {
                    fwd.insert(e.end);
                    grown = true;
                }
                if (bwd.count(e.end) && !bwd.count(e.start)) {
                    bwd.insert(e.start);
                    grown = true;
                }
            }
        }
        for (int v : fwd)
            if (bwd.count(v)) comp.push_back(v);
    }
    std::sort(comp.begin(), comp.end());
    std::vector<Edge> comp_pool;
    std::set<int> comp_set(comp.begin(), comp.end());
    for (const auto& e : pool)
        if (comp_set.count(e.start) && comp_set.count(e.end) && comp_set.count(e.label))
            comp_pool.push_back(e);
    Walk w = closed_walk_through(comp, comp_pool);
    if (!w.well_formed() || !w.closed || !w.self_contained)
        throw std::logic_error("failed to build a self-contained closed walk witness");
    return {false, w};
}

NilpotentResult is_nilpotent_graph(const LieGraph& g) {
    int n = g.n_vertices;
    std::vector<int> color(n, 0);  // 0 white, 1 gray, 2 black
    std::vector<Edge> stack_edges;
    std::vector<int> stack_verts;
    std::optional<Walk> witness;
    std::function<bool(int)> dfs = [&](int v) -> bool {
        color[v] = 1;
        stack_verts.push_back(v);
        for (const auto& e : g.edges) {
            if (e.start != v) continue;
            if (color[e.end] == 1) {
                // close the cycle from e.end to v plus the edge e
                Walk w;
                auto it = std::find(stack_verts.begin(), stack_verts.end(), e.end);
                for (auto p = it; p != stack_verts.end(); ++p) w.vertices.push_back(*p);
                for (size_t i = it - stack_verts.begin(); i + 1 < stack_verts.size(); ++i)
                    w.edges.push_back(stack_edges[i]);
                w.edges.push_back(e);
                w.vertices.push_back(e.end);
                w.closed = true;
                witness = w;
                return true;
            }
            if (color[e.end] == 0) {
                stack_edges.push_back(e);
                if (dfs(e.end)) return true;
                stack_edges.pop_back();
            }
        }
        stack_verts.pop_back();
        color[v] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (color[v] == 0 && dfs(v)) return {false, witness};
    return {true, std::nullopt};
}

std::optional<int> nilpotency_index(const LieGraph& g) {
    auto nil = is_nilpotent_graph(g);
    if (!nil.nilpotent) return std::nullopt;
    if (g.edges.empty()) return std::nullopt;  // abelian: index 1 by convention
    int n = g.n_vertices;
    // longest path (in edges) on the acyclic start->end digraph
    std::vector<int> longest(n, -1);
    std::function<int(int)> dp = [&](int v) -> int {
        if (longest[v] >= 0) return longest[v];
        int best = 0;
        for (const auto& e : g.edges)
            if (e.start == v) best = std::max(best, 1 + dp(e.end));
        return longest[v] = best;
    };
    int lstar = 0;
    for (int v = 0; v < n; ++v) lstar = std::max(lstar, dp(v));
    int index = lstar + 1;
    auto lcs = lcs_graph_series(g);
    if (!lcs.terminated || static_cast<int>(lcs.stages.size()) - 1 != index)
        throw std::logic_error("nilpotency index mismatch between longest path and series");
    return index;
}

}  // namespace liegraph
