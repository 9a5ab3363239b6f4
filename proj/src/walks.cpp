#include "liegraph/walks.hpp"

#include <map>
#include <stdexcept>

namespace liegraph {

Scalar edge_weight(const AdmissibleBasis& b, const Edge& e) {
    if (b.delta[e.start][e.label] != e.end || b.alpha.at(e.start, e.label).is_zero())
        throw std::invalid_argument("edge does not belong to the graph of this basis");
    return b.alpha.at(e.start, e.label);
}

WeightedWalk ad_walk(const AdmissibleBasis& b, const LieGraph& g, int generator, int start) {
    WeightedWalk w;
    w.generator = generator;
    w.start = start;
    Scalar prod(1);
    int cur = start;
    std::map<int, int> first_seen;  // vertex -> step index
    int step = 0;
    while (true) {
        w.visited.push_back({cur, prod});
        first_seen.emplace(cur, step);
        // unique next edge: start == cur, label == generator
        const Edge* next = nullptr;
        for (const auto& e : g.edges)
            if (e.start == cur && e.label == generator) {
                next = &e;
                break;
            }
        if (!next) {
            w.terminating = true;
            w.length = step;
            return w;
        }
        prod *= edge_weight(b, *next);
        w.edges.push_back(*next);
        ++step;
        cur = next->end;
        auto it = first_seen.find(cur);
        if (it != first_seen.end()) {
            w.terminating = false;
            w.preperiod = it->second;
            w.period = step - it->second;
            return w;
        }
    }
}

SimilaritySeries similarity_series(const AdmissibleBasis& b, const LieGraph& g, int generator,
                                   int start, int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    SimilaritySeries s;
    s.walk = ad_walk(b, g, generator, start);
    s.order = order;

    auto step_vertex = [&](int n) {
        if (s.walk.terminating || n < static_cast<int>(s.walk.visited.size()))
            return s.walk.visited[n].vertex;
        int cycle_pos = (n - s.walk.preperiod) % s.walk.period;
        return s.walk.visited[s.walk.preperiod + cycle_pos].vertex;
    };
    auto step_weight = [&](int n) -> Scalar {
        if (s.walk.terminating || n < static_cast<int>(s.walk.visited.size()))
            return s.walk.visited[n].weight_product;
        // weight accumulates one full cycle product per revolution
        Scalar cycle_prod(1);
        for (int i = s.walk.preperiod; i < s.walk.preperiod + s.walk.period; ++i)
            cycle_prod *= edge_weight(b, s.walk.edges[i]);
        int excess = n - s.walk.preperiod;
        int revolutions = excess / s.walk.period;
        Scalar prod = s.walk.visited[s.walk.preperiod + excess % s.walk.period].weight_product;
        for (int r = 0; r < revolutions; ++r) prod *= cycle_prod;
        return prod;
    };

    int max_n = s.walk.terminating ? std::min(order, s.walk.length) : order;
    std::map<int, size_t> index_of;
    for (int n = 0; n <= max_n; ++n) {
        int v = step_vertex(n);
        Rat inv_fact = Rat(1) / factorial_rat(n);
        Scalar contrib = Scalar(inv_fact) * step_weight(n);
        auto it = index_of.find(v);
        if (it == index_of.end()) {
            index_of[v] = s.terms.size();
            s.terms.push_back({v, {{n, inv_fact}}, contrib});
        } else {
            s.terms[it->second].contributions.emplace_back(n, inv_fact);
            s.terms[it->second].coefficient_sum += contrib;
        }
    }
    return s;
}

std::vector<std::pair<int, double>> numeric_eval(const SimilaritySeries& s) {
    std::vector<std::pair<int, double>> out;
    for (const auto& t : s.terms) out.emplace_back(t.vertex, t.coefficient_sum.to_double());
    return out;
}

}  // namespace liegraph
