#pragma once

#include "liegraph/graph.hpp"

namespace liegraph {

/// Weight of an edge: the proportionality constant of the bracket it encodes.
Scalar edge_weight(const AdmissibleBasis& b, const Edge& e);

/// Deterministic walk following edges with a fixed label, realizing the
/// similarity-transformation series exp(-x_j) x_k exp(x_j).
struct WeightedWalk {
    int generator;  // label followed at every step
    int start;
    struct Step {
        int vertex;
        Scalar weight_product;  // product of edge weights before this step
    };
    std::vector<Step> visited;  // step 0 = (start, 1)
    std::vector<Edge> edges;
    bool terminating = false;
    int length = 0;     // steps taken when terminating
    int preperiod = 0;  // first index of the revisited vertex otherwise
    int period = 0;
};

WeightedWalk ad_walk(const AdmissibleBasis& b, const LieGraph& g, int generator, int start);

/// Exact series coefficients grouped by visited vertex: the order-n term
/// contributes weight_product(n)/n! to vertex(n).
struct SimilaritySeries {
    WeightedWalk walk;
    int order;
    struct Term {
        int vertex;
        std::vector<std::pair<int, Rat>> contributions;  // (order n, rational multiple)
        Scalar coefficient_sum;                          // exact partial sum
    };
    std::vector<Term> terms;  // ordered by first visit
};

SimilaritySeries similarity_series(const AdmissibleBasis& b, const LieGraph& g, int generator,
                                   int start, int order);

std::vector<std::pair<int, double>> numeric_eval(const SimilaritySeries& s);

}  // namespace liegraph
