#pragma once

#include <utility>
#include <vector>

#include "gridbasis/core.hpp"
#include "gridbasis/exactlin.hpp"

namespace gridbasis {

/// Undirected multigraph; parallel edges allowed, self-loops only when asked.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
               bool allow_loops = false);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;  // 0-based, first <= second
};

class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int vertex_count, std::vector<std::vector<int>> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

private:
    int vertex_count_ = 0;
    std::vector<std::vector<int>> edges_;  // each sorted, distinct, nonempty
};

/// Basicness verdict for (hyper)graphs. When non-basic, `dependence` is a
/// primitive integer vector with sum_v dependence[v] * coboundary(v) = 0;
/// for graphs it is +/-1 on one bipartite component and `component` lists
/// that component's vertices.
struct GraphVerdict {
    bool basic = true;
    int rank = 0;
    std::vector<Int> dependence;
    std::vector<int> component;
};

/// One hyperedge per nonempty layer intersection, vertices = points of M in
/// canonical order, hyperedges in axis-major layer order.
Hypergraph hypergraph_from_set(const PointSet& m);

/// The 2-uniform case; throws LayerError unless every layer has 0 or 2 points.
MultiGraph graph_from_set(const PointSet& m);

Hypergraph as_hypergraph(const MultiGraph& g);

/// 0/1 indicator of the edges incident to v (a row of the incidence matrix).
std::vector<int> coboundary(const Hypergraph& h, int v);

/// |V| x |E| matrix whose rows are the coboundaries.
ExactMatrix incidence_matrix(const Hypergraph& h);

/// Rank test of the coboundaries.
GraphVerdict hypergraph_is_basic(const Hypergraph& h);

/// Bipartite-component criterion: basic iff no connected component is
/// bipartite (a self-loop counts as an odd cycle).
GraphVerdict graph_is_basic(const MultiGraph& g);

/// Exact edge weights with w_V(v) = sum of weights of edges at v; free edges
/// are fixed to 0. Throws BipartiteComponentError when no solution exists.
std::vector<Rat> solve_edge_weights(const MultiGraph& g,
                                    const std::vector<Rat>& vertex_weights);

}  // namespace gridbasis
