#include "gridbasis/graphs.hpp"

#include <algorithm>
#include <string>

#include "gridbasis/errors.hpp"

namespace gridbasis {

MultiGraph::MultiGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                       bool allow_loops)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count < 0) throw ValueError("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= vertex_count_)
            throw ValueError("edge endpoint out of range");
        if (u == v && !allow_loops)
            throw ValueError("self-loop at vertex " + std::to_string(u + 1) +
                             " (pass allow_loops to accept)");
    }
}

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count < 0) throw ValueError("negative vertex count");
    for (auto& e : edges_) {
        if (e.empty()) throw ValueError("empty hyperedge");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ValueError("repeated vertex inside a hyperedge");
        if (e.front() < 0 || e.back() >= vertex_count_)
            throw ValueError("hyperedge vertex out of range");
    }
}

Hypergraph hypergraph_from_set(const PointSet& m) {
    const GridShape& shape = m.shape();
    std::vector<std::vector<int>> edges;
    for (int idx = 0; idx < shape.layer_count(); ++idx) {
        const Layer layer = shape.layer_at(idx);
        std::vector<int> edge;
        for (int i = 0; i < m.size(); ++i)
            if (m.points()[static_cast<size_t>(i)][layer.axis] == layer.value)
                edge.push_back(i);
        if (!edge.empty()) edges.push_back(std::move(edge));
    }
    return Hypergraph(m.size(), std::move(edges));
}

MultiGraph graph_from_set(const PointSet& m) {
    const Hypergraph h = hypergraph_from_set(m);
    // Reject any layer that is neither empty nor a pair.
    const GridShape& shape = m.shape();
    std::vector<std::pair<int, int>> edges;
    size_t next = 0;
    for (int idx = 0; idx < shape.layer_count(); ++idx) {
        const Layer layer = shape.layer_at(idx);
        int count = 0;
        for (int i = 0; i < m.size(); ++i)
            count += m.points()[static_cast<size_t>(i)][layer.axis] == layer.value;
        if (count == 0) continue;
        if (count != 2)
            throw LayerError("layer (axis " + std::to_string(layer.axis + 1) +
                                 ", value " + std::to_string(layer.value) +
                                 ") contains " + std::to_string(count) +
                                 " points; need 0 or 2",
                             layer.axis, layer.value);
        const auto& e = h.edges()[next++];
        edges.emplace_back(e[0], e[1]);
    }
    return MultiGraph(m.size(), std::move(edges));
}

Hypergraph as_hypergraph(const MultiGraph& g) {
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        if (u == v)
            edges.push_back({u});
        else
            edges.push_back({u, v});
    }
    return Hypergraph(g.vertex_count(), std::move(edges));
}

std::vector<int> coboundary(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.vertex_count()) throw ValueError("vertex out of range");
    std::vector<int> row(static_cast<size_t>(h.edge_count()), 0);
    for (int e = 0; e < h.edge_count(); ++e)
        if (std::binary_search(h.edges()[static_cast<size_t>(e)].begin(),
                               h.edges()[static_cast<size_t>(e)].end(), v))
            row[static_cast<size_t>(e)] = 1;
    return row;
}

ExactMatrix incidence_matrix(const Hypergraph& h) {
    ExactMatrix a(h.vertex_count(), h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edges()[static_cast<size_t>(e)]) a.at(v, e) = 1;
    return a;
}

GraphVerdict hypergraph_is_basic(const Hypergraph& h) {
    const Elimination e = bareiss_eliminate(incidence_matrix(h));
    GraphVerdict verdict;
    verdict.rank = e.rank;
    verdict.basic = e.rank == h.vertex_count();
    if (!verdict.basic) {
        std::vector<Int> v = e.transform.row(e.rank);
        make_primitive(v);
        verdict.dependence = std::move(v);
    }
    return verdict;
}

GraphVerdict graph_is_basic(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    std::vector<char> has_loop(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        if (u == v) {
            has_loop[static_cast<size_t>(u)] = 1;
            continue;
        }
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }

    GraphVerdict verdict;
    std::vector<int> color(static_cast<size_t>(n), 0);  // 0 unvisited, else +/-1
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<size_t>(start)] != 0) continue;
        // BFS 2-coloring of one component; parallel edges never create odd
        // cycles, a self-loop always does.
        std::vector<int> component{start};
        color[static_cast<size_t>(start)] = 1;
        bool bipartite = !has_loop[static_cast<size_t>(start)];
        for (size_t head = 0; head < component.size(); ++head) {
            const int u = component[head];
            for (int v : adj[static_cast<size_t>(u)]) {
                if (color[static_cast<size_t>(v)] == 0) {
                    color[static_cast<size_t>(v)] = -color[static_cast<size_t>(u)];
                    if (has_loop[static_cast<size_t>(v)]) bipartite = false;
                    component.push_back(v);
                } else if (color[static_cast<size_t>(v)] ==
                           color[static_cast<size_t>(u)]) {
                    bipartite = false;
                }
            }
        }
        if (bipartite && verdict.basic) {
            verdict.basic = false;
            std::sort(component.begin(), component.end());
            verdict.dependence.assign(static_cast<size_t>(n), Int(0));
            for (int v : component)
                verdict.dependence[static_cast<size_t>(v)] =
                    color[static_cast<size_t>(v)];
            // Primitive form: the first nonzero entry is the start vertex's
            // color, which is +1 by construction.
            verdict.component = std::move(component);
        }
    }
    verdict.rank = rank_exact(incidence_matrix(as_hypergraph(g)));
    return verdict;
}

std::vector<Rat> solve_edge_weights(const MultiGraph& g,
                                    const std::vector<Rat>& vertex_weights) {
    if (static_cast<int>(vertex_weights.size()) != g.vertex_count())
        throw ValueError("expected one weight per vertex");
    const GraphVerdict verdict = graph_is_basic(g);
    if (!verdict.basic)
        throw BipartiteComponentError(
            "a bipartite connected component obstructs edge weights",
            verdict.component);
    // Full row rank, so the system is consistent for every right-hand side.
    const SolveOutcome outcome =
        solve_with_certificate(incidence_matrix(as_hypergraph(g)), vertex_weights);
    return *outcome.solution;
}

}  // namespace gridbasis
