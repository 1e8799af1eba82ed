#ifndef SFOREST_GRAPH_HPP
#define SFOREST_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace sforest {

/// An undirected edge with a non-negative cost.
struct Edge {
    int u = 0;
    int v = 0;
    double cost = 0.0;
};

/// Simple undirected graph: no self-loops, no parallel edges, node ids in
/// [0, node_count). Immutable after construction.
class Graph {
  public:
    Graph(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    double total_cost() const;

    /// Incident (neighbor, edge index) pairs in deterministic order.
    const std::vector<std::pair<int, int>>& incident(int node) const {
        return adjacency_[static_cast<std::size_t>(node)];
    }

    /// Returns -1 if {u, v} is not an edge.
    int find_edge(int u, int v) const;

  private:
    int node_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

/// Component id per node for the subgraph induced by the given edge subset
/// (indicator per edge). Component ids are dense and ordered by the lowest
/// node contained, so the labelling is canonical.
std::vector<int> connected_components(const Graph& g, const std::vector<char>& active_edges);

/// Number of distinct components in a component labelling.
int component_count(const std::vector<int>& component_of);

struct MinCutResult {
    double value = 0.0;
    /// Nodes reachable from the source in the final residual network.
    std::vector<char> source_side;
};

/// Directed capacitated network used by the separation oracles. Capacities
/// are reals; an "infinite" arc gets capacity 1 + sum of all finite
/// capacities, resolved when a solve starts. A solve mutates private
/// residual state, so a single network must not be solved concurrently.
class FlowNetwork {
  public:
    explicit FlowNetwork(int node_count);

    int node_count() const { return node_count_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    void add_arc(int tail, int head, double capacity);
    void add_infinite_arc(int tail, int head);

    /// Max-flow / min-cut via blocking flows on the level graph.
    /// Deterministic: identical input (including arc order) yields an
    /// identical cut.
    MinCutResult min_cut(int source, int sink);

  private:
    struct Arc {
        int head;
        double capacity;
        double residual;
        bool infinite;
    };

    bool build_levels(int source, int sink);
    double push(int node, int sink, double limit);

    int node_count_;
    std::vector<Arc> arcs_;  // arc 2i is paired with its reverse 2i+1
    std::vector<std::vector<int>> out_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace sforest

#endif
