#include "sforest/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sforest {

namespace {
constexpr double kResidualTol = 1e-9;
}

Graph::Graph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ <= 0) {
        throw std::invalid_argument("graph needs a positive node count");
    }
    adjacency_.resize(static_cast<std::size_t>(node_count_));
    std::vector<std::vector<char>> seen;  // lazily sized only when checking duplicates
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        Edge& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.u < 0 || ed.u >= node_count_ || ed.v < 0 || ed.v >= node_count_) {
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(ed.u) +
                                        "," + std::to_string(ed.v) + "}");
        }
        if (ed.u == ed.v) {
            throw std::invalid_argument("self-loop at node " + std::to_string(ed.u));
        }
        if (ed.cost < 0.0) {
            throw std::invalid_argument("negative edge cost");
        }
        if (ed.u > ed.v) std::swap(ed.u, ed.v);
        adjacency_[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
        adjacency_[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
    }
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        if (find_edge(ed.u, ed.v) != e) {
            throw std::invalid_argument("duplicate edge {" + std::to_string(ed.u) + "," +
                                        std::to_string(ed.v) + "}");
        }
    }
}

double Graph::total_cost() const {
    double sum = 0.0;
    for (const Edge& e : edges_) sum += e.cost;
    return sum;
}

int Graph::find_edge(int u, int v) const {
    if (u < 0 || u >= node_count_ || v < 0 || v >= node_count_) return -1;
    for (const auto& [w, e] : adjacency_[static_cast<std::size_t>(u)]) {
        if (w == v) return e;
    }
    return -1;
}

std::vector<int> connected_components(const Graph& g, const std::vector<char>& active_edges) {
    if (static_cast<int>(active_edges.size()) != g.edge_count()) {
        throw std::invalid_argument("active_edges size must match edge count");
    }
    std::vector<int> parent(static_cast<std::size_t>(g.node_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!active_edges[static_cast<std::size_t>(e)]) continue;
        int a = find(g.edge(e).u);
        int b = find(g.edge(e).v);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> label(static_cast<std::size_t>(g.node_count()), -1);
    int next = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        int root = find(v);
        if (label[static_cast<std::size_t>(root)] < 0) label[static_cast<std::size_t>(root)] = next++;
    }
    std::vector<int> result(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) {
        result[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(find(v))];
    }
    return result;
}

int component_count(const std::vector<int>& component_of) {
    int max_label = -1;
    for (int c : component_of) max_label = std::max(max_label, c);
    return max_label + 1;
}

FlowNetwork::FlowNetwork(int node_count) : node_count_(node_count) {
    if (node_count_ <= 0) {
        throw std::invalid_argument("network needs a positive node count");
    }
    out_.resize(static_cast<std::size_t>(node_count_));
}

void FlowNetwork::add_arc(int tail, int head, double capacity) {
    if (tail < 0 || tail >= node_count_ || head < 0 || head >= node_count_) {
        throw std::invalid_argument("arc endpoint out of range");
    }
    if (capacity < 0.0) {
        throw std::invalid_argument("negative arc capacity");
    }
    out_[static_cast<std::size_t>(tail)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({head, capacity, capacity, false});
    out_[static_cast<std::size_t>(head)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({tail, 0.0, 0.0, false});
}

void FlowNetwork::add_infinite_arc(int tail, int head) {
    add_arc(tail, head, 0.0);
    arcs_[arcs_.size() - 2].infinite = true;
}

bool FlowNetwork::build_levels(int source, int sink) {
    level_.assign(static_cast<std::size_t>(node_count_), -1);
    level_[static_cast<std::size_t>(source)] = 0;
    std::vector<int> queue;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int a : out_[static_cast<std::size_t>(v)]) {
            const Arc& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.residual > kResidualTol && level_[static_cast<std::size_t>(arc.head)] < 0) {
                level_[static_cast<std::size_t>(arc.head)] =
                    level_[static_cast<std::size_t>(v)] + 1;
                queue.push_back(arc.head);
            }
        }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
}

double FlowNetwork::push(int node, int sink, double limit) {
    if (node == sink) return limit;
    auto& cursor = next_[static_cast<std::size_t>(node)];
    auto& arcs_out = out_[static_cast<std::size_t>(node)];
    while (cursor < arcs_out.size()) {
        int a = arcs_out[cursor];
        Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.residual > kResidualTol &&
            level_[static_cast<std::size_t>(arc.head)] == level_[static_cast<std::size_t>(node)] + 1) {
            double sent = push(arc.head, sink, std::min(limit, arc.residual));
            if (sent > 0.0) {
                arc.residual -= sent;
                arcs_[static_cast<std::size_t>(a ^ 1)].residual += sent;
                return sent;
            }
        }
        ++cursor;
    }
    return 0.0;
}

MinCutResult FlowNetwork::min_cut(int source, int sink) {
    if (source < 0 || source >= node_count_ || sink < 0 || sink >= node_count_) {
        throw std::invalid_argument("min_cut node id out of range");
    }
    if (source == sink) {
        throw std::invalid_argument("min_cut needs distinct source and sink");
    }

    double finite_sum = 0.0;
    for (std::size_t i = 0; i < arcs_.size(); i += 2) {
        if (!arcs_[i].infinite) finite_sum += arcs_[i].capacity;
    }
    const double infinite_capacity = 1.0 + finite_sum;
    for (std::size_t i = 0; i < arcs_.size(); i += 2) {
        arcs_[i].residual = arcs_[i].infinite ? infinite_capacity : arcs_[i].capacity;
        arcs_[i + 1].residual = 0.0;
    }

    double flow = 0.0;
    while (build_levels(source, sink)) {
        next_.assign(static_cast<std::size_t>(node_count_), 0);
        while (true) {
            double sent = push(source, sink, std::numeric_limits<double>::infinity());
            if (sent <= 0.0) break;
            flow += sent;
        }
    }

    MinCutResult result;
    result.value = flow;
    result.source_side.assign(static_cast<std::size_t>(node_count_), 0);
    // The last BFS marked exactly the residual-reachable nodes.
    for (int v = 0; v < node_count_; ++v) {
        result.source_side[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(v)] >= 0;
    }
    return result;
}

}  // namespace sforest
