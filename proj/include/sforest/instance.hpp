#ifndef SFOREST_INSTANCE_HPP
#define SFOREST_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sforest/graph.hpp"

namespace sforest {

/// Raw (possibly non-canonical) instance data as read from a file or
/// assembled by a caller. Terminal sets may overlap or be singletons;
/// roots are optional.
struct RawInstance {
    int node_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> terminal_sets;
    std::vector<int> roots;  // -1 (or missing entries) means "pick for me"
    std::vector<std::pair<double, double>> coordinates;  // optional, empty or per node
};

/// Canonical Steiner Forest instance: pairwise disjoint terminal sets of
/// size >= 2, one root per set (lowest node id unless given explicitly).
/// Immutable after construction; freely shareable across threads.
class SfpInstance {
  public:
    SfpInstance(Graph graph, std::vector<std::vector<int>> terminal_sets, std::vector<int> roots,
                std::vector<std::pair<double, double>> coordinates = {});

    const Graph& graph() const { return graph_; }
    int node_count() const { return graph_.node_count(); }
    int edge_count() const { return graph_.edge_count(); }

    int set_count() const { return static_cast<int>(terminal_sets_.size()); }
    const std::vector<std::vector<int>>& terminal_sets() const { return terminal_sets_; }
    const std::vector<int>& terminal_set(int k) const {
        return terminal_sets_[static_cast<std::size_t>(k)];
    }
    int root(int k) const { return roots_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& roots() const { return roots_; }

    /// tau: index of the set containing the node, or -1 for Steiner nodes.
    int set_of(int node) const { return set_of_node_[static_cast<std::size_t>(node)]; }
    bool is_terminal(int node) const { return set_of(node) >= 0; }
    bool is_root(int node) const;
    const std::vector<int>& terminals() const { return terminals_; }

    const std::vector<std::pair<double, double>>& coordinates() const { return coordinates_; }

  private:
    Graph graph_;
    std::vector<std::vector<int>> terminal_sets_;
    std::vector<int> roots_;
    std::vector<int> set_of_node_;
    std::vector<int> terminals_;
    std::vector<std::pair<double, double>> coordinates_;
};

/// Merges overlapping terminal sets transitively, drops singletons, and
/// assigns roots (explicit root of the lowest-index constituent if any,
/// else the lowest node id). A merged set takes the position of its
/// lowest-index constituent.
SfpInstance canonicalize(const RawInstance& raw);

/// Random geometric instance: nodes uniform in the unit square, edges
/// below the distance threshold alpha/sqrt(n), augmented with a minimum
/// Euclidean spanning tree, costs equal to Euclidean distance.
/// ceil(p*n) terminals are drawn, shuffled and split into k contiguous
/// groups of size >= 2. Deterministic for a fixed seed.
SfpInstance generate(int n, int k, double p, double alpha, std::uint64_t seed);

/// Terminal pairs (r^k, t) in set-then-terminal order with their
/// shortest-path distances.
struct TerminalPairs {
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> dist;          // +infinity when disconnected
    bool all_finite = true;            // false flags the instance KLSvZ-inapplicable
    std::size_t size() const { return pairs.size(); }
};

TerminalPairs shortest_distances(const SfpInstance& inst);

/// Line-oriented text format; see the README for the grammar. Throws
/// std::runtime_error with a line number on malformed input.
SfpInstance parse_instance(std::istream& in);
SfpInstance parse_instance_text(const std::string& text);
SfpInstance load_instance(const std::string& path);

std::string serialize(const SfpInstance& inst);
void save_instance(const SfpInstance& inst, const std::string& path);

/// Shortest round-trip decimal rendering, used everywhere a real number
/// reaches a file so that outputs are byte-stable.
std::string format_double(double value);

}  // namespace sforest

#endif
