#include "sforest/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sforest {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

SfpInstance::SfpInstance(Graph graph, std::vector<std::vector<int>> terminal_sets,
                         std::vector<int> roots, std::vector<std::pair<double, double>> coordinates)
    : graph_(std::move(graph)),
      terminal_sets_(std::move(terminal_sets)),
      roots_(std::move(roots)),
      coordinates_(std::move(coordinates)) {
    if (terminal_sets_.size() != roots_.size()) {
        throw std::invalid_argument("one root per terminal set required");
    }
    if (!coordinates_.empty() &&
        static_cast<int>(coordinates_.size()) != graph_.node_count()) {
        throw std::invalid_argument("coordinates must cover every node or be absent");
    }
    set_of_node_.assign(static_cast<std::size_t>(graph_.node_count()), -1);
    for (int k = 0; k < set_count(); ++k) {
        auto& set = terminal_sets_[static_cast<std::size_t>(k)];
        if (set.size() < 2) throw std::invalid_argument("terminal set of size < 2");
        std::sort(set.begin(), set.end());
        for (int t : set) {
            if (t < 0 || t >= graph_.node_count()) {
                throw std::invalid_argument("terminal id out of range: " + std::to_string(t));
            }
            if (set_of_node_[static_cast<std::size_t>(t)] >= 0) {
                throw std::invalid_argument("terminal sets must be pairwise disjoint");
            }
            set_of_node_[static_cast<std::size_t>(t)] = k;
            terminals_.push_back(t);
        }
        int r = roots_[static_cast<std::size_t>(k)];
        if (std::find(set.begin(), set.end(), r) == set.end()) {
            throw std::invalid_argument("root must belong to its terminal set");
        }
    }
    std::sort(terminals_.begin(), terminals_.end());
}

bool SfpInstance::is_root(int node) const {
    return std::find(roots_.begin(), roots_.end(), node) != roots_.end();
}

SfpInstance canonicalize(const RawInstance& raw) {
    const int n = raw.node_count;
    for (const auto& set : raw.terminal_sets) {
        if (set.empty()) throw std::invalid_argument("empty terminal set");
        for (int t : set) {
            if (t < 0 || t >= n) {
                throw std::invalid_argument("terminal id out of range: " + std::to_string(t));
            }
        }
    }

    // Union-find over set indices, driven by shared nodes.
    const int s = static_cast<int>(raw.terminal_sets.size());
    std::vector<int> parent(static_cast<std::size_t>(s));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
        return a;
    };
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < s; ++k) {
        for (int t : raw.terminal_sets[static_cast<std::size_t>(k)]) {
            int& o = owner[static_cast<std::size_t>(t)];
            if (o < 0) {
                o = k;
            } else {
                int a = find(o);
                int b = find(k);
                if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
    }

    std::vector<std::vector<int>> merged(static_cast<std::size_t>(s));
    std::vector<int> merged_root(static_cast<std::size_t>(s), -1);
    for (int k = 0; k < s; ++k) {
        int rep = find(k);
        auto& bucket = merged[static_cast<std::size_t>(rep)];
        for (int t : raw.terminal_sets[static_cast<std::size_t>(k)]) bucket.push_back(t);
        int explicit_root = k < static_cast<int>(raw.roots.size())
                                ? raw.roots[static_cast<std::size_t>(k)]
                                : -1;
        if (explicit_root >= 0 && merged_root[static_cast<std::size_t>(rep)] < 0) {
            merged_root[static_cast<std::size_t>(rep)] = explicit_root;
        }
    }

    std::vector<std::vector<int>> sets;
    std::vector<int> roots;
    for (int k = 0; k < s; ++k) {
        auto& bucket = merged[static_cast<std::size_t>(k)];
        if (bucket.empty()) continue;
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        if (bucket.size() < 2) continue;  // singletons impose no connectivity
        int root = merged_root[static_cast<std::size_t>(k)];
        if (root < 0 || std::find(bucket.begin(), bucket.end(), root) == bucket.end()) {
            root = bucket.front();
        }
        sets.push_back(std::move(bucket));
        roots.push_back(root);
    }

    return SfpInstance(Graph(n, raw.edges), std::move(sets), std::move(roots), raw.coordinates);
}

namespace {

double sq_dist(const std::pair<double, double>& a, const std::pair<double, double>& b) {
    double dx = a.first - b.first;
    double dy = a.second - b.second;
    return dx * dx + dy * dy;
}

// Euclidean MST on the complete graph (Prim, O(n^2)); ties broken by
// (cost, u, v) so the result is deterministic.
std::vector<std::pair<int, int>> euclidean_mst(const std::vector<std::pair<double, double>>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
    std::vector<double> best(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    std::vector<int> link(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> edges;
    best[0] = 0.0;
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (in_tree[static_cast<std::size_t>(v)]) continue;
            if (pick < 0 || best[static_cast<std::size_t>(v)] < best[static_cast<std::size_t>(pick)]) {
                pick = v;
            }
        }
        in_tree[static_cast<std::size_t>(pick)] = 1;
        if (link[static_cast<std::size_t>(pick)] >= 0) {
            int a = link[static_cast<std::size_t>(pick)];
            edges.push_back({std::min(a, pick), std::max(a, pick)});
        }
        for (int v = 0; v < n; ++v) {
            if (in_tree[static_cast<std::size_t>(v)]) continue;
            double d = sq_dist(pts[static_cast<std::size_t>(pick)], pts[static_cast<std::size_t>(v)]);
            if (d < best[static_cast<std::size_t>(v)] ||
                (d == best[static_cast<std::size_t>(v)] && pick < link[static_cast<std::size_t>(v)])) {
                best[static_cast<std::size_t>(v)] = d;
                link[static_cast<std::size_t>(v)] = pick;
            }
        }
    }
    return edges;
}

}  // namespace

SfpInstance generate(int n, int k, double p, double alpha, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("generate: n must be at least 4");
    if (k < 1) throw std::invalid_argument("generate: k must be positive");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("generate: p must be in (0, 1]");
    if (alpha <= 0.0) throw std::invalid_argument("generate: alpha must be positive");
    const int terminals = static_cast<int>(std::ceil(p * n));
    if (terminals < 2 * k) {
        throw std::invalid_argument("generate: ceil(p*n) must be at least 2k");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
    for (auto& pt : pts) {
        pt.first = unit(rng);
        pt.second = unit(rng);
    }

    const double threshold = alpha / std::sqrt(static_cast<double>(n));
    const double threshold_sq = threshold * threshold;
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (sq_dist(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) <
                threshold_sq) {
                edge_set.insert({i, j});
            }
        }
    }
    for (const auto& e : euclidean_mst(pts)) edge_set.insert(e);

    std::vector<Edge> edges;
    edges.reserve(edge_set.size());
    for (const auto& [u, v] : edge_set) {
        edges.push_back({u, v,
                         std::sqrt(sq_dist(pts[static_cast<std::size_t>(u)],
                                           pts[static_cast<std::size_t>(v)]))});
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> selected(order.begin(), order.begin() + terminals);

    // Split into k contiguous blocks of size >= 2. Split points are k-1
    // distinct values from {2,...,M}, redrawn until every block is large
    // enough; ceil(p*n) >= 2k guarantees such a draw exists.
    std::vector<int> splits;
    if (k > 1) {
        std::uniform_int_distribution<int> split_dist(2, terminals);
        while (true) {
            std::set<int> draw;
            while (static_cast<int>(draw.size()) < k - 1) draw.insert(split_dist(rng));
            splits.assign(draw.begin(), draw.end());
            bool ok = true;
            int prev = 1;
            for (int sp : splits) {
                if (sp - prev < 2) ok = false;
                prev = sp;
            }
            if (terminals - prev + 1 < 2) ok = false;
            if (ok) break;
        }
    }

    std::vector<std::vector<int>> sets;
    std::size_t start = 0;
    for (int block = 0; block < k; ++block) {
        std::size_t end = block < k - 1
                              ? static_cast<std::size_t>(splits[static_cast<std::size_t>(block)] - 1)
                              : selected.size();
        sets.emplace_back(selected.begin() + static_cast<std::ptrdiff_t>(start),
                          selected.begin() + static_cast<std::ptrdiff_t>(end));
        start = end;
    }

    RawInstance raw;
    raw.node_count = n;
    raw.edges = std::move(edges);
    raw.terminal_sets = std::move(sets);
    raw.coordinates = std::move(pts);
    return canonicalize(raw);
}

TerminalPairs shortest_distances(const SfpInstance& inst) {
    TerminalPairs result;
    const Graph& g = inst.graph();
    for (int k = 0; k < inst.set_count(); ++k) {
        const int source = inst.root(k);
        std::vector<double> dist(static_cast<std::size_t>(g.node_count()),
                                 std::numeric_limits<double>::infinity());
        dist[static_cast<std::size_t>(source)] = 0.0;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.push({0.0, source});
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d > dist[static_cast<std::size_t>(v)]) continue;
            for (const auto& [w, e] : g.incident(v)) {
                double nd = d + g.edge(e).cost;
                if (nd < dist[static_cast<std::size_t>(w)]) {
                    dist[static_cast<std::size_t>(w)] = nd;
                    heap.push({nd, w});
                }
            }
        }
        for (int t : inst.terminal_set(k)) {
            if (t == source) continue;
            result.pairs.push_back({source, t});
            result.dist.push_back(dist[static_cast<std::size_t>(t)]);
            if (!std::isfinite(dist[static_cast<std::size_t>(t)])) result.all_finite = false;
        }
    }
    return result;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
    throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + message);
}

}  // namespace

SfpInstance parse_instance(std::istream& in) {
    RawInstance raw;
    raw.node_count = -1;
    int declared_sets = -1;
    bool has_coords = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string content = line.substr(0, line.find('#'));
        std::istringstream words(content);
        std::string keyword;
        if (!(words >> keyword)) continue;
        if (keyword == "nodes") {
            if (raw.node_count >= 0) parse_fail(line_no, "duplicate nodes line");
            if (!(words >> raw.node_count) || raw.node_count <= 0) {
                parse_fail(line_no, "nodes needs a positive count");
            }
        } else if (keyword == "edge") {
            int u, v;
            double cost;
            if (!(words >> u >> v >> cost)) parse_fail(line_no, "edge needs <u> <v> <cost>");
            if (raw.node_count < 0) parse_fail(line_no, "edge before nodes line");
            if (u < 0 || u >= raw.node_count || v < 0 || v >= raw.node_count) {
                parse_fail(line_no, "edge endpoint out of range");
            }
            if (cost < 0.0) parse_fail(line_no, "negative edge cost");
            raw.edges.push_back({u, v, cost});
        } else if (keyword == "coord") {
            int v;
            double x, y;
            if (!(words >> v >> x >> y)) parse_fail(line_no, "coord needs <v> <x> <y>");
            if (raw.node_count < 0 || v < 0 || v >= raw.node_count) {
                parse_fail(line_no, "coord node out of range");
            }
            if (!has_coords) {
                raw.coordinates.assign(static_cast<std::size_t>(raw.node_count), {0.0, 0.0});
                has_coords = true;
            }
            raw.coordinates[static_cast<std::size_t>(v)] = {x, y};
        } else if (keyword == "terminals") {
            if (!(words >> declared_sets) || declared_sets < 0) {
                parse_fail(line_no, "terminals needs a count");
            }
        } else if (keyword == "set") {
            std::vector<int> members;
            int t;
            while (words >> t) members.push_back(t);
            if (members.empty()) parse_fail(line_no, "set needs at least a root");
            if (raw.node_count < 0) parse_fail(line_no, "set before nodes line");
            for (int m : members) {
                if (m < 0 || m >= raw.node_count) parse_fail(line_no, "terminal out of range");
            }
            raw.roots.push_back(members.front());
            raw.terminal_sets.push_back(std::move(members));
        } else {
            parse_fail(line_no, "unknown keyword '" + keyword + "'");
        }
    }
    if (raw.node_count < 0) throw std::runtime_error("parse error: missing nodes line");
    if (declared_sets >= 0 && declared_sets != static_cast<int>(raw.terminal_sets.size())) {
        throw std::runtime_error("parse error: terminals count does not match set lines");
    }
    return canonicalize(raw);
}

SfpInstance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

SfpInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string serialize(const SfpInstance& inst) {
    std::string out;
    out += "nodes " + std::to_string(inst.node_count()) + "\n";
    if (!inst.coordinates().empty()) {
        for (int v = 0; v < inst.node_count(); ++v) {
            const auto& [x, y] = inst.coordinates()[static_cast<std::size_t>(v)];
            out += "coord " + std::to_string(v) + " " + format_double(x) + " " +
                   format_double(y) + "\n";
        }
    }
    for (const Edge& e : inst.graph().edges()) {
        out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
               format_double(e.cost) + "\n";
    }
    out += "terminals " + std::to_string(inst.set_count()) + "\n";
    for (int k = 0; k < inst.set_count(); ++k) {
        out += "set " + std::to_string(inst.root(k));
        for (int t : inst.terminal_set(k)) {
            if (t != inst.root(k)) out += " " + std::to_string(t);
        }
        out += "\n";
    }
    return out;
}

void save_instance(const SfpInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << serialize(inst);
}

}  // namespace sforest
