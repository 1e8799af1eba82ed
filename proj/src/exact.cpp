#include "sforest/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "sforest/lp.hpp"
#include "sforest/separation.hpp"

namespace sforest {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// keeps the cheapest acyclic subset of the chosen edges (cycle stripping)
std::vector<char> strip_cycles(const Graph& g, const std::vector<char>& chosen) {
    std::vector<int> order;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (chosen[static_cast<std::size_t>(e)]) order.push_back(e);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.edge(a).cost != g.edge(b).cost) return g.edge(a).cost < g.edge(b).cost;
        return a < b;
    });
    Dsu dsu(g.node_count());
    std::vector<char> kept(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : order) {
        if (dsu.unite(g.edge(e).u, g.edge(e).v)) kept[static_cast<std::size_t>(e)] = 1;
    }
    return kept;
}

struct BnbState {
    const SfpInstance& inst;
    const Limits& limits;
    std::chrono::steady_clock::time_point start;
    std::vector<int> fixed;  // -1 free, 0 excluded, 1 included
    double incumbent = std::numeric_limits<double>::infinity();
    std::vector<char> best;
    long long nodes = 0;
    bool limit_hit = false;
};

void bnb(BnbState& st) {
    ++st.nodes;
    if (seconds_since(st.start) > st.limits.time_limit_s) {
        st.limit_hit = true;
        return;
    }
    const SfpInstance& inst = st.inst;
    const Graph& g = inst.graph();

    Model model = build(inst, Kind::UC);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (st.fixed[static_cast<std::size_t>(e)] >= 0) {
            double v = st.fixed[static_cast<std::size_t>(e)];
            model.lp.set_bounds(model.vars.x[static_cast<std::size_t>(e)], v, v);
        }
    }
    SimplexSolver solver;
    const double tol = solver.config().violation_tol;
    LpSolution sol;
    std::unordered_set<std::string> seen;
    for (int round = 0; round < 500; ++round) {
        sol = round == 0 ? solver.solve(model.lp) : solver.resolve(model.lp);
        if (sol.status == LpStatus::Infeasible) return;  // fixings cut off every forest
        if (sol.status != LpStatus::Optimal) break;
        auto cuts = separate_family(inst, model, LazyFamily::UndirectedCut, sol.x, tol);
        if (cuts.empty()) break;
        bool added = false;
        for (ViolatedCut& cut : cuts) {
            std::string sig;
            for (auto [col, a] : cut.coeffs) sig += std::to_string(col) + ",";
            if (!seen.insert(std::move(sig)).second) continue;
            model.lp.add_row(cut.sense, cut.rhs, std::move(cut.coeffs), std::move(cut.name));
            added = true;
        }
        if (!added) break;
    }
    if (sol.status == LpStatus::Optimal && sol.objective >= st.incumbent - 1e-9) return;

    int branch_edge = -1;
    double branch_value = -1.0;
    bool integral = true;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (st.fixed[static_cast<std::size_t>(e)] >= 0) continue;
        double v = sol.x[static_cast<std::size_t>(model.vars.x[static_cast<std::size_t>(e)])];
        if (std::abs(v - std::round(v)) > 1e-6) {
            integral = false;
            if (v > branch_value) {
                branch_value = v;
                branch_edge = e;
            }
        }
    }
    if (integral && sol.status == LpStatus::Optimal) {
        std::vector<char> chosen(static_cast<std::size_t>(g.edge_count()), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            double v = sol.x[static_cast<std::size_t>(model.vars.x[static_cast<std::size_t>(e)])];
            chosen[static_cast<std::size_t>(e)] = v > 0.5 ? 1 : 0;
        }
        Forest f = check_feasible(inst, strip_cycles(g, chosen));
        if (f.feasible && f.cost < st.incumbent) {
            st.incumbent = f.cost;
            st.best = f.edges;
        }
        return;  // nothing below this node beats the LP bound just attained
    }
    if (branch_edge < 0) {
        // fractional-free but not optimal LP status: fall back to first free edge
        for (int e = 0; e < g.edge_count() && branch_edge < 0; ++e) {
            if (st.fixed[static_cast<std::size_t>(e)] < 0) branch_edge = e;
        }
        if (branch_edge < 0) return;
    }
    st.fixed[static_cast<std::size_t>(branch_edge)] = 1;
    bnb(st);
    st.fixed[static_cast<std::size_t>(branch_edge)] = 0;
    bnb(st);
    st.fixed[static_cast<std::size_t>(branch_edge)] = -1;
}

}  // namespace

Forest check_feasible(const SfpInstance& inst, const std::vector<char>& edges) {
    const Graph& g = inst.graph();
    Forest f;
    f.edges = edges;
    int active = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (edges[static_cast<std::size_t>(e)]) {
            ++active;
            f.cost += g.edge(e).cost;
        }
    }
    std::vector<int> comp = connected_components(g, edges);
    bool acyclic = active == g.node_count() - component_count(comp);
    bool connected = true;
    for (int k = 0; k < inst.set_count() && connected; ++k) {
        int root_comp = comp[static_cast<std::size_t>(inst.root(k))];
        for (int t : inst.terminal_set(k)) {
            if (comp[static_cast<std::size_t>(t)] != root_comp) {
                connected = false;
                break;
            }
        }
    }
    f.feasible = acyclic && connected;
    return f;
}

ExactResult brute_force_optimum(const SfpInstance& inst) {
    const Graph& g = inst.graph();
    const int m = g.edge_count();
    ExactResult res;
    res.value = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Dsu dsu(g.node_count());
        double cost = 0.0;
        bool acyclic = true;
        for (int e = 0; e < m && acyclic; ++e) {
            if (!(mask >> e & 1u)) continue;
            if (!dsu.unite(g.edge(e).u, g.edge(e).v)) acyclic = false;
            cost += g.edge(e).cost;
        }
        if (!acyclic || cost >= res.value) continue;
        bool connected = true;
        for (int k = 0; k < inst.set_count() && connected; ++k) {
            int root = dsu.find(inst.root(k));
            for (int t : inst.terminal_set(k)) {
                if (dsu.find(t) != root) {
                    connected = false;
                    break;
                }
            }
        }
        if (!connected) continue;
        res.found = true;
        res.value = cost;
        res.witness.edges.assign(static_cast<std::size_t>(m), 0);
        for (int e = 0; e < m; ++e) {
            res.witness.edges[static_cast<std::size_t>(e)] = mask >> e & 1u ? 1 : 0;
        }
    }
    if (res.found) {
        res.witness = check_feasible(inst, res.witness.edges);
        res.optimal = true;
    } else {
        res.value = 0.0;
    }
    return res;
}

ExactResult branch_and_bound_optimum(const SfpInstance& inst, const Limits& limits) {
    const Graph& g = inst.graph();
    ExactResult res;

    // spanning-forest incumbent: cheapest acyclic superset of everything
    std::vector<char> all(static_cast<std::size_t>(g.edge_count()), 1);
    Forest initial = check_feasible(inst, strip_cycles(g, all));
    if (!initial.feasible) return res;  // some set is disconnected in G itself

    BnbState st{inst, limits, std::chrono::steady_clock::now(),
                std::vector<int>(static_cast<std::size_t>(g.edge_count()), -1)};
    st.incumbent = initial.cost;
    st.best = initial.edges;
    bnb(st);

    res.found = true;
    res.value = st.incumbent;
    res.witness = check_feasible(inst, st.best);
    res.optimal = !st.limit_hit;
    res.nodes = st.nodes;
    return res;
}

ExactResult integer_optimum(const SfpInstance& inst, const Limits& limits) {
    if (inst.edge_count() <= 16) return brute_force_optimum(inst);
    return branch_and_bound_optimum(inst, limits);
}

}  // namespace sforest
