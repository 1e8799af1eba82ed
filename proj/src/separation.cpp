#include "sforest/separation.hpp"

#include <algorithm>
#include <optional>

namespace sforest {

namespace {

double eval_coeffs(const std::vector<std::pair<int, double>>& coeffs,
                   const std::vector<double>& point) {
    double v = 0.0;
    for (auto [col, a] : coeffs) v += a * point[static_cast<std::size_t>(col)];
    return v;
}

// finalizes rhs/violation from the assembled coefficients; returns false
// when the row is not actually violated beyond the tolerance
bool finish(ViolatedCut& cut, const std::vector<double>& point, double tol) {
    cut.violation = cut.rhs - eval_coeffs(cut.coeffs, point);
    return cut.violation > tol;
}

std::vector<char> node_side(const MinCutResult& res, int n) {
    return {res.source_side.begin(), res.source_side.begin() + n};
}

void add_undirected_crossing(std::vector<std::pair<int, double>>& coeffs, const Graph& g,
                             const std::vector<int>& xcols, const std::vector<char>& side) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (side[static_cast<std::size_t>(ed.u)] != side[static_cast<std::size_t>(ed.v)]) {
            coeffs.push_back({xcols[static_cast<std::size_t>(e)], 1.0});
        }
    }
}

void add_directed_crossing(std::vector<std::pair<int, double>>& coeffs, const Graph& g,
                           const std::vector<int>& ycols, const std::vector<char>& side) {
    for (int a = 0; a < arc_count(g); ++a) {
        if (side[static_cast<std::size_t>(arc_tail(g, a))] &&
            !side[static_cast<std::size_t>(arc_head(g, a))]) {
            coeffs.push_back({ycols[static_cast<std::size_t>(a)], 1.0});
        }
    }
}

FlowNetwork edge_capacity_network(const Graph& g, const Model& m,
                                  const std::vector<double>& point, int extra_nodes) {
    FlowNetwork net(g.node_count() + extra_nodes);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        double cap = point[static_cast<std::size_t>(m.vars.x[static_cast<std::size_t>(e)])];
        net.add_arc(ed.u, ed.v, cap);
        net.add_arc(ed.v, ed.u, cap);
    }
    return net;
}

void separate_uc(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
                 double tol, std::vector<ViolatedCut>& out) {
    const Graph& g = inst.graph();
    for (int k = 0; k < inst.set_count(); ++k) {
        for (int t : inst.terminal_set(k)) {
            if (t == inst.root(k)) continue;
            FlowNetwork net = edge_capacity_network(g, m, point, 0);
            MinCutResult res = net.min_cut(inst.root(k), t);
            if (res.value >= 1.0 - tol) continue;
            ViolatedCut cut;
            cut.family = LazyFamily::UndirectedCut;
            cut.index = {k, t, -1};
            cut.node_set = node_side(res, g.node_count());
            cut.rhs = 1.0;
            add_undirected_crossing(cut.coeffs, g, m.vars.x, cut.node_set);
            cut.name = "uc" + std::to_string(k) + "_" + std::to_string(t);
            if (finish(cut, point, tol)) out.push_back(std::move(cut));
        }
    }
}

void separate_dc(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
                 double tol, std::vector<ViolatedCut>& out) {
    const Graph& g = inst.graph();
    for (int k = 0; k < inst.set_count(); ++k) {
        const auto& yk = m.vars.y_arc_set[static_cast<std::size_t>(k)];
        for (int t : inst.terminal_set(k)) {
            if (t == inst.root(k)) continue;
            FlowNetwork net(g.node_count());
            for (int a = 0; a < arc_count(g); ++a) {
                net.add_arc(arc_tail(g, a), arc_head(g, a),
                            point[static_cast<std::size_t>(yk[static_cast<std::size_t>(a)])]);
            }
            MinCutResult res = net.min_cut(inst.root(k), t);
            if (res.value >= 1.0 - tol) continue;
            ViolatedCut cut;
            cut.family = LazyFamily::DirectedCut;
            cut.index = {k, t, -1};
            cut.node_set = node_side(res, g.node_count());
            cut.rhs = 1.0;
            add_directed_crossing(cut.coeffs, g, yk, cut.node_set);
            cut.name = "dc" + std::to_string(k) + "_" + std::to_string(t);
            if (finish(cut, point, tol)) out.push_back(std::move(cut));
        }
    }
}

void separate_klsvz(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
                    double tol, std::vector<ViolatedCut>& out) {
    const Graph& g = inst.graph();
    const int n = g.node_count();
    TerminalPairs tp = lifted_pair_order(inst);
    const int L = static_cast<int>(tp.size());

    // occ(u): highest pair index a terminal occurs in
    std::vector<int> occ(static_cast<std::size_t>(n), -1);
    for (int l = 0; l < L; ++l) {
        auto [s, t] = tp.pairs[static_cast<std::size_t>(l)];
        occ[static_cast<std::size_t>(s)] = std::max(occ[static_cast<std::size_t>(s)], l);
        occ[static_cast<std::size_t>(t)] = std::max(occ[static_cast<std::size_t>(t)], l);
    }

    for (int l = 0; l < L; ++l) {
        auto [sl, tl] = tp.pairs[static_cast<std::size_t>(l)];
        const double yl = point[static_cast<std::size_t>(m.vars.y_pair[static_cast<std::size_t>(l)])];
        const double ybl =
            point[static_cast<std::size_t>(m.vars.ybar_pair[static_cast<std::size_t>(l)])];

        // family 1: cuts S that separate pair l and no later pair, so l is
        // the highest pair whose connection requirement the cut certifies.
        // Merging the members of every later pair forbids separating them;
        // only one direction is needed because x(delta(S)) is symmetric.
        {
            std::optional<MinCutResult> best;
            {
                FlowNetwork net = edge_capacity_network(g, m, point, 0);
                for (int j = l + 1; j < L; ++j) {
                    auto [sj, tj] = tp.pairs[static_cast<std::size_t>(j)];
                    net.add_infinite_arc(sj, tj);
                    net.add_infinite_arc(tj, sj);
                }
                best = net.min_cut(sl, tl);
            }
            if (best && best->value < 1.0 - yl - tol) {
                ViolatedCut cut;
                cut.family = LazyFamily::PairCut;
                cut.index = {l, 1, -1};
                cut.node_set = node_side(*best, n);
                cut.rhs = 1.0;
                add_undirected_crossing(cut.coeffs, g, m.vars.x, cut.node_set);
                cut.coeffs.push_back({m.vars.y_pair[static_cast<std::size_t>(l)], 1.0});
                cut.name = "kl1_" + std::to_string(l);
                if (finish(cut, point, tol)) out.push_back(std::move(cut));
            }
        }

        // family 2: cuts with both members of l inside, l the highest
        // occurrence inside, no pair's source inside with its target
        // outside, and some pair separated the other way round. The last
        // condition keeps the rows on cuts every feasible forest crosses,
        // which is what makes the relaxation a lower bound. One-directional
        // infinite arcs source -> target forbid forward separation; the
        // witness pair j supplies the backward separation and its source
        // doubles as the sink.
        if (occ[static_cast<std::size_t>(sl)] > l || occ[static_cast<std::size_t>(tl)] > l) continue;
        std::vector<int> forced;
        for (int u : inst.terminals()) {
            if (occ[static_cast<std::size_t>(u)] > l) forced.push_back(u);
        }
        std::optional<MinCutResult> best;
        for (int j = 0; j < L; ++j) {
            auto [sj, tj] = tp.pairs[static_cast<std::size_t>(j)];
            if (occ[static_cast<std::size_t>(tj)] > l) continue;
            if (sj == sl || sj == tl || sj == tj) continue;
            FlowNetwork net = edge_capacity_network(g, m, point, 0);
            net.add_infinite_arc(sl, tl);
            net.add_infinite_arc(tl, sl);
            for (auto [sq, tq] : tp.pairs) {
                net.add_infinite_arc(sq, tq);
            }
            if (tj != sl && tj != tl) net.add_infinite_arc(sl, tj);
            for (int u : forced) {
                if (u != sj) net.add_infinite_arc(u, sj);
            }
            MinCutResult res = net.min_cut(sl, sj);
            if (!best || res.value < best->value) best = std::move(res);
        }
        if (best && best->value < 1.0 - yl - ybl - tol) {
            ViolatedCut cut;
            cut.family = LazyFamily::PairCut;
            cut.index = {l, 2, -1};
            cut.node_set = node_side(*best, n);
            cut.rhs = 1.0;
            add_undirected_crossing(cut.coeffs, g, m.vars.x, cut.node_set);
            cut.coeffs.push_back({m.vars.y_pair[static_cast<std::size_t>(l)], 1.0});
            cut.coeffs.push_back({m.vars.ybar_pair[static_cast<std::size_t>(l)], 1.0});
            cut.name = "kl2_" + std::to_string(l);
            if (finish(cut, point, tol)) out.push_back(std::move(cut));
        }
    }
}

// Edmonds subtour rows y(S) - x(E[S]) >= y_i via a closure network per
// anchor. xcols/ycols select the layer (or the global forest for ET).
void separate_sec(const SfpInstance& inst, const std::vector<int>& xcols,
                  const std::vector<int>& ycols, LazyFamily family, int layer,
                  const std::vector<double>& point, double tol, std::vector<ViolatedCut>& out) {
    const Graph& g = inst.graph();
    const int n = g.node_count();
    const int mE = g.edge_count();
    auto xv = [&](int e) { return point[static_cast<std::size_t>(xcols[static_cast<std::size_t>(e)])]; };
    auto yv = [&](int i) { return point[static_cast<std::size_t>(ycols[static_cast<std::size_t>(i)])]; };

    for (int i = 0; i < n; ++i) {
        const int src = n + mE;
        const int snk = n + mE + 1;
        FlowNetwork net(n + mE + 2);
        for (int e = 0; e < mE; ++e) {
            net.add_arc(src, n + e, xv(e));
            net.add_infinite_arc(n + e, g.edge(e).u);
            net.add_infinite_arc(n + e, g.edge(e).v);
        }
        for (int v = 0; v < n; ++v) {
            if (v != i) net.add_arc(v, snk, yv(v));
        }
        MinCutResult res = net.min_cut(src, snk);
        std::vector<char> side = node_side(res, n);
        side[static_cast<std::size_t>(i)] = 1;  // the anchor joins S for free

        ViolatedCut cut;
        cut.family = family;
        cut.index = {layer, i, -1};
        cut.node_set = side;
        cut.rhs = 0.0;
        for (int v = 0; v < n; ++v) {
            if (v != i && side[static_cast<std::size_t>(v)]) {
                cut.coeffs.push_back({ycols[static_cast<std::size_t>(v)], 1.0});
            }
        }
        for (int e = 0; e < mE; ++e) {
            const Edge& ed = g.edge(e);
            if (side[static_cast<std::size_t>(ed.u)] && side[static_cast<std::size_t>(ed.v)]) {
                cut.coeffs.push_back({xcols[static_cast<std::size_t>(e)], -1.0});
            }
        }
        cut.name = "sec" + std::to_string(layer) + "_" + std::to_string(i);
        if (finish(cut, point, tol)) out.push_back(std::move(cut));
    }
}

void separate_edc(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
                  double tol, std::vector<ViolatedCut>& out) {
    const Graph& g = inst.graph();
    const int n = g.node_count();
    auto z_col = [&](int l, int k) {
        return m.vars.z_parent[static_cast<std::size_t>(l)][static_cast<std::size_t>(k - l)];
    };
    for (int k = 0; k < inst.set_count(); ++k) {
        for (int t : inst.terminal_set(k)) {
            const int sstar = n;
            FlowNetwork net(n + 1);
            for (int l = 0; l <= k; ++l) {
                net.add_arc(sstar, inst.root(l), point[static_cast<std::size_t>(z_col(l, k))]);
            }
            for (int a = 0; a < arc_count(g); ++a) {
                net.add_arc(arc_tail(g, a), arc_head(g, a),
                            point[static_cast<std::size_t>(
                                m.vars.y_arc[static_cast<std::size_t>(a)])]);
            }
            MinCutResult res = net.min_cut(sstar, t);
            if (res.value >= 1.0 - tol) continue;
            ViolatedCut cut;
            cut.family = LazyFamily::ExtendedCut;
            cut.index = {k, t, -1};
            cut.node_set = node_side(res, n);
            cut.rhs = 0.0;
            add_directed_crossing(cut.coeffs, g, m.vars.y_arc, cut.node_set);
            for (int l = 0; l <= k; ++l) {
                if (cut.node_set[static_cast<std::size_t>(inst.root(l))]) {
                    cut.coeffs.push_back({z_col(l, k), -1.0});
                }
            }
            cut.name = "edc" + std::to_string(k) + "_" + std::to_string(t);
            if (finish(cut, point, tol)) out.push_back(std::move(cut));
        }
    }
}

void separate_sedc(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
                   double tol, std::vector<ViolatedCut>& out) {
    const Graph& g = inst.graph();
    for (int k = 0; k < inst.set_count(); ++k) {
        const auto& yk = m.vars.y_arc_set[static_cast<std::size_t>(k)];
        for (int l = k; l < inst.set_count(); ++l) {
            const int zcol =
                m.vars.z_parent[static_cast<std::size_t>(k)][static_cast<std::size_t>(l - k)];
            const double zv = point[static_cast<std::size_t>(zcol)];
            if (zv <= tol) continue;  // the row cannot be violated
            for (int t : inst.terminal_set(l)) {
                if (t == inst.root(k)) continue;
                FlowNetwork net(g.node_count());
                for (int a = 0; a < arc_count(g); ++a) {
                    net.add_arc(arc_tail(g, a), arc_head(g, a),
                                point[static_cast<std::size_t>(yk[static_cast<std::size_t>(a)])]);
                }
                MinCutResult res = net.min_cut(inst.root(k), t);
                if (res.value >= zv - tol) continue;
                ViolatedCut cut;
                cut.family = LazyFamily::StrengthenedCut;
                cut.index = {k, l, t};
                cut.node_set = node_side(res, g.node_count());
                cut.rhs = 0.0;
                add_directed_crossing(cut.coeffs, g, yk, cut.node_set);
                cut.coeffs.push_back({zcol, -1.0});
                cut.name = "sedc" + std::to_string(k) + "_" + std::to_string(l) + "_" +
                           std::to_string(t);
                if (finish(cut, point, tol)) out.push_back(std::move(cut));
            }
        }
    }
}

}  // namespace

std::vector<ViolatedCut> separate_family(const SfpInstance& inst, const Model& model,
                                         LazyFamily family, const std::vector<double>& point,
                                         double tol) {
    std::vector<ViolatedCut> out;
    switch (family) {
        case LazyFamily::UndirectedCut:
            separate_uc(inst, model, point, tol, out);
            break;
        case LazyFamily::DirectedCut:
            separate_dc(inst, model, point, tol, out);
            break;
        case LazyFamily::PairCut:
            separate_klsvz(inst, model, point, tol, out);
            break;
        case LazyFamily::LayerSubtour:
            for (int k = 0; k < inst.set_count(); ++k) {
                separate_sec(inst, model.vars.x_set[static_cast<std::size_t>(k)],
                             model.vars.y_node_set[static_cast<std::size_t>(k)],
                             LazyFamily::LayerSubtour, k, point, tol, out);
            }
            break;
        case LazyFamily::GlobalSubtour:
            separate_sec(inst, model.vars.x, model.vars.y_node, LazyFamily::GlobalSubtour, 0,
                         point, tol, out);
            break;
        case LazyFamily::ExtendedCut:
            separate_edc(inst, model, point, tol, out);
            break;
        case LazyFamily::StrengthenedCut:
            separate_sedc(inst, model, point, tol, out);
            break;
    }
    return out;
}

std::vector<ViolatedCut> separate_all(const SfpInstance& inst, const Model& model,
                                      const std::vector<double>& point, double tol) {
    std::vector<ViolatedCut> out;
    for (LazyFamily family : model.lazy) {
        std::vector<ViolatedCut> part = separate_family(inst, model, family, point, tol);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace sforest
