#include "sforest/formulations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sforest {

const char* kind_name(Kind kind) {
    switch (kind) {
        case Kind::UF: return "uf";
        case Kind::UC: return "uc";
        case Kind::DF: return "df";
        case Kind::DC: return "dc";
        case Kind::KLSVZ: return "klsvz";
        case Kind::LT: return "lt";
        case Kind::ET: return "et";
        case Kind::EDF: return "edf";
        case Kind::EDC: return "edc";
        case Kind::SEDC: return "sedc";
        case Kind::MR: return "mr";
    }
    return "?";
}

std::optional<Kind> parse_kind(std::string_view name) {
    for (Kind k : kAllKinds) {
        if (name == kind_name(k)) return k;
    }
    return std::nullopt;
}

namespace {

std::string tag(const char* stem, int a) { return std::string(stem) + std::to_string(a); }
std::string tag(const char* stem, int a, int b) {
    return std::string(stem) + std::to_string(a) + "_" + std::to_string(b);
}

void add_edge_columns(Model& m, const SfpInstance& inst) {
    const Graph& g = inst.graph();
    for (int e = 0; e < g.edge_count(); ++e) {
        m.vars.x.push_back(m.lp.add_column(g.edge(e).cost, 0.0, 1.0, tag("x", e)));
    }
}

std::vector<int> nonroot_terminals(const SfpInstance& inst) {
    std::vector<int> out;
    for (int k = 0; k < inst.set_count(); ++k) {
        for (int t : inst.terminal_set(k)) {
            if (t != inst.root(k)) out.push_back(t);
        }
    }
    return out;
}

// unit-flow conservation rows from `source` to `target` over arc columns
void add_conservation_rows(Model& m, const SfpInstance& inst, const std::vector<int>& fcols,
                           int source, int target, const char* stem, int layer) {
    const Graph& g = inst.graph();
    for (int i = 0; i < g.node_count(); ++i) {
        std::vector<std::pair<int, double>> terms;
        for (const auto& [w, e] : g.incident(i)) {
            int out_arc = arc_of(e, g.edge(e).u == i ? 0 : 1);
            terms.push_back({fcols[static_cast<std::size_t>(out_arc)], 1.0});
            terms.push_back({fcols[static_cast<std::size_t>(arc_reverse(out_arc))], -1.0});
        }
        double rhs = i == source ? 1.0 : (i == target ? -1.0 : 0.0);
        m.lp.add_row(RowSense::EQ, rhs, std::move(terms), tag(stem, layer, i));
    }
}

std::vector<int> add_arc_flow_columns(Model& m, const Graph& g, const std::string& stem) {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(arc_count(g)));
    for (int a = 0; a < arc_count(g); ++a) {
        cols.push_back(m.lp.add_column(0.0, 0.0, 1.0, stem + "_" + std::to_string(a)));
    }
    return cols;
}

void build_uf_df(Model& m, const SfpInstance& inst, bool directed) {
    const Graph& g = inst.graph();
    add_edge_columns(m, inst);
    m.vars.flow_terminal = nonroot_terminals(inst);
    for (std::size_t ti = 0; ti < m.vars.flow_terminal.size(); ++ti) {
        m.vars.flow.push_back(add_arc_flow_columns(m, g, tag("f", static_cast<int>(ti))));
    }
    for (std::size_t ti = 0; ti < m.vars.flow_terminal.size(); ++ti) {
        int t = m.vars.flow_terminal[ti];
        add_conservation_rows(m, inst, m.vars.flow[ti], inst.root(inst.set_of(t)), t, "cons",
                              static_cast<int>(ti));
    }
    if (!directed) {
        // f^t_ij + f^t_ji <= x_ij
        for (std::size_t ti = 0; ti < m.vars.flow.size(); ++ti) {
            for (int e = 0; e < g.edge_count(); ++e) {
                m.lp.add_row(RowSense::LE, 0.0,
                             {{m.vars.flow[ti][static_cast<std::size_t>(arc_of(e, 0))], 1.0},
                              {m.vars.flow[ti][static_cast<std::size_t>(arc_of(e, 1))], 1.0},
                              {m.vars.x[static_cast<std::size_t>(e)], -1.0}},
                             tag("cap", static_cast<int>(ti), e));
            }
        }
        return;
    }
    // Orientation coupling within each set. The model's pairwise rows
    // f^s_ij + f^t_ji <= x_ij over all s,t in T^k are replaced by an exact
    // envelope g^k with g^k_a >= f^t_a and g^k_ij + g^k_ji <= x_ij, which
    // has the same projection onto (x, f) but far fewer rows.
    for (int k = 0; k < inst.set_count(); ++k) {
        m.vars.agg_arc_set.push_back(add_arc_flow_columns(m, g, tag("g", k)));
    }
    for (std::size_t ti = 0; ti < m.vars.flow_terminal.size(); ++ti) {
        int k = inst.set_of(m.vars.flow_terminal[ti]);
        for (int a = 0; a < arc_count(g); ++a) {
            m.lp.add_row(RowSense::LE, 0.0,
                         {{m.vars.flow[ti][static_cast<std::size_t>(a)], 1.0},
                          {m.vars.agg_arc_set[static_cast<std::size_t>(k)]
                                             [static_cast<std::size_t>(a)],
                           -1.0}},
                         tag("env", static_cast<int>(ti), a));
        }
    }
    for (int k = 0; k < inst.set_count(); ++k) {
        for (int e = 0; e < g.edge_count(); ++e) {
            m.lp.add_row(
                RowSense::LE, 0.0,
                {{m.vars.agg_arc_set[static_cast<std::size_t>(k)]
                                    [static_cast<std::size_t>(arc_of(e, 0))],
                  1.0},
                 {m.vars.agg_arc_set[static_cast<std::size_t>(k)]
                                    [static_cast<std::size_t>(arc_of(e, 1))],
                  1.0},
                 {m.vars.x[static_cast<std::size_t>(e)], -1.0}},
                tag("cap", k, e));
        }
    }
}

void build_dc(Model& m, const SfpInstance& inst) {
    const Graph& g = inst.graph();
    add_edge_columns(m, inst);
    for (int k = 0; k < inst.set_count(); ++k) {
        m.vars.y_arc_set.push_back(add_arc_flow_columns(m, g, tag("y", k)));
        for (int e = 0; e < g.edge_count(); ++e) {
            m.lp.add_row(RowSense::LE, 0.0,
                         {{m.vars.y_arc_set.back()[static_cast<std::size_t>(arc_of(e, 0))], 1.0},
                          {m.vars.y_arc_set.back()[static_cast<std::size_t>(arc_of(e, 1))], 1.0},
                          {m.vars.x[static_cast<std::size_t>(e)], -1.0}},
                         tag("cap", k, e));
        }
    }
    m.lazy.push_back(LazyFamily::DirectedCut);
}

void build_klsvz(Model& m, const SfpInstance& inst) {
    TerminalPairs tp = lifted_pair_order(inst);
    if (!tp.all_finite) {
        throw BuildRefused("lifted pair model inapplicable: some terminal pair is disconnected");
    }
    add_edge_columns(m, inst);
    for (std::size_t l = 0; l < tp.size(); ++l) {
        m.vars.y_pair.push_back(m.lp.add_column(tp.dist[l], 0.0, 1.0, tag("yl", static_cast<int>(l))));
        m.vars.ybar_pair.push_back(
            m.lp.add_column(tp.dist[l], 0.0, 1.0, tag("ybl", static_cast<int>(l))));
    }
    m.lazy.push_back(LazyFamily::PairCut);
}

void build_lt(Model& m, const SfpInstance& inst) {
    const Graph& g = inst.graph();
    add_edge_columns(m, inst);
    for (int k = 0; k < inst.set_count(); ++k) {
        std::vector<int> xk, yk;
        for (int e = 0; e < g.edge_count(); ++e) {
            xk.push_back(m.lp.add_column(0.0, 0.0, 1.0, tag("xk", k, e)));
        }
        for (int i = 0; i < g.node_count(); ++i) {
            double lo = inst.set_of(i) == k ? 1.0 : 0.0;  // y^k_i = 1 on T^k
            yk.push_back(m.lp.add_column(0.0, lo, 1.0, tag("yk", k, i)));
        }
        std::vector<std::pair<int, double>> tree_terms;
        for (int i : yk) tree_terms.push_back({i, 1.0});
        for (int e : xk) tree_terms.push_back({e, -1.0});
        m.lp.add_row(RowSense::EQ, 1.0, std::move(tree_terms), tag("tree", k));
        for (int e = 0; e < g.edge_count(); ++e) {
            m.lp.add_row(RowSense::LE, 0.0,
                         {{xk[static_cast<std::size_t>(e)], 1.0},
                          {m.vars.x[static_cast<std::size_t>(e)], -1.0}},
                         tag("cap", k, e));
        }
        m.vars.x_set.push_back(std::move(xk));
        m.vars.y_node_set.push_back(std::move(yk));
    }
    m.lazy.push_back(LazyFamily::LayerSubtour);
}

void build_et(Model& m, const SfpInstance& inst) {
    const Graph& g = inst.graph();
    const int K = inst.set_count();
    add_edge_columns(m, inst);
    for (int i = 0; i < g.node_count(); ++i) {
        double lo = inst.is_terminal(i) ? 1.0 : 0.0;  // y_i = 1 on terminals
        m.vars.y_node.push_back(m.lp.add_column(0.0, lo, 1.0, tag("yn", i)));
    }
    for (int k = 0; k < K; ++k) {
        std::vector<int> zk;
        for (int i = 0; i < g.node_count(); ++i) {
            double lo = inst.set_of(i) == k ? 1.0 : 0.0;  // z_ik = 1 on T^k
            zk.push_back(m.lp.add_column(0.0, lo, 1.0, tag("z", k, i)));
        }
        m.vars.z_node_set.push_back(std::move(zk));
        m.vars.a_set.push_back(m.lp.add_column(0.0, 0.0, 1.0, tag("a", k)));
    }
    for (int k = 0; k < K; ++k) {
        std::vector<int> wk;
        for (int l = k + 1; l < K; ++l) {
            wk.push_back(m.lp.add_column(0.0, 0.0, 1.0, tag("w", k, l)));
        }
        m.vars.w_pair.push_back(std::move(wk));
    }
    m.vars.big_r = m.lp.add_column(0.0, 1.0, static_cast<double>(K), "R");
    auto w_of = [&](int k, int l) {
        return m.vars.w_pair[static_cast<std::size_t>(k)][static_cast<std::size_t>(l - k - 1)];
    };

    {
        std::vector<std::pair<int, double>> terms;
        for (int i : m.vars.y_node) terms.push_back({i, 1.0});
        for (int e : m.vars.x) terms.push_back({e, -1.0});
        terms.push_back({m.vars.big_r, -1.0});
        m.lp.add_row(RowSense::EQ, 0.0, std::move(terms), "components");
    }
    {
        std::vector<std::pair<int, double>> terms;
        for (int k : m.vars.a_set) terms.push_back({k, 1.0});
        terms.push_back({m.vars.big_r, -1.0});
        m.lp.add_row(RowSense::EQ, 0.0, std::move(terms), "anchors");
    }
    for (int k = 0; k < K; ++k) {
        for (int l = k + 1; l < K; ++l) {
            m.lp.add_row(RowSense::LE, 1.0,
                         {{m.vars.a_set[static_cast<std::size_t>(k)], 1.0}, {w_of(k, l), 1.0}},
                         tag("aw", k, l));
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const int xe = m.vars.x[static_cast<std::size_t>(e)];
        for (int k = 0; k < K; ++k) {
            for (int l = k + 1; l < K; ++l) {
                const auto& zk = m.vars.z_node_set[static_cast<std::size_t>(k)];
                const auto& zl = m.vars.z_node_set[static_cast<std::size_t>(l)];
                m.lp.add_row(RowSense::LE, 2.0,
                             {{xe, 1.0},
                              {zk[static_cast<std::size_t>(ed.u)], 1.0},
                              {zl[static_cast<std::size_t>(ed.v)], 1.0},
                              {w_of(k, l), -1.0}},
                             tag("join", e, k * K + l) + "a");
                m.lp.add_row(RowSense::LE, 2.0,
                             {{xe, 1.0},
                              {zl[static_cast<std::size_t>(ed.u)], 1.0},
                              {zk[static_cast<std::size_t>(ed.v)], 1.0},
                              {w_of(k, l), -1.0}},
                             tag("join", e, k * K + l) + "b");
            }
        }
        for (int k = 0; k < K; ++k) {
            const auto& zk = m.vars.z_node_set[static_cast<std::size_t>(k)];
            // z spreads along picked edges: z_ik >= x_ij + z_jk - 1
            m.lp.add_row(RowSense::LE, 1.0,
                         {{xe, 1.0},
                          {zk[static_cast<std::size_t>(ed.v)], 1.0},
                          {zk[static_cast<std::size_t>(ed.u)], -1.0}},
                         tag("spread", e, k) + "a");
            m.lp.add_row(RowSense::LE, 1.0,
                         {{xe, 1.0},
                          {zk[static_cast<std::size_t>(ed.u)], 1.0},
                          {zk[static_cast<std::size_t>(ed.v)], -1.0}},
                         tag("spread", e, k) + "b");
        }
    }
    for (int k = 0; k < K; ++k) {
        for (int l = k + 1; l < K; ++l) {
            for (int mm = l + 1; mm < K; ++mm) {
                m.lp.add_row(RowSense::LE, 1.0,
                             {{w_of(k, l), 1.0}, {w_of(l, mm), 1.0}, {w_of(k, mm), -1.0}},
                             tag("tri", k, l * K + mm) + "a");
                m.lp.add_row(RowSense::LE, 1.0,
                             {{w_of(k, mm), 1.0}, {w_of(l, mm), 1.0}, {w_of(k, l), -1.0}},
                             tag("tri", k, l * K + mm) + "b");
                m.lp.add_row(RowSense::LE, 1.0,
                             {{w_of(k, l), 1.0}, {w_of(k, mm), 1.0}, {w_of(l, mm), -1.0}},
                             tag("tri", k, l * K + mm) + "c");
            }
        }
    }
    m.lazy.push_back(LazyFamily::GlobalSubtour);
}

// z_{kl} columns for l >= k plus the shared hierarchy rows
void add_parent_structure(Model& m, const SfpInstance& inst) {
    const int K = inst.set_count();
    for (int k = 0; k < K; ++k) {
        std::vector<int> zk;
        for (int l = k; l < K; ++l) {
            double lo = (k == 0 && l == 0) ? 1.0 : 0.0;  // z_11 = 1
            zk.push_back(m.lp.add_column(0.0, lo, 1.0, tag("z", k, l)));
        }
        m.vars.z_parent.push_back(std::move(zk));
    }
    auto z_of = [&](int k, int l) {
        return m.vars.z_parent[static_cast<std::size_t>(k)][static_cast<std::size_t>(l - k)];
    };
    for (int k = 0; k < K; ++k) {
        std::vector<std::pair<int, double>> terms;
        for (int l = 0; l <= k; ++l) terms.push_back({z_of(l, k), 1.0});
        m.lp.add_row(RowSense::EQ, 1.0, std::move(terms), tag("parent", k));
    }
    for (int k = 1; k + 1 < K; ++k) {
        for (int l = k + 1; l < K; ++l) {
            m.lp.add_row(RowSense::LE, 0.0, {{z_of(k, l), 1.0}, {z_of(k, k), -1.0}},
                         tag("hier", k, l));
        }
    }
}

// terminals of sets k..K-1 except r^k itself
std::vector<int> tail_terminals(const SfpInstance& inst, int k) {
    std::vector<int> out;
    for (int l = k; l < inst.set_count(); ++l) {
        for (int t : inst.terminal_set(l)) {
            if (t != inst.root(k)) out.push_back(t);
        }
    }
    return out;
}

void build_edf(Model& m, const SfpInstance& inst) {
    const Graph& g = inst.graph();
    const int K = inst.set_count();
    add_edge_columns(m, inst);
    add_parent_structure(m, inst);
    for (int k = 0; k < K; ++k) {
        std::vector<int> xk;
        for (int e = 0; e < g.edge_count(); ++e) {
            xk.push_back(m.lp.add_column(0.0, 0.0, 1.0, tag("xk", k, e)));
        }
        m.vars.x_set.push_back(std::move(xk));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<std::pair<int, double>> terms;
        for (int k = 0; k < K; ++k) {
            terms.push_back({m.vars.x_set[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)],
                             1.0});
        }
        terms.push_back({m.vars.x[static_cast<std::size_t>(e)], -1.0});
        m.lp.add_row(RowSense::LE, 0.0, std::move(terms), tag("forest", e));
    }
    for (int k = 0; k < K; ++k) {
        m.vars.flow_set_terminal.push_back(tail_terminals(inst, k));
        std::vector<std::vector<int>> flows;
        for (std::size_t ti = 0; ti < m.vars.flow_set_terminal.back().size(); ++ti) {
            flows.push_back(
                add_arc_flow_columns(m, g, tag("f", k, static_cast<int>(ti))));
        }
        m.vars.flow_set.push_back(std::move(flows));
        m.vars.agg_arc_set.push_back(add_arc_flow_columns(m, g, tag("g", k)));
    }
    for (int k = 0; k < K; ++k) {
        const auto& terminals = m.vars.flow_set_terminal[static_cast<std::size_t>(k)];
        for (std::size_t ti = 0; ti < terminals.size(); ++ti) {
            const int t = terminals[ti];
            const int l = inst.set_of(t);
            const int z = m.vars.z_parent[static_cast<std::size_t>(k)]
                                         [static_cast<std::size_t>(l - k)];
            const auto& f = m.vars.flow_set[static_cast<std::size_t>(k)][ti];
            // flow of value z_{kl} from r^k to t
            for (int i = 0; i < g.node_count(); ++i) {
                std::vector<std::pair<int, double>> terms;
                for (const auto& [w, e] : g.incident(i)) {
                    int out_arc = arc_of(e, g.edge(e).u == i ? 0 : 1);
                    terms.push_back({f[static_cast<std::size_t>(out_arc)], 1.0});
                    terms.push_back({f[static_cast<std::size_t>(arc_reverse(out_arc))], -1.0});
                }
                double zc = i == inst.root(k) ? -1.0 : (i == t ? 1.0 : 0.0);
                if (zc != 0.0) terms.push_back({z, zc});
                m.lp.add_row(RowSense::EQ, 0.0, std::move(terms),
                             tag("cons", k, static_cast<int>(ti) * g.node_count() + i));
            }
            // envelope over all flows of this set (replaces pairwise rows)
            for (int a = 0; a < arc_count(g); ++a) {
                m.lp.add_row(RowSense::LE, 0.0,
                             {{f[static_cast<std::size_t>(a)], 1.0},
                              {m.vars.agg_arc_set[static_cast<std::size_t>(k)]
                                                 [static_cast<std::size_t>(a)],
                               -1.0}},
                             tag("env", k, static_cast<int>(ti) * arc_count(g) + a));
            }
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            m.lp.add_row(
                RowSense::LE, 0.0,
                {{m.vars.agg_arc_set[static_cast<std::size_t>(k)]
                                    [static_cast<std::size_t>(arc_of(e, 0))],
                  1.0},
                 {m.vars.agg_arc_set[static_cast<std::size_t>(k)]
                                    [static_cast<std::size_t>(arc_of(e, 1))],
                  1.0},
                 {m.vars.x_set[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)], -1.0}},
                tag("cap", k, e));
        }
    }
}

void build_edc(Model& m, const SfpInstance& inst) {
    const Graph& g = inst.graph();
    add_edge_columns(m, inst);
    m.vars.y_arc = add_arc_flow_columns(m, g, "y");
    add_parent_structure(m, inst);
    for (int e = 0; e < g.edge_count(); ++e) {
        m.lp.add_row(RowSense::LE, 0.0,
                     {{m.vars.y_arc[static_cast<std::size_t>(arc_of(e, 0))], 1.0},
                      {m.vars.y_arc[static_cast<std::size_t>(arc_of(e, 1))], 1.0},
                      {m.vars.x[static_cast<std::size_t>(e)], -1.0}},
                     tag("cap", e));
    }
    m.lazy.push_back(LazyFamily::ExtendedCut);
}

void build_sedc(Model& m, const SfpInstance& inst) {
    const Graph& g = inst.graph();
    const int K = inst.set_count();
    add_edge_columns(m, inst);
    add_parent_structure(m, inst);
    for (int k = 0; k < K; ++k) {
        m.vars.y_arc_set.push_back(add_arc_flow_columns(m, g, tag("y", k)));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<std::pair<int, double>> terms;
        for (int k = 0; k < K; ++k) {
            terms.push_back({m.vars.y_arc_set[static_cast<std::size_t>(k)]
                                             [static_cast<std::size_t>(arc_of(e, 0))],
                             1.0});
            terms.push_back({m.vars.y_arc_set[static_cast<std::size_t>(k)]
                                             [static_cast<std::size_t>(arc_of(e, 1))],
                             1.0});
        }
        terms.push_back({m.vars.x[static_cast<std::size_t>(e)], -1.0});
        m.lp.add_row(RowSense::LE, 0.0, std::move(terms), tag("cap", e));
    }
    m.lazy.push_back(LazyFamily::StrengthenedCut);
}

void build_mr(Model& m, const SfpInstance& inst) {
    const Graph& g = inst.graph();
    const int K = inst.set_count();

    // pairs (r^l, t): every terminal t except r^1, paired with all roots of
    // index <= tau(t), skipping the degenerate t = r^l case
    m.vars.mr_pairs_of_set.assign(static_cast<std::size_t>(K), {});
    for (int l = 0; l < K; ++l) {
        for (int ls = l; ls < K; ++ls) {
            for (int t : inst.terminal_set(ls)) {
                if (t == inst.root(l) || t == inst.root(0)) continue;
                m.vars.mr_pairs_of_set[static_cast<std::size_t>(l)].push_back(
                    static_cast<int>(m.vars.mr_pairs.size()));
                m.vars.mr_pairs.push_back({inst.root(l), t});
            }
        }
    }

    // refuse when the published model (one capacity row per combination in
    // the product set, per arc and node) would not even fit in memory
    double combos = 1.0;
    for (int k = 0; k < K; ++k) {
        combos *= static_cast<double>(m.vars.mr_pairs_of_set[static_cast<std::size_t>(k)].size());
    }
    const double literal_rows =
        static_cast<double>(m.vars.mr_pairs.size()) * g.node_count() +
        combos * (arc_count(g) + g.node_count()) + g.edge_count();
    if (combos > 1e5 || literal_rows > 1e6) {
        throw BuildRefused("oriented multi-root model too large: " +
                           format_double(combos) + " pair combinations (limit 100000, row limit 1000000)");
    }

    add_edge_columns(m, inst);
    m.vars.y_arc = add_arc_flow_columns(m, g, "y");
    for (std::size_t p = 0; p < m.vars.mr_pairs.size(); ++p) {
        m.vars.flow.push_back(add_arc_flow_columns(m, g, tag("f", static_cast<int>(p))));
    }
    for (int k = 0; k < K; ++k) {
        m.vars.agg_arc_set.push_back(add_arc_flow_columns(m, g, tag("h", k)));
        std::vector<int> uk;
        for (int j = 0; j < g.node_count(); ++j) {
            uk.push_back(m.lp.add_column(0.0, 0.0, 1.0, tag("u", k, j)));
        }
        m.vars.agg_node_set.push_back(std::move(uk));
    }

    auto netflow_terms = [&](const std::vector<int>& f, int i) {
        std::vector<std::pair<int, double>> terms;
        for (const auto& [w, e] : g.incident(i)) {
            int out_arc = arc_of(e, g.edge(e).u == i ? 0 : 1);
            terms.push_back({f[static_cast<std::size_t>(out_arc)], 1.0});
            terms.push_back({f[static_cast<std::size_t>(arc_reverse(out_arc))], -1.0});
        }
        return terms;
    };

    // per-pair conservation; the endpoint nets are pinned to [0,1] at the
    // source and [-1,0] at the target so that circulation through a terminal
    // cannot stand in for genuine source-to-terminal flow
    for (std::size_t p = 0; p < m.vars.mr_pairs.size(); ++p) {
        auto [s, t] = m.vars.mr_pairs[p];
        const auto& f = m.vars.flow[p];
        for (int i = 0; i < g.node_count(); ++i) {
            std::vector<std::pair<int, double>> terms = netflow_terms(f, i);
            if (i == s) {
                m.lp.add_row(RowSense::LE, 1.0, terms, tag("cons", static_cast<int>(p), i));
                m.lp.add_row(RowSense::GE, 0.0, std::move(terms),
                             tag("conslo", static_cast<int>(p), i));
            } else if (i == t) {
                m.lp.add_row(RowSense::GE, -1.0, terms, tag("cons", static_cast<int>(p), i));
                m.lp.add_row(RowSense::LE, 0.0, std::move(terms),
                             tag("conshi", static_cast<int>(p), i));
            } else {
                m.lp.add_row(RowSense::EQ, 0.0, std::move(terms),
                             tag("cons", static_cast<int>(p), i));
            }
        }
    }

    auto influx_terms = [&](const std::vector<int>& f, int t) {
        std::vector<std::pair<int, double>> terms;
        for (const auto& [w, e] : g.incident(t)) {
            int in_arc = arc_of(e, g.edge(e).u == t ? 1 : 0);
            terms.push_back({f[static_cast<std::size_t>(in_arc)], 1.0});
        }
        return terms;
    };
    auto net_influx_terms = [&](const std::vector<int>& f, int t) {
        std::vector<std::pair<int, double>> terms = netflow_terms(f, t);
        for (auto& [col, a] : terms) a = -a;  // influx minus outflux
        return terms;
    };
    auto pair_index = [&](int l, int t) {
        const auto& bucket = m.vars.mr_pairs_of_set[static_cast<std::size_t>(l)];
        for (int p : bucket) {
            if (m.vars.mr_pairs[static_cast<std::size_t>(p)].second == t) return p;
        }
        return -1;
    };

    // each non-root terminal receives one unit of net flow across its sources
    for (int t : inst.terminals()) {
        if (inst.is_root(t)) continue;
        const int k = inst.set_of(t);
        std::vector<std::pair<int, double>> terms;
        for (int l = 0; l <= k; ++l) {
            int p = pair_index(l, t);
            for (auto [col, a] : net_influx_terms(m.vars.flow[static_cast<std::size_t>(p)], t)) {
                terms.push_back({col, a});
            }
        }
        m.lp.add_row(RowSense::EQ, 1.0, std::move(terms), tag("serve", t));
        // a foreign root that serves t must also reach this set's root
        for (int l = 0; l < k; ++l) {
            int pt = pair_index(l, t);
            int pr = pair_index(l, inst.root(k));
            if (pr < 0) continue;  // r^k = r^l cannot happen for l < k
            std::vector<std::pair<int, double>> link =
                net_influx_terms(m.vars.flow[static_cast<std::size_t>(pt)], t);
            for (auto [col, a] :
                 net_influx_terms(m.vars.flow[static_cast<std::size_t>(pr)], inst.root(k))) {
                link.push_back({col, -a});
            }
            m.lp.add_row(RowSense::LE, 0.0, std::move(link), tag("escort", t, l));
        }
    }

    // arc and node envelopes standing in for the per-combination rows
    for (int k = 0; k < K; ++k) {
        const auto& h = m.vars.agg_arc_set[static_cast<std::size_t>(k)];
        const auto& u = m.vars.agg_node_set[static_cast<std::size_t>(k)];
        for (int p : m.vars.mr_pairs_of_set[static_cast<std::size_t>(k)]) {
            const auto& f = m.vars.flow[static_cast<std::size_t>(p)];
            for (int a = 0; a < arc_count(g); ++a) {
                m.lp.add_row(RowSense::LE, 0.0,
                             {{f[static_cast<std::size_t>(a)], 1.0},
                              {h[static_cast<std::size_t>(a)], -1.0}},
                             tag("henv", p, a));
            }
            for (int j = 0; j < g.node_count(); ++j) {
                std::vector<std::pair<int, double>> terms = influx_terms(f, j);
                terms.push_back({u[static_cast<std::size_t>(j)], -1.0});
                m.lp.add_row(RowSense::LE, 0.0, std::move(terms), tag("uenv", p, j));
            }
        }
    }
    for (int a = 0; a < arc_count(g); ++a) {
        std::vector<std::pair<int, double>> terms;
        for (int k = 0; k < K; ++k) {
            terms.push_back(
                {m.vars.agg_arc_set[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)],
                 1.0});
        }
        terms.push_back({m.vars.y_arc[static_cast<std::size_t>(a)], -1.0});
        m.lp.add_row(RowSense::LE, 0.0, std::move(terms), tag("harc", a));
    }
    for (int j = 0; j < g.node_count(); ++j) {
        std::vector<std::pair<int, double>> terms;
        for (int k = 0; k < K; ++k) {
            terms.push_back(
                {m.vars.agg_node_set[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
                 1.0});
        }
        m.lp.add_row(RowSense::LE, 1.0, std::move(terms), tag("indeg", j));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        m.lp.add_row(RowSense::LE, 0.0,
                     {{m.vars.y_arc[static_cast<std::size_t>(arc_of(e, 0))], 1.0},
                      {m.vars.y_arc[static_cast<std::size_t>(arc_of(e, 1))], 1.0},
                      {m.vars.x[static_cast<std::size_t>(e)], -1.0}},
                     tag("orient", e));
    }
}

}  // namespace

Model build(const SfpInstance& inst, Kind kind) {
    Model m;
    m.kind = kind;
    switch (kind) {
        case Kind::UF:
            build_uf_df(m, inst, false);
            break;
        case Kind::UC:
            add_edge_columns(m, inst);
            m.lazy.push_back(LazyFamily::UndirectedCut);
            break;
        case Kind::DF:
            build_uf_df(m, inst, true);
            break;
        case Kind::DC:
            build_dc(m, inst);
            break;
        case Kind::KLSVZ:
            build_klsvz(m, inst);
            break;
        case Kind::LT:
            build_lt(m, inst);
            break;
        case Kind::ET:
            build_et(m, inst);
            break;
        case Kind::EDF:
            build_edf(m, inst);
            break;
        case Kind::EDC:
            build_edc(m, inst);
            break;
        case Kind::SEDC:
            build_sedc(m, inst);
            break;
        case Kind::MR:
            build_mr(m, inst);
            break;
    }
    return m;
}

TerminalPairs lifted_pair_order(const SfpInstance& inst) {
    TerminalPairs tp = shortest_distances(inst);
    std::vector<std::size_t> idx(tp.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return tp.dist[a] < tp.dist[b]; });
    TerminalPairs sorted;
    sorted.all_finite = tp.all_finite;
    for (std::size_t i : idx) {
        sorted.pairs.push_back(tp.pairs[i]);
        sorted.dist.push_back(tp.dist[i]);
    }
    return sorted;
}

}  // namespace sforest
