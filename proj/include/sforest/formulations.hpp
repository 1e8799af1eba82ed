#ifndef SFOREST_FORMULATIONS_HPP
#define SFOREST_FORMULATIONS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sforest/instance.hpp"
#include "sforest/lp.hpp"

namespace sforest {

enum class Kind { UF, UC, DF, DC, KLSVZ, LT, ET, EDF, EDC, SEDC, MR };

inline constexpr std::array<Kind, 11> kAllKinds = {
    Kind::UF,  Kind::UC, Kind::DF,  Kind::DC,   Kind::KLSVZ, Kind::LT,
    Kind::ET,  Kind::EDF, Kind::EDC, Kind::SEDC, Kind::MR};

const char* kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

/// Constraint classes generated on demand by the separation oracles.
enum class LazyFamily {
    UndirectedCut,    // x(delta(S)) >= 1 over relevant cuts
    DirectedCut,      // y^k(delta+(S)) >= 1 per set
    PairCut,          // the two lifted cut families over terminal pairs
    LayerSubtour,     // y^k(S) - x^k(E[S]) >= y^k_i per layer
    GlobalSubtour,    // y(S) - x(E[S]) >= y_i on the single forest
    ExtendedCut,      // y(delta+(S)) >= sum of z_{lk} over roots in S
    StrengthenedCut,  // y^k(delta+(S)) >= z_{kl}
};

/// Arcs: edge e yields arc 2e (u -> v) and arc 2e+1 (v -> u).
inline int arc_count(const Graph& g) { return 2 * g.edge_count(); }
inline int arc_of(int e, int dir) { return 2 * e + dir; }
inline int arc_edge(int a) { return a / 2; }
inline int arc_reverse(int a) { return a ^ 1; }
inline int arc_tail(const Graph& g, int a) {
    const Edge& e = g.edge(a / 2);
    return (a & 1) ? e.v : e.u;
}
inline int arc_head(const Graph& g, int a) {
    const Edge& e = g.edge(a / 2);
    return (a & 1) ? e.u : e.v;
}

/// Maps model symbols to LP column indices. Only the vectors used by the
/// built kind are populated; everything else stays empty. All column
/// indices of the program appear in exactly one handle.
struct VarMap {
    std::vector<int> x;  // per edge, every kind

    std::vector<std::vector<int>> x_set;       // x^k per edge (LT, EDF)
    std::vector<std::vector<int>> y_node_set;  // y^k_i per node (LT)
    std::vector<int> y_node;                   // y_i per node (ET)
    std::vector<int> y_arc;                    // y_{ij}/y_{ji} per arc (EDC, MR)
    std::vector<std::vector<int>> y_arc_set;   // y^k per arc (DC, SEDC)

    // flows per arc: UF/DF index by non-root terminal, MR by pair index
    std::vector<std::vector<int>> flow;
    std::vector<int> flow_terminal;  // UF/DF: node id per flow layer

    // EDF flows: [k][i][arc] where i indexes flow_set_terminal[k]
    std::vector<std::vector<std::vector<int>>> flow_set;
    std::vector<std::vector<int>> flow_set_terminal;

    std::vector<int> y_pair;     // y_l (KLSVZ)
    std::vector<int> ybar_pair;  // ybar_l (KLSVZ)

    // z_{kl} for l >= k, stored as z_parent[k][l - k] (EDF, EDC, SEDC)
    std::vector<std::vector<int>> z_parent;

    // ET pieces
    std::vector<std::vector<int>> w_pair;      // w_{kl}, k < l, at [k][l - k - 1]
    std::vector<int> a_set;                    // a_k
    std::vector<std::vector<int>> z_node_set;  // z_{ik} at [k][i]
    int big_r = -1;                            // R

    // envelopes replacing per-combination capacity rows (DF, EDF, MR)
    std::vector<std::vector<int>> agg_arc_set;   // per set, per arc
    std::vector<std::vector<int>> agg_node_set;  // per set, per node (MR)

    // MR pair bookkeeping: pairs (source root, target terminal) and, per
    // set k, the indices of pairs whose source is r^k
    std::vector<std::pair<int, int>> mr_pairs;
    std::vector<std::vector<int>> mr_pairs_of_set;
};

struct Model {
    Kind kind;
    LpProgram lp;
    VarMap vars;
    std::vector<LazyFamily> lazy;
};

/// Raised when a model is too large to build (or inapplicable, like the
/// lifted pair model on instances with disconnected pairs).
class BuildRefused : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Model build(const SfpInstance& inst, Kind kind);

/// Terminal pairs sorted by non-decreasing shortest-path distance. The
/// lifted pair model and its oracle key their cut families by this order;
/// it must be shared or the y columns and the families drift apart.
TerminalPairs lifted_pair_order(const SfpInstance& inst);

}  // namespace sforest

#endif
