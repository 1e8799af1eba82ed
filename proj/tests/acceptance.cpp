// End-to-end acceptance run. Each criterion prints exactly one PASS/FAIL
// line; the process exits non-zero if any criterion fails. Brute-force
// reference implementations here are deliberately independent of the
// engine's separation and solver code paths.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "sforest/driver.hpp"
#include "sforest/exact.hpp"
#include "sforest/formulations.hpp"
#include "sforest/instance.hpp"
#include "sforest/separation.hpp"

using namespace sforest;

namespace {

namespace fs = std::filesystem;

double now_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------- criterion 1: golden bound table and integer optima ----------

bool criterion1(std::string& why) {
    struct Cell {
        const char* fixture;
        Kind kind;
        double value;
        double tol;
    };
    const std::vector<Cell> table = {
        {"instA.sfp", Kind::UC, 2.0, 1e-6},    {"instA.sfp", Kind::KLSVZ, 2.0, 1e-6},
        {"instA.sfp", Kind::DC, 3.0, 1e-6},    {"instA.sfp", Kind::LT, 3.0, 1e-6},
        {"instA.sfp", Kind::ET, 3.0, 1e-6},    {"instA.sfp", Kind::EDC, 3.0, 1e-6},
        {"instA.sfp", Kind::SEDC, 3.0, 1e-6},  {"instA.sfp", Kind::EDF, 3.0, 1e-6},
        {"instA.sfp", Kind::MR, 3.0, 1e-6},
        {"instB.sfp", Kind::UC, 2.0, 1e-6},    {"instB.sfp", Kind::DC, 2.0, 1e-6},
        {"instB.sfp", Kind::LT, 2.0, 1e-6},    {"instB.sfp", Kind::KLSVZ, 2.0, 1e-6},
        {"instB.sfp", Kind::ET, 2.67, 0.005},  {"instB.sfp", Kind::EDC, 2.5, 1e-6},
        {"instB.sfp", Kind::SEDC, 3.0, 1e-6},  {"instB.sfp", Kind::EDF, 3.0, 1e-6},
        {"instB.sfp", Kind::MR, 3.0, 1e-6},
        {"instC.sfp", Kind::UC, 4.0, 1e-6},    {"instC.sfp", Kind::DC, 4.0, 1e-6},
        {"instC.sfp", Kind::LT, 4.0, 1e-6},    {"instC.sfp", Kind::KLSVZ, 4.0, 1e-6},
        {"instC.sfp", Kind::ET, 5.0, 1e-6},    {"instC.sfp", Kind::EDC, 5.14, 0.005},
        {"instC.sfp", Kind::SEDC, 6.0, 1e-6},  {"instC.sfp", Kind::EDF, 6.0, 1e-6},
        {"instC.sfp", Kind::MR, 6.0, 1e-6},
    };
    for (const Cell& cell : table) {
        SfpInstance inst = load_instance(std::string(SFP_DATA_DIR) + "/" + cell.fixture);
        BoundReport r = solve_relaxation(inst, cell.kind);
        if (r.status != RunStatus::Optimal || std::abs(r.bound - cell.value) > cell.tol) {
            why = std::string(cell.fixture) + " " + kind_name(cell.kind) + ": got " +
                  format_double(r.bound) + " want " + format_double(cell.value);
            return false;
        }
    }
    const double opts[3] = {3.0, 3.0, 7.0};
    const char* fixtures[3] = {"instA.sfp", "instB.sfp", "instC.sfp"};
    for (int i = 0; i < 3; ++i) {
        SfpInstance inst = load_instance(std::string(SFP_DATA_DIR) + "/" + fixtures[i]);
        ExactResult r = integer_optimum(inst);
        if (!r.found || !r.optimal || r.value != opts[i]) {
            why = std::string(fixtures[i]) + ": integer optimum " + format_double(r.value);
            return false;
        }
    }
    return true;
}

// ---------- criteria 2 and 3: dominance lattice and validity ----------

struct GridRun {
    SfpInstance inst;
    std::string id;
    Comparison cmp;
};

std::vector<std::pair<SfpInstance, std::string>> lattice_instances() {
    std::vector<std::pair<SfpInstance, std::string>> out;
    for (int n : {10, 15, 25}) {
        for (int k : {2, 3, 4}) {
            for (double p : {0.5, 1.0}) {
                for (double alpha : {1.6, 2.0}) {
                    if (static_cast<int>(std::ceil(p * n)) < 2 * k) continue;
                    for (std::uint64_t seed : {1ull, 2ull}) {
                        // drop the second seed of the four heaviest cells to
                        // keep the full sweep at sixty instances
                        if (n == 25 && k == 4 && seed == 2) continue;
                        std::string id = "n" + std::to_string(n) + "_k" + std::to_string(k) +
                                         "_p" + format_double(p) + "_a" + format_double(alpha) +
                                         "_s" + std::to_string(seed);
                        out.push_back({generate(n, k, p, alpha, seed), id});
                    }
                }
            }
        }
    }
    return out;
}

bool criterion2(std::vector<GridRun>& runs, std::string& why) {
    std::vector<std::pair<SfpInstance, std::string>> insts = lattice_instances();
    if (insts.size() != 60) {
        why = "expected 60 instances, got " + std::to_string(insts.size());
        return false;
    }
    const std::vector<Kind> kinds = {Kind::UF, Kind::UC,  Kind::DF,   Kind::DC, Kind::KLSVZ,
                                     Kind::EDF, Kind::EDC, Kind::SEDC, Kind::MR};
    // one CPU: the big flow programs (uf/df/edf/mr) time out above n=15 and
    // drop out of the applicable checks, keeping the sweep inside its budget
    Limits limits;
    limits.time_limit_s = 2.5;
    runs.clear();
    runs.reserve(insts.size());
    for (auto& [inst, id] : insts) runs.push_back({std::move(inst), id, {}});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < runs.size(); i = next.fetch_add(1)) {
            runs[i].cmp = compare(runs[i].inst, kinds, limits, runs[i].id);
        }
    };
    unsigned hw = std::thread::hardware_concurrency();
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::max(1u, std::min(hw, 8u)); ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    for (const GridRun& run : runs) {
        if (!run.cmp.all_passed) {
            for (const DominanceCheck& c : run.cmp.audit) {
                if (c.applicable && !c.passed) {
                    why = run.id + ": " + kind_name(c.weaker) + (c.equality ? " = " : " <= ") +
                          kind_name(c.stronger) + " with " + format_double(c.lhs) + " vs " +
                          format_double(c.rhs);
                }
            }
            return false;
        }
    }
    return true;
}

bool criterion3(const std::vector<GridRun>& runs, std::string& why) {
    std::vector<const GridRun*> small;
    for (const GridRun& run : runs) {
        if (run.inst.edge_count() <= 40) small.push_back(&run);
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::string> fails(small.size());
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < small.size(); i = next.fetch_add(1)) {
            const GridRun& run = *small[i];
            Limits limits;
            limits.time_limit_s = 120.0;
            ExactResult opt = integer_optimum(run.inst, limits);
            if (!opt.found || !opt.optimal) {
                fails[i] = run.id + ": exact solve did not finish";
                continue;
            }
            double uc_bound = -1.0;
            for (const BoundReport& r : run.cmp.reports) {
                if (r.status != RunStatus::Optimal) continue;
                if (r.bound > opt.value + 1e-6) {
                    fails[i] = run.id + ": " + kind_name(r.kind) + " bound " +
                               format_double(r.bound) + " exceeds optimum " +
                               format_double(opt.value);
                }
                if (r.kind == Kind::UC) uc_bound = r.bound;
            }
            if (uc_bound < 0) {
                fails[i] = run.id + ": no optimal cut bound";
            } else if (opt.value > 2.0 * uc_bound + 1e-6) {
                fails[i] = run.id + ": optimum " + format_double(opt.value) +
                           " above twice the cut bound " + format_double(uc_bound);
            }
        }
    };
    unsigned hw = std::thread::hardware_concurrency();
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::max(1u, std::min(hw, 8u)); ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (const std::string& f : fails) {
        if (!f.empty()) {
            why = f;
            return false;
        }
    }
    if (small.empty()) {
        why = "no instance with at most 40 edges";
        return false;
    }
    return true;
}

// ---------- criterion 4: separation oracles vs subset enumeration ----------

double value_at(const std::vector<double>& point, int col) {
    return point[static_cast<std::size_t>(col)];
}

double cut_x(const Graph& g, const VarMap& vars, const std::vector<double>& point,
             std::uint32_t mask) {
    double v = 0.0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (((mask >> ed.u) & 1u) != ((mask >> ed.v) & 1u)) {
            v += value_at(point, vars.x[static_cast<std::size_t>(e)]);
        }
    }
    return v;
}

double cut_out_y(const Graph& g, const std::vector<int>& ycols, const std::vector<double>& point,
                 std::uint32_t mask) {
    double v = 0.0;
    for (int a = 0; a < arc_count(g); ++a) {
        if (((mask >> arc_tail(g, a)) & 1u) && !((mask >> arc_head(g, a)) & 1u)) {
            v += value_at(point, ycols[static_cast<std::size_t>(a)]);
        }
    }
    return v;
}

bool brute_uc(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
              double tol) {
    const int n = inst.node_count();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        bool relevant = false;
        for (int k = 0; k < inst.set_count() && !relevant; ++k) {
            if (!((mask >> inst.root(k)) & 1u)) continue;
            for (int t : inst.terminal_set(k)) {
                if (!((mask >> t) & 1u)) relevant = true;
            }
        }
        if (relevant && cut_x(inst.graph(), m.vars, point, mask) < 1.0 - tol) return true;
    }
    return false;
}

bool brute_dc(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
              double tol) {
    const int n = inst.node_count();
    for (int k = 0; k < inst.set_count(); ++k) {
        const auto& yk = m.vars.y_arc_set[static_cast<std::size_t>(k)];
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            if (!((mask >> inst.root(k)) & 1u)) continue;
            bool missing = false;
            for (int t : inst.terminal_set(k)) {
                if (!((mask >> t) & 1u)) missing = true;
            }
            if (missing && cut_out_y(inst.graph(), yk, point, mask) < 1.0 - tol) return true;
        }
    }
    return false;
}

bool brute_paircut(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
                   double tol) {
    const int n = inst.node_count();
    TerminalPairs tp = lifted_pair_order(inst);
    const int L = static_cast<int>(tp.size());
    std::vector<int> occ(static_cast<std::size_t>(n), -1);
    for (int l = 0; l < L; ++l) {
        auto [s, t] = tp.pairs[static_cast<std::size_t>(l)];
        occ[static_cast<std::size_t>(s)] = std::max(occ[static_cast<std::size_t>(s)], l);
        occ[static_cast<std::size_t>(t)] = std::max(occ[static_cast<std::size_t>(t)], l);
    }
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        // family 1 keys a separating cut by the highest pair it separates;
        // family 2 covers cuts with no source inside / target outside and
        // the highest-occurrence pair fully inside
        int maxsep = -1;
        bool outbound = false;
        for (int j = 0; j < L; ++j) {
            auto [s, t] = tp.pairs[static_cast<std::size_t>(j)];
            const bool sin = (mask >> s) & 1u;
            const bool tin = (mask >> t) & 1u;
            if (sin != tin) maxsep = j;
            if (sin && !tin) outbound = true;
        }
        const double xv = cut_x(inst.graph(), m.vars, point, mask);
        if (maxsep >= 0) {
            const double yl = value_at(point, m.vars.y_pair[static_cast<std::size_t>(maxsep)]);
            if (xv + yl < 1.0 - tol) return true;
        }
        if (maxsep >= 0 && !outbound) {
            int maxocc = -1;
            for (int u = 0; u < n; ++u) {
                if ((mask >> u) & 1u) maxocc = std::max(maxocc, occ[static_cast<std::size_t>(u)]);
            }
            if (maxocc < 0) continue;
            auto [sl, tl] = tp.pairs[static_cast<std::size_t>(maxocc)];
            if (!((mask >> sl) & 1u) || !((mask >> tl) & 1u)) continue;
            const double yl = value_at(point, m.vars.y_pair[static_cast<std::size_t>(maxocc)]);
            const double ybl = value_at(point, m.vars.ybar_pair[static_cast<std::size_t>(maxocc)]);
            if (xv + yl + ybl < 1.0 - tol) return true;
        }
    }
    return false;
}

bool brute_subtour(const SfpInstance& inst, const std::vector<int>& xcols,
                   const std::vector<int>& ycols, const std::vector<double>& point, double tol) {
    const Graph& g = inst.graph();
    const int n = g.node_count();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        double inner = 0.0;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (((mask >> ed.u) & 1u) && ((mask >> ed.v) & 1u)) {
                inner += value_at(point, xcols[static_cast<std::size_t>(e)]);
            }
        }
        double ysum = 0.0;
        double ymax = 0.0;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1u) {
                double yv = value_at(point, ycols[static_cast<std::size_t>(v)]);
                ysum += yv;
                ymax = std::max(ymax, yv);
            }
        }
        // the most violated anchor choice removes the largest node weight
        if (inner - (ysum - ymax) > tol) return true;
    }
    return false;
}

bool brute_edc(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
               double tol) {
    const int n = inst.node_count();
    auto z_col = [&](int l, int k) {
        return m.vars.z_parent[static_cast<std::size_t>(l)][static_cast<std::size_t>(k - l)];
    };
    for (int k = 0; k < inst.set_count(); ++k) {
        for (int t : inst.terminal_set(k)) {
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                if ((mask >> t) & 1u) continue;
                double inside_z = 0.0;
                for (int l = 0; l <= k; ++l) {
                    if ((mask >> inst.root(l)) & 1u) inside_z += value_at(point, z_col(l, k));
                }
                if (cut_out_y(inst.graph(), m.vars.y_arc, point, mask) - inside_z < -tol) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool brute_sedc(const SfpInstance& inst, const Model& m, const std::vector<double>& point,
                double tol) {
    const int n = inst.node_count();
    for (int k = 0; k < inst.set_count(); ++k) {
        const auto& yk = m.vars.y_arc_set[static_cast<std::size_t>(k)];
        for (int l = k; l < inst.set_count(); ++l) {
            const double zv = value_at(
                point,
                m.vars.z_parent[static_cast<std::size_t>(k)][static_cast<std::size_t>(l - k)]);
            for (int t : inst.terminal_set(l)) {
                if (t == inst.root(k)) continue;
                for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
                    if (!((mask >> inst.root(k)) & 1u) || ((mask >> t) & 1u)) continue;
                    if (cut_out_y(inst.graph(), yk, point, mask) < zv - tol) return true;
                }
            }
        }
    }
    return false;
}

bool brute_family(const SfpInstance& inst, const Model& m, LazyFamily family,
                  const std::vector<double>& point, double tol) {
    switch (family) {
        case LazyFamily::UndirectedCut: return brute_uc(inst, m, point, tol);
        case LazyFamily::DirectedCut: return brute_dc(inst, m, point, tol);
        case LazyFamily::PairCut: return brute_paircut(inst, m, point, tol);
        case LazyFamily::LayerSubtour:
            for (int k = 0; k < inst.set_count(); ++k) {
                if (brute_subtour(inst, m.vars.x_set[static_cast<std::size_t>(k)],
                                  m.vars.y_node_set[static_cast<std::size_t>(k)], point, tol)) {
                    return true;
                }
            }
            return false;
        case LazyFamily::GlobalSubtour:
            return brute_subtour(inst, m.vars.x, m.vars.y_node, point, tol);
        case LazyFamily::ExtendedCut: return brute_edc(inst, m, point, tol);
        case LazyFamily::StrengthenedCut: return brute_sedc(inst, m, point, tol);
    }
    return false;
}

bool criterion4(std::string& why) {
    const double tol = 1e-6;
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> cost(-1.0, 1.0);
    const std::vector<Kind> kinds = {Kind::UC, Kind::DC,  Kind::KLSVZ, Kind::LT,
                                     Kind::ET, Kind::EDC, Kind::SEDC};
    for (int n : {6, 7, 8}) {
        for (int k : {2, 3}) {
            for (std::uint64_t seed : {1ull, 2ull}) {
                if (n < 2 * k) continue;
                SfpInstance inst = generate(n, k, 1.0, 2.0, seed);
                for (Kind kind : kinds) {
                    Model model = build(inst, kind);
                    for (int trial = 0; trial < 20; ++trial) {
                        // a vertex optimal for random costs is a generic
                        // feasible point of the static program
                        LpProgram randomized;
                        for (int j = 0; j < model.lp.column_count(); ++j) {
                            const auto& c = model.lp.column(j);
                            randomized.add_column(cost(rng), c.lower, c.upper);
                        }
                        for (int i = 0; i < model.lp.row_count(); ++i) {
                            const auto& r = model.lp.row(i);
                            randomized.add_row(r.sense, r.rhs, r.coeffs);
                        }
                        LpSolution sol = solve_lp(randomized);
                        if (sol.status != LpStatus::Optimal) {
                            why = std::string(kind_name(kind)) + " n=" + std::to_string(n) +
                                  ": probe program did not solve";
                            return false;
                        }
                        for (LazyFamily family : model.lazy) {
                            bool oracle =
                                !separate_family(inst, model, family, sol.x, tol).empty();
                            bool brute = brute_family(inst, model, family, sol.x, tol);
                            if (oracle != brute) {
                                why = std::string(kind_name(kind)) + " n=" + std::to_string(n) +
                                      " k=" + std::to_string(k) +
                                      " seed=" + std::to_string(seed) +
                                      " trial=" + std::to_string(trial) +
                                      (oracle ? ": oracle found a cut the enumeration disproves"
                                              : ": enumeration found a cut the oracle missed");
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    return true;
}

// ---------- criterion 5: solver cross-checks ----------

bool brute_lp(const LpProgram& prog, bool& feasible, double& best) {
    const int n = prog.column_count();
    const int m = prog.row_count();
    feasible = false;
    best = 0.0;
    struct Constraint {
        Eigen::VectorXd a;
        double b;
    };
    std::vector<Constraint> cands;
    for (int i = 0; i < m; ++i) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
        for (auto [j, v] : prog.row(i).coeffs) a[j] = v;
        cands.push_back({a, prog.row(i).rhs});
    }
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
        a[j] = 1.0;
        cands.push_back({a, prog.column(j).lower});
        cands.push_back({a, prog.column(j).upper});
    }
    const int total = static_cast<int>(cands.size());
    std::vector<int> pick(static_cast<std::size_t>(n));
    auto check_point = [&](const Eigen::VectorXd& x) {
        for (int j = 0; j < n; ++j) {
            if (x[j] < prog.column(j).lower - 1e-7 || x[j] > prog.column(j).upper + 1e-7) return;
        }
        for (int i = 0; i < m; ++i) {
            double v = 0.0;
            for (auto [j, a] : prog.row(i).coeffs) v += a * x[j];
            const auto& r = prog.row(i);
            if (r.sense == RowSense::LE && v > r.rhs + 1e-7) return;
            if (r.sense == RowSense::GE && v < r.rhs - 1e-7) return;
            if (r.sense == RowSense::EQ && std::abs(v - r.rhs) > 1e-7) return;
        }
        double obj = 0.0;
        for (int j = 0; j < n; ++j) obj += prog.column(j).cost * x[j];
        if (!feasible || obj < best) best = obj;
        feasible = true;
    };
    // every vertex of the box-bounded polytope activates n constraints
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == n) {
            Eigen::MatrixXd A(n, n);
            Eigen::VectorXd b(n);
            for (int r = 0; r < n; ++r) {
                A.row(r) = cands[static_cast<std::size_t>(pick[static_cast<std::size_t>(r)])].a;
                b[r] = cands[static_cast<std::size_t>(pick[static_cast<std::size_t>(r)])].b;
            }
            Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
            if (!lu.isInvertible()) return;
            check_point(lu.solve(b));
            return;
        }
        for (int c = from; c < total; ++c) {
            pick[static_cast<std::size_t>(pos)] = c;
            rec(pos + 1, c + 1);
        }
    };
    rec(0, 0);
    return true;
}

bool criterion5(std::string& why) {
    std::mt19937_64 rng(917701);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int m = 2 + static_cast<int>(rng() % 7);
        LpProgram prog;
        for (int j = 0; j < n; ++j) {
            double lo = -unit(rng);
            prog.add_column(2.0 * unit(rng) - 1.0, lo, lo + 0.5 + 1.5 * unit(rng));
        }
        for (int i = 0; i < m; ++i) {
            std::vector<std::pair<int, double>> coeffs;
            for (int j = 0; j < n; ++j) {
                if (unit(rng) < 0.6) coeffs.push_back({j, 4.0 * unit(rng) - 2.0});
            }
            if (coeffs.empty()) coeffs.push_back({static_cast<int>(rng() % n), 1.0});
            RowSense sense = trial % 5 == 0 && i == 0
                                 ? RowSense::EQ
                                 : (rng() % 2 ? RowSense::LE : RowSense::GE);
            prog.add_row(sense, 4.0 * unit(rng) - 2.0, std::move(coeffs));
        }
        LpSolution sol = solve_lp(prog);
        bool feasible = false;
        double best = 0.0;
        brute_lp(prog, feasible, best);
        if (feasible != (sol.status == LpStatus::Optimal)) {
            why = "program " + std::to_string(trial) + ": feasibility verdicts differ";
            return false;
        }
        if (feasible && std::abs(best - sol.objective) > 1e-6) {
            why = "program " + std::to_string(trial) + ": " + format_double(sol.objective) +
                  " vs enumerated " + format_double(best);
            return false;
        }
    }

    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 7);
        FlowNetwork net(n);
        std::vector<std::vector<double>> cap(static_cast<std::size_t>(n),
                                             std::vector<double>(static_cast<std::size_t>(n)));
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v || unit(rng) >= 0.4) continue;
                double c = 2.0 * unit(rng);
                cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = c;
                net.add_arc(u, v, c);
            }
        }
        double brute = std::numeric_limits<double>::infinity();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (!(mask & 1u) || ((mask >> (n - 1)) & 1u)) continue;
            double v = 0.0;
            for (int u = 0; u < n; ++u) {
                for (int w = 0; w < n; ++w) {
                    if (((mask >> u) & 1u) && !((mask >> w) & 1u)) {
                        v += cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
                    }
                }
            }
            brute = std::min(brute, v);
        }
        MinCutResult res = net.min_cut(0, n - 1);
        if (std::abs(res.value - brute) > 1e-9) {
            why = "network " + std::to_string(trial) + ": " + format_double(res.value) +
                  " vs enumerated " + format_double(brute);
            return false;
        }
    }

    for (const char* name : {"instA.sfp", "instB.sfp", "instC.sfp"}) {
        SfpInstance inst = load_instance(std::string(SFP_DATA_DIR) + "/" + name);
        if (inst.edge_count() > 16) continue;
        ExactResult brute = brute_force_optimum(inst);
        ExactResult bnb = branch_and_bound_optimum(inst);
        if (brute.found != bnb.found || (brute.found && brute.value != bnb.value)) {
            why = std::string(name) + ": enumeration " + format_double(brute.value) +
                  " vs branch-and-bound " + format_double(bnb.value);
            return false;
        }
    }
    return true;
}

// ---------- criterion 6: campaign and report pipeline ----------

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool criterion6(std::string& why) {
    const fs::path dir = fs::temp_directory_path() / "sfp_acceptance_campaign";
    fs::remove_all(dir);
    std::string cmd = std::string(SFP_CLI_PATH) +
                      " campaign --grid n=20/35/50,k=2/3,p=0.5,alpha=1.8 --seed 1/2"
                      " --kind uc/dc/edc/sedc/klsvz --time-limit 8 --workers 4 --out " +
                      dir.string() + " > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
        why = "campaign run failed";
        return false;
    }
    cmd = std::string(SFP_CLI_PATH) + " report --out " + dir.string() + " > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
        why = "report run failed";
        return false;
    }
    if (slurp(dir / "solved.csv").find("n,k,kind,") != 0) {
        why = "missing solved-percentage report";
        return false;
    }
    if (slurp(dir / "improvement.svg").find("<svg") == std::string::npos) {
        why = "missing improvement plot";
        return false;
    }
    std::ifstream in(dir / "improvement.csv");
    std::string line;
    std::getline(in, line);
    int seen = 0;
    while (std::getline(in, line)) {
        std::stringstream row(line);
        std::string kind, count, minval;
        std::getline(row, kind, ',');
        std::getline(row, count, ',');
        std::getline(row, minval, ',');
        if (kind == "dc" || kind == "edc" || kind == "sedc" || kind == "klsvz") {
            ++seen;
            if (std::stod(minval) < 1.0 - 1e-6) {
                why = kind + ": improvement factor " + minval + " below one";
                return false;
            }
        }
    }
    if (seen != 4) {
        why = "improvement report misses a kind";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<bool(std::string&)> run;
    };
    std::vector<GridRun> runs;
    const std::vector<Criterion> criteria = {
        {"criterion 1 (golden bound table and integer optima)", criterion1},
        {"criterion 2 (dominance lattice on sixty instances)",
         [&](std::string& why) { return criterion2(runs, why); }},
        {"criterion 3 (bound validity and the factor-two property)",
         [&](std::string& why) { return criterion3(runs, why); }},
        {"criterion 4 (separation oracles vs subset enumeration)", criterion4},
        {"criterion 5 (solver cross-checks)", criterion5},
        {"criterion 6 (campaign and report pipeline)", criterion6},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        std::cout << (ok ? "PASS " : "FAIL ") << c.label << " [" << format_double(now_seconds(start))
                  << "s]";
        if (!ok) std::cout << " -- " << why;
        std::cout << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
