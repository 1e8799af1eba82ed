#include "sforest/lp.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sforest/instance.hpp"  // format_double

namespace sforest {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

int LpProgram::add_column(double cost, double lower, double upper, std::string name) {
    if (lower > upper) throw std::invalid_argument("column with lower > upper");
    if (name.empty()) name = "c" + std::to_string(cols_.size());
    cols_.push_back({cost, lower, upper, std::move(name)});
    return static_cast<int>(cols_.size()) - 1;
}

int LpProgram::add_row(RowSense sense, double rhs, std::vector<std::pair<int, double>> coeffs,
                       std::string name) {
    std::sort(coeffs.begin(), coeffs.end());
    std::vector<std::pair<int, double>> merged;
    for (const auto& [j, a] : coeffs) {
        if (j < 0 || j >= column_count()) {
            throw std::invalid_argument("row references unknown column " + std::to_string(j));
        }
        if (!merged.empty() && merged.back().first == j) {
            merged.back().second += a;
        } else {
            merged.push_back({j, a});
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& p) { return p.second == 0.0; }),
                 merged.end());
    rows_.push_back({sense, rhs, std::move(merged), std::move(name)});
    return static_cast<int>(rows_.size()) - 1;
}

void LpProgram::set_bounds(int col, double lower, double upper) {
    if (col < 0 || col >= column_count()) throw std::invalid_argument("unknown column");
    if (lower > upper) throw std::invalid_argument("column with lower > upper");
    cols_[static_cast<std::size_t>(col)].lower = lower;
    cols_[static_cast<std::size_t>(col)].upper = upper;
}

namespace {

enum VarState : int { kAtLower = 0, kAtUpper = 1, kBasic = 2 };

struct Eta {
    int row;
    std::vector<std::pair<int, double>> w;  // the pivoted-in column B^-1 a_j
    double pivot;                           // w[row]
};

using SpMat = Eigen::SparseMatrix<double>;

// Working representation of one solve. Internal column indices: structural
// columns first, then one slack per row, then artificials.
struct Work {
    const LpProgram* prog;
    LpConfig cfg;
    int n = 0;  // structural columns
    int m = 0;  // rows

    std::vector<double> lb, ub;   // per internal column
    std::vector<int> vstate;      // per internal column
    std::vector<int> art_row;     // artificial k lives in this row
    std::vector<double> art_sign;

    std::vector<int> basis;  // internal column basic in each row
    std::vector<double> xb;  // value of that column

    mutable Eigen::SparseLU<SpMat> lu;  // transpose() is non-const in Eigen 3.4
    bool factorized = false;
    std::vector<Eta> etas;
    int degenerate_run = 0;
    int iterations = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    int total_cols() const { return n + m + static_cast<int>(art_row.size()); }

    bool is_artificial(int j) const { return j >= n + m; }

    template <typename Fn>
    void for_col(int j, Fn&& fn) const {
        if (j < n) {
            const auto& row_list = col_entries[static_cast<std::size_t>(j)];
            for (const auto& [i, a] : row_list) fn(i, a);
        } else if (j < n + m) {
            fn(j - n, 1.0);
        } else {
            int k = j - n - m;
            fn(art_row[static_cast<std::size_t>(k)], art_sign[static_cast<std::size_t>(k)]);
        }
    }

    // structural columns in CSC-ish form, built once per solve
    std::vector<std::vector<std::pair<int, double>>> col_entries;

    double value_of(int j) const {
        switch (vstate[static_cast<std::size_t>(j)]) {
            case kAtLower:
                return std::isfinite(lb[static_cast<std::size_t>(j)])
                           ? lb[static_cast<std::size_t>(j)]
                           : 0.0;
            case kAtUpper:
                return std::isfinite(ub[static_cast<std::size_t>(j)])
                           ? ub[static_cast<std::size_t>(j)]
                           : 0.0;
            default:
                throw std::logic_error("value_of called on a basic column");
        }
    }

    double cost_of(int j, bool phase1) const {
        if (phase1) return is_artificial(j) ? 1.0 : 0.0;
        if (j < n) return prog->column(j).cost;
        return 0.0;
    }

    void factorize() {
        if (m == 0) {  // SparseLU cannot compute an empty system
            factorized = true;
            etas.clear();
            return;
        }
        std::vector<Eigen::Triplet<double>> trip;
        for (int r = 0; r < m; ++r) {
            for_col(basis[static_cast<std::size_t>(r)],
                    [&](int i, double a) { trip.push_back({i, r, a}); });
        }
        SpMat B(m, m);
        B.setFromTriplets(trip.begin(), trip.end());
        lu.compute(B);
        if (lu.info() != Eigen::Success) {
            throw std::runtime_error("singular basis matrix");
        }
        factorized = true;
        etas.clear();
    }

    Eigen::VectorXd ftran(Eigen::VectorXd v) const {
        if (m == 0) return v;
        Eigen::VectorXd r = lu.solve(v);
        for (const Eta& e : etas) {
            double pr = r[e.row] / e.pivot;
            if (pr != 0.0) {
                for (const auto& [i, wi] : e.w) {
                    if (i != e.row) r[i] -= wi * pr;
                }
            }
            r[e.row] = pr;
        }
        return r;
    }

    Eigen::VectorXd btran(Eigen::VectorXd v) const {
        if (m == 0) return v;
        for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
            double acc = v[it->row];
            for (const auto& [i, wi] : it->w) {
                if (i != it->row) acc -= wi * v[i];
            }
            v[it->row] = acc / it->pivot;
        }
        return lu.transpose().solve(v);
    }

    // xb = B^-1 (b - N x_N), recomputed from scratch
    void recompute_xb() {
        Eigen::VectorXd r(m);
        for (int i = 0; i < m; ++i) r[i] = prog->row(i).rhs;
        for (int j = 0; j < total_cols(); ++j) {
            if (vstate[static_cast<std::size_t>(j)] == kBasic) continue;
            double v = value_of(j);
            if (v == 0.0) continue;
            for_col(j, [&](int i, double a) { r[i] -= a * v; });
        }
        Eigen::VectorXd sol = ftran(std::move(r));
        xb.assign(static_cast<std::size_t>(m), 0.0);
        for (int i = 0; i < m; ++i) xb[static_cast<std::size_t>(i)] = sol[i];
    }

    Eigen::VectorXd duals(bool phase1) const {
        Eigen::VectorXd cb(m);
        for (int i = 0; i < m; ++i) cb[i] = cost_of(basis[static_cast<std::size_t>(i)], phase1);
        return btran(std::move(cb));
    }

    bool fixed(int j) const {
        return lb[static_cast<std::size_t>(j)] == ub[static_cast<std::size_t>(j)] &&
               std::isfinite(lb[static_cast<std::size_t>(j)]);
    }
};

}  // namespace

struct SimplexSolver::WarmState {
    int ncols = 0;
    int nrows = 0;
    // basis entry per row: kind 0 structural, 1 slack, 2 pinned artificial
    std::vector<int> basis_kind;
    std::vector<int> basis_index;
    std::vector<double> basis_art_sign;
    std::vector<char> col_at_upper;    // nonbasic structural state
    std::vector<char> slack_at_upper;  // nonbasic slack state
    std::vector<double> x;             // structural values at the stored basis
};

SimplexSolver::SimplexSolver(LpConfig config) : config_(config) {}
SimplexSolver::~SimplexSolver() = default;
SimplexSolver::SimplexSolver(SimplexSolver&&) noexcept = default;
SimplexSolver& SimplexSolver::operator=(SimplexSolver&&) noexcept = default;

LpSolution SimplexSolver::solve(const LpProgram& prog) { return run(prog, false); }

LpSolution SimplexSolver::resolve(const LpProgram& prog) {
    if (!warm_) return run(prog, false);
    if (prog.column_count() != warm_->ncols || prog.row_count() < warm_->nrows) {
        throw std::invalid_argument("resolve expects the previous program plus appended rows");
    }
    return run(prog, true);
}

namespace {

void slack_bounds(RowSense sense, double& lo, double& hi) {
    switch (sense) {
        case RowSense::LE:
            lo = 0.0;
            hi = kInf;
            break;
        case RowSense::GE:
            lo = -kInf;
            hi = 0.0;
            break;
        case RowSense::EQ:
            lo = 0.0;
            hi = 0.0;
            break;
    }
}

// Install a basic variable for a fresh row: the slack when its bounds can
// absorb the residual, else an artificial holding the violation.
void install_row_basis(Work& w, int i, double activity, const LpConfig& cfg) {
    const double resid = w.prog->row(i).rhs - activity;
    const int slack = w.n + i;
    const double lo = w.lb[static_cast<std::size_t>(slack)];
    const double hi = w.ub[static_cast<std::size_t>(slack)];
    if (resid >= lo - cfg.feasibility_tol && resid <= hi + cfg.feasibility_tol) {
        w.vstate[static_cast<std::size_t>(slack)] = kBasic;
        w.basis[static_cast<std::size_t>(i)] = slack;
        w.xb[static_cast<std::size_t>(i)] = std::clamp(resid, lo, hi);
        return;
    }
    // slack parks at the bound nearest the residual
    double parked;
    if (resid > hi) {
        w.vstate[static_cast<std::size_t>(slack)] = kAtUpper;
        parked = hi;
    } else {
        w.vstate[static_cast<std::size_t>(slack)] =
            std::isfinite(lo) ? kAtLower : kAtUpper;
        parked = std::isfinite(lo) ? lo : hi;
    }
    const double gap = resid - parked;
    w.art_row.push_back(i);
    w.art_sign.push_back(gap >= 0.0 ? 1.0 : -1.0);
    w.lb.push_back(0.0);
    w.ub.push_back(kInf);
    w.vstate.push_back(kBasic);
    const int art = w.total_cols() - 1;
    w.basis[static_cast<std::size_t>(i)] = art;
    w.xb[static_cast<std::size_t>(i)] = std::abs(gap);
}

struct PhaseResult {
    enum { Optimal, Unbounded, IterationLimit } outcome;
};

PhaseResult run_phase(Work& w, bool phase1) {
    const LpConfig& cfg = w.cfg;
    // pricing tolerance: tighter than this and eta-accumulated noise in the
    // reduced costs keeps degenerate pivots alive forever on larger bases
    const double dtol = 1e-8;
    while (true) {
        if (w.iterations >= cfg.max_iterations) return {PhaseResult::IterationLimit};
        if (w.has_deadline && (w.iterations & 127) == 0 &&
            std::chrono::steady_clock::now() > w.deadline) {
            return {PhaseResult::IterationLimit};
        }
        if (!w.factorized || static_cast<int>(w.etas.size()) >= cfg.refactor_interval) {
            w.factorize();
            w.recompute_xb();
        }

        Eigen::VectorXd y = w.duals(phase1);

        const bool bland = w.degenerate_run >= cfg.bland_trigger;
        int enter = -1;
        int dir = 0;
        double best = dtol;
        for (int j = 0; j < w.total_cols(); ++j) {
            if (w.vstate[static_cast<std::size_t>(j)] == kBasic) continue;
            if (w.fixed(j)) continue;
            double d = w.cost_of(j, phase1);
            w.for_col(j, [&](int i, double a) { d -= y[i] * a; });
            const bool lower_side = w.vstate[static_cast<std::size_t>(j)] == kAtLower;
            const bool free_var = !std::isfinite(w.lb[static_cast<std::size_t>(j)]) &&
                                  !std::isfinite(w.ub[static_cast<std::size_t>(j)]);
            int cand_dir = 0;
            double viol = 0.0;
            if (free_var) {
                if (d < -dtol) {
                    cand_dir = 1;
                    viol = -d;
                } else if (d > dtol) {
                    cand_dir = -1;
                    viol = d;
                }
            } else if (lower_side && d < -dtol) {
                cand_dir = 1;
                viol = -d;
            } else if (!lower_side && d > dtol) {
                cand_dir = -1;
                viol = d;
            }
            if (cand_dir == 0) continue;
            if (bland) {
                enter = j;
                dir = cand_dir;
                break;
            }
            if (viol > best) {
                best = viol;
                enter = j;
                dir = cand_dir;
            }
        }
        if (enter < 0) return {PhaseResult::Optimal};

        Eigen::VectorXd col = Eigen::VectorXd::Zero(w.m);
        w.for_col(enter, [&](int i, double a) { col[i] += a; });
        Eigen::VectorXd wcol = w.ftran(std::move(col));

        // ratio test over the basic columns plus the entering bound flip
        double t = kInf;
        if (std::isfinite(w.lb[static_cast<std::size_t>(enter)]) &&
            std::isfinite(w.ub[static_cast<std::size_t>(enter)])) {
            t = w.ub[static_cast<std::size_t>(enter)] - w.lb[static_cast<std::size_t>(enter)];
        }
        int leave = -1;
        double leave_abs = 0.0;
        // ratio test against slightly expanded bounds: degenerate pivots then
        // take a tiny positive step instead of stalling on long plateaus; the
        // drift stays below the feasibility tolerance and is squeezed out at
        // every refactorization. Under Bland's rule the expansion is off and
        // ties pick the lowest variable index, which is what makes the rule
        // terminate.
        const double expand = bland ? 0.0 : 1e-9;
        for (int i = 0; i < w.m; ++i) {
            const double wi = wcol[i];
            if (std::abs(wi) <= cfg.pivot_tol) continue;
            const int bj = w.basis[static_cast<std::size_t>(i)];
            const double delta = dir * wi;
            double cap;
            if (delta > 0.0) {
                const double lo = w.lb[static_cast<std::size_t>(bj)];
                if (!std::isfinite(lo)) continue;
                cap = (w.xb[static_cast<std::size_t>(i)] - (lo - expand)) / delta;
            } else {
                const double hi = w.ub[static_cast<std::size_t>(bj)];
                if (!std::isfinite(hi)) continue;
                cap = (w.xb[static_cast<std::size_t>(i)] - (hi + expand)) / delta;
            }
            if (cap < 0.0) cap = 0.0;
            const bool tie = cap < t + 1e-12;
            const bool better =
                bland ? (leave < 0 || bj < w.basis[static_cast<std::size_t>(leave)])
                      : std::abs(wi) > leave_abs;
            if (cap < t - 1e-12 || (tie && better)) {
                t = cap;
                leave = i;
                leave_abs = std::abs(wi);
            }
        }

        if (!std::isfinite(t)) {
            if (phase1) throw std::runtime_error("unbounded auxiliary problem");
            return {PhaseResult::Unbounded};
        }

        ++w.iterations;
        // expansion steps on a plateau are ~1e-9, so anything below 1e-7
        // counts as stalling for the Bland trigger
        w.degenerate_run = t < 1e-7 ? w.degenerate_run + 1 : 0;

        for (int i = 0; i < w.m; ++i) {
            w.xb[static_cast<std::size_t>(i)] -= dir * t * wcol[i];
        }
        if (leave < 0) {
            // entering column just flips to its other bound
            w.vstate[static_cast<std::size_t>(enter)] =
                w.vstate[static_cast<std::size_t>(enter)] == kAtLower ? kAtUpper : kAtLower;
            continue;
        }
        const int out = w.basis[static_cast<std::size_t>(leave)];
        const double wi = wcol[leave];
        w.vstate[static_cast<std::size_t>(out)] = dir * wi > 0.0 ? kAtLower : kAtUpper;
        const double enter_value = w.value_of(enter) + dir * t;
        w.vstate[static_cast<std::size_t>(enter)] = kBasic;
        w.basis[static_cast<std::size_t>(leave)] = enter;
        w.xb[static_cast<std::size_t>(leave)] = enter_value;

        Eta eta;
        eta.row = leave;
        eta.pivot = wi;
        for (int i = 0; i < w.m; ++i) {
            if (wcol[i] != 0.0) eta.w.push_back({i, wcol[i]});
        }
        w.etas.push_back(std::move(eta));
    }
}

double phase_objective(const Work& w, bool phase1) {
    double obj = 0.0;
    for (int j = 0; j < w.total_cols(); ++j) {
        const double c = w.cost_of(j, phase1);
        if (c == 0.0) continue;
        obj += c * (w.vstate[static_cast<std::size_t>(j)] == kBasic
                        ? 0.0  // collected below from xb
                        : w.value_of(j));
    }
    for (int i = 0; i < w.m; ++i) {
        const double c = w.cost_of(w.basis[static_cast<std::size_t>(i)], phase1);
        if (c != 0.0) obj += c * w.xb[static_cast<std::size_t>(i)];
    }
    return obj;
}

// largest bound or row violation of the current point
double max_violation(const Work& w, const std::vector<double>& x_full) {
    double worst = 0.0;
    for (int j = 0; j < w.n + w.m; ++j) {
        const double v = x_full[static_cast<std::size_t>(j)];
        if (std::isfinite(w.lb[static_cast<std::size_t>(j)])) {
            worst = std::max(worst, w.lb[static_cast<std::size_t>(j)] - v);
        }
        if (std::isfinite(w.ub[static_cast<std::size_t>(j)])) {
            worst = std::max(worst, v - w.ub[static_cast<std::size_t>(j)]);
        }
    }
    for (int i = 0; i < w.m; ++i) {
        double act = x_full[static_cast<std::size_t>(w.n + i)];
        for (const auto& [j, a] : w.prog->row(i).coeffs) {
            act += a * x_full[static_cast<std::size_t>(j)];
        }
        worst = std::max(worst, std::abs(act - w.prog->row(i).rhs));
    }
    return worst;
}

std::vector<double> extract_point(const Work& w) {
    std::vector<double> x(static_cast<std::size_t>(w.n + w.m), 0.0);
    for (int j = 0; j < w.n + w.m; ++j) {
        if (w.vstate[static_cast<std::size_t>(j)] != kBasic) {
            x[static_cast<std::size_t>(j)] = w.value_of(j);
        }
    }
    for (int i = 0; i < w.m; ++i) {
        const int bj = w.basis[static_cast<std::size_t>(i)];
        if (bj < w.n + w.m) x[static_cast<std::size_t>(bj)] = w.xb[static_cast<std::size_t>(i)];
    }
    return x;
}

}  // namespace

LpSolution SimplexSolver::run(const LpProgram& prog, bool warm) {
    Work w;
    w.prog = &prog;
    w.cfg = config_;
    if (config_.time_limit_s > 0) {
        w.has_deadline = true;
        w.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(config_.time_limit_s));
    }
    w.n = prog.column_count();
    w.m = prog.row_count();

    w.col_entries.assign(static_cast<std::size_t>(w.n), {});
    for (int i = 0; i < w.m; ++i) {
        for (const auto& [j, a] : prog.row(i).coeffs) {
            w.col_entries[static_cast<std::size_t>(j)].push_back({i, a});
        }
    }

    w.lb.resize(static_cast<std::size_t>(w.n + w.m));
    w.ub.resize(static_cast<std::size_t>(w.n + w.m));
    for (int j = 0; j < w.n; ++j) {
        w.lb[static_cast<std::size_t>(j)] = prog.column(j).lower;
        w.ub[static_cast<std::size_t>(j)] = prog.column(j).upper;
    }
    for (int i = 0; i < w.m; ++i) {
        slack_bounds(prog.row(i).sense, w.lb[static_cast<std::size_t>(w.n + i)],
                     w.ub[static_cast<std::size_t>(w.n + i)]);
    }
    w.vstate.assign(static_cast<std::size_t>(w.n + w.m), kAtLower);
    w.basis.assign(static_cast<std::size_t>(w.m), -1);
    w.xb.assign(static_cast<std::size_t>(w.m), 0.0);

    std::vector<double> x0(static_cast<std::size_t>(w.n), 0.0);
    int first_fresh_row = 0;

    if (warm) {
        for (int j = 0; j < w.n; ++j) {
            w.vstate[static_cast<std::size_t>(j)] =
                warm_->col_at_upper[static_cast<std::size_t>(j)] ? kAtUpper : kAtLower;
        }
        for (int i = 0; i < warm_->nrows; ++i) {
            w.vstate[static_cast<std::size_t>(w.n + i)] =
                warm_->slack_at_upper[static_cast<std::size_t>(i)] ? kAtUpper : kAtLower;
        }
        for (int i = 0; i < warm_->nrows; ++i) {
            int bj;
            switch (warm_->basis_kind[static_cast<std::size_t>(i)]) {
                case 0:
                    bj = warm_->basis_index[static_cast<std::size_t>(i)];
                    break;
                case 1:
                    bj = w.n + warm_->basis_index[static_cast<std::size_t>(i)];
                    break;
                default: {
                    w.art_row.push_back(warm_->basis_index[static_cast<std::size_t>(i)]);
                    w.art_sign.push_back(warm_->basis_art_sign[static_cast<std::size_t>(i)]);
                    w.lb.push_back(0.0);
                    w.ub.push_back(0.0);  // pinned: only keeps a redundant row nonsingular
                    w.vstate.push_back(kBasic);
                    bj = w.total_cols() - 1;
                    break;
                }
            }
            if (bj < w.n + w.m) w.vstate[static_cast<std::size_t>(bj)] = kBasic;
            w.basis[static_cast<std::size_t>(i)] = bj;
        }
        x0 = warm_->x;
        first_fresh_row = warm_->nrows;
    } else {
        for (int j = 0; j < w.n; ++j) {
            const double lo = w.lb[static_cast<std::size_t>(j)];
            const double hi = w.ub[static_cast<std::size_t>(j)];
            if (std::isfinite(lo)) {
                w.vstate[static_cast<std::size_t>(j)] = kAtLower;
            } else {
                w.vstate[static_cast<std::size_t>(j)] = kAtUpper;  // value hi, or 0 if free
            }
            x0[static_cast<std::size_t>(j)] =
                std::isfinite(lo) ? lo : (std::isfinite(hi) ? hi : 0.0);
        }
    }

    bool need_phase1 = false;
    for (int i = first_fresh_row; i < w.m; ++i) {
        double act = 0.0;
        for (const auto& [j, a] : prog.row(i).coeffs) {
            act += a * x0[static_cast<std::size_t>(j)];
        }
        const int before = w.total_cols();
        install_row_basis(w, i, act, config_);
        if (w.total_cols() > before && w.xb[static_cast<std::size_t>(i)] > config_.feasibility_tol) {
            need_phase1 = true;
        }
    }

    w.factorize();
    w.recompute_xb();
    if (!warm) {
        // a cold start may still be infeasible at the slack basis
        for (int i = 0; i < w.m && !need_phase1; ++i) {
            const int bj = w.basis[static_cast<std::size_t>(i)];
            if (w.is_artificial(bj) && w.xb[static_cast<std::size_t>(i)] > config_.feasibility_tol) {
                need_phase1 = true;
            }
        }
    }

    LpSolution result;

    if (need_phase1) {
        PhaseResult pr = run_phase(w, true);
        if (pr.outcome == PhaseResult::IterationLimit) {
            result.status = LpStatus::IterationLimit;
            result.iterations = w.iterations;
            return result;
        }
        if (phase_objective(w, true) > config_.feasibility_tol) {
            result.status = LpStatus::Infeasible;
            result.iterations = w.iterations;
            return result;
        }
    }
    // artificials stay pinned at zero from here on
    for (std::size_t k = 0; k < w.art_row.size(); ++k) {
        w.ub[static_cast<std::size_t>(w.n + w.m) + k] = 0.0;
    }

    PhaseResult pr = run_phase(w, false);
    result.iterations = w.iterations;
    if (pr.outcome == PhaseResult::Unbounded) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    // verify before reporting optimal; retry once from a fresh factorization
    std::vector<double> point = extract_point(w);
    if (pr.outcome == PhaseResult::Optimal &&
        max_violation(w, point) > 10.0 * config_.feasibility_tol) {
        w.factorize();
        w.recompute_xb();
        pr = run_phase(w, false);
        result.iterations = w.iterations;
        point = extract_point(w);
        if (max_violation(w, point) > 10.0 * config_.feasibility_tol) {
            pr.outcome = PhaseResult::IterationLimit;
        }
    }

    result.status =
        pr.outcome == PhaseResult::Optimal ? LpStatus::Optimal : LpStatus::IterationLimit;
    result.x.assign(point.begin(), point.begin() + w.n);
    result.objective = 0.0;
    for (int j = 0; j < w.n; ++j) {
        // clamp tiny numerical drift of basic variables into the box
        double& v = result.x[static_cast<std::size_t>(j)];
        v = std::clamp(v, prog.column(j).lower, prog.column(j).upper);
        result.objective += prog.column(j).cost * v;
    }

    if (result.status == LpStatus::Optimal) {
        auto ws = std::make_unique<WarmState>();
        ws->ncols = w.n;
        ws->nrows = w.m;
        ws->basis_kind.resize(static_cast<std::size_t>(w.m));
        ws->basis_index.resize(static_cast<std::size_t>(w.m));
        ws->basis_art_sign.assign(static_cast<std::size_t>(w.m), 0.0);
        for (int i = 0; i < w.m; ++i) {
            const int bj = w.basis[static_cast<std::size_t>(i)];
            if (bj < w.n) {
                ws->basis_kind[static_cast<std::size_t>(i)] = 0;
                ws->basis_index[static_cast<std::size_t>(i)] = bj;
            } else if (bj < w.n + w.m) {
                ws->basis_kind[static_cast<std::size_t>(i)] = 1;
                ws->basis_index[static_cast<std::size_t>(i)] = bj - w.n;
            } else {
                const int k = bj - w.n - w.m;
                ws->basis_kind[static_cast<std::size_t>(i)] = 2;
                ws->basis_index[static_cast<std::size_t>(i)] =
                    w.art_row[static_cast<std::size_t>(k)];
                ws->basis_art_sign[static_cast<std::size_t>(i)] =
                    w.art_sign[static_cast<std::size_t>(k)];
            }
        }
        ws->col_at_upper.resize(static_cast<std::size_t>(w.n));
        for (int j = 0; j < w.n; ++j) {
            ws->col_at_upper[static_cast<std::size_t>(j)] =
                w.vstate[static_cast<std::size_t>(j)] == kAtUpper;
        }
        ws->slack_at_upper.resize(static_cast<std::size_t>(w.m));
        for (int i = 0; i < w.m; ++i) {
            ws->slack_at_upper[static_cast<std::size_t>(i)] =
                w.vstate[static_cast<std::size_t>(w.n + i)] == kAtUpper;
        }
        ws->x = result.x;
        warm_ = std::move(ws);
    } else {
        warm_.reset();
    }
    return result;
}

LpSolution solve_lp(const LpProgram& prog, const LpConfig& config) {
    SimplexSolver solver(config);
    return solver.solve(prog);
}

namespace {

std::string col_name(const LpProgram& prog, int j) {
    const auto& name = prog.column(j).name;
    return name.empty() ? "c" + std::to_string(j) : name;
}

void append_terms(std::string& out, const LpProgram& prog,
                  const std::vector<std::pair<int, double>>& terms) {
    bool first = true;
    for (const auto& [j, a] : terms) {
        if (!first) out += " + ";
        first = false;
        out += format_double(a) + " " + col_name(prog, j);
    }
    if (first) out += "0";
}

}  // namespace

std::string export_lp(const LpProgram& prog) {
    std::string out = "minimize\n obj: ";
    std::vector<std::pair<int, double>> obj;
    for (int j = 0; j < prog.column_count(); ++j) {
        if (prog.column(j).cost != 0.0) obj.push_back({j, prog.column(j).cost});
    }
    append_terms(out, prog, obj);
    out += "\nsubject to\n";
    for (int i = 0; i < prog.row_count(); ++i) {
        const auto& row = prog.row(i);
        out += " " + (row.name.empty() ? "r" + std::to_string(i) : row.name) + ": ";
        append_terms(out, prog, row.coeffs);
        switch (row.sense) {
            case RowSense::LE:
                out += " <= ";
                break;
            case RowSense::GE:
                out += " >= ";
                break;
            case RowSense::EQ:
                out += " = ";
                break;
        }
        out += format_double(row.rhs) + "\n";
    }
    out += "bounds\n";
    for (int j = 0; j < prog.column_count(); ++j) {
        const auto& col = prog.column(j);
        out += " ";
        if (!std::isfinite(col.lower) && !std::isfinite(col.upper)) {
            out += col_name(prog, j) + " free";
        } else if (!std::isfinite(col.lower)) {
            out += col_name(prog, j) + " <= " + format_double(col.upper);
        } else if (!std::isfinite(col.upper)) {
            out += col_name(prog, j) + " >= " + format_double(col.lower);
        } else {
            out += format_double(col.lower) + " <= " + col_name(prog, j) + " <= " +
                   format_double(col.upper);
        }
        out += "\n";
    }
    out += "end\n";
    return out;
}

}  // namespace sforest
