#include "sforest/driver.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

namespace sforest {

namespace {

std::string row_signature(RowSense sense, double rhs, std::vector<std::pair<int, double>> coeffs) {
    std::sort(coeffs.begin(), coeffs.end());
    std::string sig = std::to_string(static_cast<int>(sense)) + ";" + format_double(rhs);
    for (auto [col, a] : coeffs) {
        sig += ";" + std::to_string(col) + ":" + format_double(a);
    }
    return sig;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const char* run_status_name(RunStatus status) {
    switch (status) {
        case RunStatus::Optimal: return "optimal";
        case RunStatus::TimeLimit: return "time-limit";
        case RunStatus::IterationLimit: return "iteration-limit";
        case RunStatus::BuildRefused: return "build-refused";
    }
    return "?";
}

BoundReport solve_relaxation(const SfpInstance& inst, Kind kind, const Limits& limits,
                             const std::string& instance_id) {
    const auto start = std::chrono::steady_clock::now();
    BoundReport report;
    report.instance_id = instance_id;
    report.kind = kind;

    Model model;
    try {
        model = build(inst, kind);
    } catch (const BuildRefused& e) {
        report.status = RunStatus::BuildRefused;
        report.detail = e.what();
        report.wall_time_s = seconds_since(start);
        return report;
    }

    SimplexSolver solver;
    const double tol = solver.config().violation_tol;
    std::unordered_set<std::string> signatures;
    bool have_bound = false;

    report.status = RunStatus::IterationLimit;
    while (true) {
        if (report.rounds >= limits.max_rounds) {
            report.status = RunStatus::IterationLimit;
            break;
        }
        const double remaining = limits.time_limit_s - seconds_since(start);
        if (remaining <= 0) {
            report.status = RunStatus::TimeLimit;
            break;
        }
        solver.set_time_limit(remaining);
        LpSolution sol = have_bound ? solver.resolve(model.lp) : solver.solve(model.lp);
        if (sol.status != LpStatus::Optimal) {
            // relaxations are always feasible and bounded, so this signals the
            // solver's own iteration or time cap; an interrupted minimization
            // overstates the LP value, so only the previous bound stands
            report.status = seconds_since(start) > limits.time_limit_s
                                ? RunStatus::TimeLimit
                                : RunStatus::IterationLimit;
            break;
        }
        ++report.rounds;
        report.bound = std::max(report.bound, sol.objective);
        have_bound = true;

        std::vector<ViolatedCut> cuts = separate_all(inst, model, sol.x, tol);
        if (cuts.empty()) {
            report.status = RunStatus::Optimal;
            break;
        }
        int added = 0;
        for (ViolatedCut& cut : cuts) {
            std::string sig = row_signature(cut.sense, cut.rhs, cut.coeffs);
            if (!signatures.insert(std::move(sig)).second) continue;
            model.lp.add_row(cut.sense, cut.rhs, std::move(cut.coeffs), std::move(cut.name));
            ++added;
        }
        report.cuts_added += added;
        if (added == 0) {
            // every violated row is already in the LP: numerical stall
            report.status = RunStatus::IterationLimit;
            break;
        }
    }
    report.wall_time_s = seconds_since(start);
    return report;
}

Comparison compare(const SfpInstance& inst, const std::vector<Kind>& kinds, const Limits& limits,
                   const std::string& instance_id) {
    Comparison cmp;
    for (Kind kind : kinds) {
        cmp.reports.push_back(solve_relaxation(inst, kind, limits, instance_id));
    }
    auto bound_of = [&](Kind kind) -> const BoundReport* {
        for (const BoundReport& r : cmp.reports) {
            if (r.kind == kind && r.status == RunStatus::Optimal) return &r;
        }
        return nullptr;
    };
    struct Edge {
        Kind weaker;
        Kind stronger;
        bool equality;
    };
    static constexpr Edge kLattice[] = {
        {Kind::UC, Kind::DC, false},   {Kind::DC, Kind::EDC, false},
        {Kind::EDC, Kind::SEDC, false}, {Kind::UC, Kind::KLSVZ, false},
        {Kind::UC, Kind::MR, false},   {Kind::UF, Kind::UC, true},
        {Kind::DF, Kind::DC, true},    {Kind::EDF, Kind::SEDC, true},
    };
    for (const Edge& e : kLattice) {
        DominanceCheck check;
        check.weaker = e.weaker;
        check.stronger = e.stronger;
        check.equality = e.equality;
        const BoundReport* a = bound_of(e.weaker);
        const BoundReport* b = bound_of(e.stronger);
        if (a && b) {
            check.applicable = true;
            check.lhs = a->bound;
            check.rhs = b->bound;
            check.passed = e.equality ? std::abs(a->bound - b->bound) <= 1e-6
                                      : a->bound <= b->bound + 1e-6;
            if (!check.passed) cmp.all_passed = false;
        }
        cmp.audit.push_back(check);
    }
    return cmp;
}

}  // namespace sforest
