#ifndef SFOREST_DRIVER_HPP
#define SFOREST_DRIVER_HPP

#include <string>
#include <vector>

#include "sforest/formulations.hpp"
#include "sforest/separation.hpp"

namespace sforest {

enum class RunStatus { Optimal, TimeLimit, IterationLimit, BuildRefused };

const char* run_status_name(RunStatus status);

struct Limits {
    double time_limit_s = 60.0;
    int max_rounds = 200;
};

/// Result of one cutting-plane run. On a limit hit the bound is the last
/// completed LP optimum (0 when no round finished), which is still a valid
/// lower bound because dropping rows only shrinks the minimum.
struct BoundReport {
    std::string instance_id;
    Kind kind = Kind::UC;
    RunStatus status = RunStatus::Optimal;
    double bound = 0.0;
    int rounds = 0;
    int cuts_added = 0;
    double wall_time_s = 0.0;
    std::string detail;  // refusal message when status is BuildRefused
};

BoundReport solve_relaxation(const SfpInstance& inst, Kind kind, const Limits& limits = {},
                             const std::string& instance_id = {});

/// One audited relation of the dominance lattice between two bounds.
struct DominanceCheck {
    Kind weaker;
    Kind stronger;
    bool equality = false;  // true: bounds must agree; false: weaker <= stronger
    bool applicable = false;  // both runs present with optimal status
    bool passed = true;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct Comparison {
    std::vector<BoundReport> reports;
    std::vector<DominanceCheck> audit;
    bool all_passed = true;  // over applicable checks
};

/// Runs >= 2 kinds on one instance and audits every lattice edge whose two
/// endpoints finished with optimal status.
Comparison compare(const SfpInstance& inst, const std::vector<Kind>& kinds,
                   const Limits& limits = {}, const std::string& instance_id = {});

}  // namespace sforest

#endif
