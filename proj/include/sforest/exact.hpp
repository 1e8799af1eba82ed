#ifndef SFOREST_EXACT_HPP
#define SFOREST_EXACT_HPP

#include <vector>

#include "sforest/driver.hpp"
#include "sforest/instance.hpp"

namespace sforest {

/// An edge subset with its feasibility verdict: feasible iff every
/// terminal set lies in one connected component and the subset is acyclic.
struct Forest {
    std::vector<char> edges;  // indicator per edge
    double cost = 0.0;
    bool feasible = false;
};

Forest check_feasible(const SfpInstance& inst, const std::vector<char>& edges);

struct ExactResult {
    double value = 0.0;
    Forest witness;
    bool optimal = false;   // false when a limit was hit or nothing feasible exists
    bool found = false;     // a feasible forest was found
    long long nodes = 0;    // search tree nodes (branch and bound only)
};

/// Exhaustive minimum over all edge subsets; intended for |E| <= 16.
ExactResult brute_force_optimum(const SfpInstance& inst);

/// Depth-first branch and bound on edge inclusion, pruned with the plain
/// cut relaxation under the branching fixings.
ExactResult branch_and_bound_optimum(const SfpInstance& inst, const Limits& limits = {});

/// Dispatches to brute force when |E| <= 16, branch and bound otherwise.
ExactResult integer_optimum(const SfpInstance& inst, const Limits& limits = {});

}  // namespace sforest

#endif
