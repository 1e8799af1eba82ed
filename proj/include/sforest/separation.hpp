#ifndef SFOREST_SEPARATION_HPP
#define SFOREST_SEPARATION_HPP

#include <array>
#include <string>
#include <vector>

#include "sforest/formulations.hpp"

namespace sforest {

/// A violated lazy constraint found at an LP point. The row references
/// columns of the model that was queried; re-evaluating it on that point
/// gives rhs - violation.
struct ViolatedCut {
    LazyFamily family;
    std::array<int, 3> index{{-1, -1, -1}};  // generating tuple, -1 padded
    std::vector<char> node_set;              // indicator of S over the nodes
    RowSense sense = RowSense::GE;
    double rhs = 0.0;
    std::vector<std::pair<int, double>> coeffs;
    std::string name;
    double violation = 0.0;
};

/// Runs the exact oracle of one lazy family at the given point, returning
/// at most one most-violated cut per generating index tuple. Oracles are
/// pure; networks are rebuilt per call.
std::vector<ViolatedCut> separate_family(const SfpInstance& inst, const Model& model,
                                         LazyFamily family, const std::vector<double>& point,
                                         double tol);

/// All lazy families declared by the model, concatenated in declaration order.
std::vector<ViolatedCut> separate_all(const SfpInstance& inst, const Model& model,
                                      const std::vector<double>& point, double tol);

}  // namespace sforest

#endif
