#pragma once

#include <vector>

#include "qta/instance.hpp"
#include "qta/subtour.hpp"

namespace qta {

/// One complete candidate route produced by the merge search. The route
/// lists all N cities once, starting at the orphan node of the initial
/// cluster's broken arc; the closing arc back to the first city is implicit
/// and included in the cost.
struct CycleLeaf {
    std::vector<int> route;
    double cost = 0.0;
};

struct MergeResult {
    std::vector<int> tour;
    double cost = 0.0;
    int initial_cluster = 0;
};

/// All candidate routes for one choice of initial cluster. For an initial
/// cluster of size s and C clusters total there are exactly
/// s * 2 * 2^(C-1) leaves: s broken arcs, 2 orientations, and 2 traversal
/// directions per subsequently entered cluster. Bridges are not branched:
/// each one greedily targets the nearest city of any unvisited cluster
/// (ties broken by lowest city index).
std::vector<CycleLeaf> merge_leaves(const Instance& inst, const std::vector<SubTour>& subtours,
                                    int initial_cluster);

/// Best leaf for a fixed initial cluster.
MergeResult merge_from(const Instance& inst, const std::vector<SubTour>& subtours,
                       int initial_cluster);

/// Greedy recursive composition of the subtours into one Hamiltonian cycle.
/// Sweeps every cluster as the initial cluster and returns the cheapest
/// candidate overall; equal costs fall back to the lexicographically
/// smallest route.
MergeResult merge(const Instance& inst, const std::vector<SubTour>& subtours);

} // namespace qta
