#pragma once

#include <utility>
#include <vector>

namespace qta {

/// Closed tour over one cluster's cities.
struct SubTour {
    std::vector<int> cluster; ///< member cities, sorted ascending
    std::vector<int> order;   ///< cyclic visiting order (permutation of cluster)
    double cost = 0.0;

    /// The |cluster| undirected arcs of the cycle, as (min, max) pairs.
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            int a = order[k];
            int b = order[(k + 1) % order.size()];
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
        return out;
    }
};

} // namespace qta
