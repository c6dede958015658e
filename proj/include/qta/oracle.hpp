#pragma once

#include <map>
#include <span>
#include <vector>

#include "qta/instance.hpp"
#include "qta/sampler.hpp"
#include "qta/subtour.hpp"

namespace qta {

inline constexpr int kDefaultBudget = 40;

struct LedgerStats {
    int budget = 0;
    int used = 0;
    long long hits = 0;
    long long misses = 0;
    std::size_t cache_size = 0;
};

/// Metered access to the sub-QUBO solving layer. Every cache miss submits
/// one problem to the sampler and costs exactly one unit of budget; hits are
/// free. Solved partitions are cached forever, keyed by cluster content
/// (sorted city indices), so a cluster is never submitted twice.
///
/// The ledger mutates counters and the cache; confine one ledger to one
/// worker or synchronize externally.
class OracleLedger {
public:
    explicit OracleLedger(int budget, int max_cluster_size = kDefaultMaxClusterSize);

    /// Returns the cached subtour or solves the cluster through `sampler`.
    /// Throws budget-exhausted on a miss with no budget left (the cache
    /// stays usable), and infeasible-sample if the sampler cannot produce a
    /// feasible assignment even after one retry with a doubled penalty.
    const SubTour& solve_cluster(const Instance& inst, std::span<const int> cluster,
                                 Sampler& sampler);

    bool contains(std::span<const int> cluster) const;

    int budget() const { return budget_; }
    int used() const { return used_; }
    long long hit_count() const { return hits_; }
    long long miss_count() const { return misses_; }
    int max_cluster_size() const { return max_cluster_size_; }
    LedgerStats stats() const { return {budget_, used_, hits_, misses_, cache_.size()}; }

private:
    int budget_;
    int max_cluster_size_;
    int used_ = 0;
    long long hits_ = 0;
    long long misses_ = 0;
    std::map<std::vector<int>, SubTour> cache_;
};

} // namespace qta
