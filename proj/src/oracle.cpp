#include "qta/oracle.hpp"

#include <algorithm>

#include "qta/error.hpp"
#include "qta/qubo.hpp"

namespace qta {

OracleLedger::OracleLedger(int budget, int max_cluster_size)
    : budget_(budget), max_cluster_size_(max_cluster_size) {
    if (budget < 0) fail(Errc::invalid_argument, "budget must be non-negative");
}

bool OracleLedger::contains(std::span<const int> cluster) const {
    std::vector<int> key(cluster.begin(), cluster.end());
    std::sort(key.begin(), key.end());
    return cache_.contains(key);
}

const SubTour& OracleLedger::solve_cluster(const Instance& inst, std::span<const int> cluster,
                                           Sampler& sampler) {
    const int size = static_cast<int>(cluster.size());
    if (size < kMinClusterSize || size > max_cluster_size_)
        fail(Errc::size, "cluster size " + std::to_string(size) + " outside [" +
                             std::to_string(kMinClusterSize) + ", " +
                             std::to_string(max_cluster_size_) + "]");

    std::vector<int> key(cluster.begin(), cluster.end());
    std::sort(key.begin(), key.end());
    if (auto it = cache_.find(key); it != cache_.end()) {
        ++hits_;
        return it->second;
    }

    if (used_ == budget_)
        fail(Errc::budget_exhausted,
             "oracle budget of " + std::to_string(budget_) + " accesses exhausted");

    QuboProblem q = build_tsp_qubo(inst, key, {}, max_cluster_size_);
    DecodeResult dec = decode(q, sampler.sample(q));
    if (!dec.feasible()) {
        // One retry with a doubled constraint weight; a too-small penalty is
        // the only systematic cause of infeasible samples at these sizes.
        QuboProblem retry = build_tsp_qubo(inst, key, 2.0 * q.penalty_a, max_cluster_size_);
        dec = decode(retry, sampler.sample(retry));
        if (!dec.feasible()) {
            std::string detail;
            for (const auto& v : dec.report.violations) detail += "; " + v;
            fail(Errc::infeasible_sample,
                 "sampler '" + std::string(sampler.name()) +
                     "' produced no feasible assignment after penalty retry" + detail);
        }
    }

    ++misses_;
    ++used_;
    auto [it, inserted] = cache_.emplace(std::move(key), std::move(*dec.tour));
    return it->second;
}

} // namespace qta
