#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qta/clustering.hpp"
#include "qta/initializer.hpp"
#include "qta/instance.hpp"
#include "qta/oracle.hpp"
#include "qta/rng.hpp"
#include "qta/sampler.hpp"

namespace qta {

enum class SamplerKind { exact, anneal, remote };
enum class InitKind { random, covns };

const char* to_string(SamplerKind k);
const char* to_string(InitKind k);

struct QtaConfig {
    int budget = kDefaultBudget;
    int max_cluster_size = kDefaultMaxClusterSize;
    SamplerKind sampler = SamplerKind::anneal;
    int reads = 50;
    int sweeps = 1000;
    InitKind init = InitKind::covns;
    int iteration_cap = 0;        ///< 0 -> 10 * budget
    bool merge_full_sweep = true; ///< false: one random initial cluster per merge
    int restart_after = 0;        ///< >0: reset current to incumbent after K non-improving iterations
    InitializerConfig initializer;
    std::shared_ptr<Sampler> remote_delegate; ///< backs SamplerKind::remote
    int baseline_restarts = 200;
};

struct IterationRecord {
    int index = 0;
    bool from_initializer = false;
    double cost = 0.0;      ///< cost of the tour evaluated this iteration
    double incumbent = 0.0; ///< best cost after this iteration
    int used = 0;
    long long hits = 0;
    bool improved = false;
};

struct QtaResult {
    PartitionLabeling labeling; ///< labeling behind the incumbent tour
    std::vector<int> tour;
    double cost = 0.0;
    std::vector<IterationRecord> history;
    LedgerStats ledger;
    std::string termination; ///< "budget-exhausted" or "iteration-cap"

    /// Line-oriented run log (one line per iteration plus a trailer).
    std::string log() const;
};

/// Reassign one uniformly chosen city to a different uniformly chosen
/// cluster; draws violating size bounds are redrawn up to N*C times, after
/// which the labeling is returned unchanged.
PartitionLabeling insertion_move(const PartitionLabeling& lab, int max_cluster_size, Rng& rng);

/// The full solver loop: initial labelings (multiform initializer or one
/// random labeling), then repeatedly solve clusters through the metered
/// oracle, merge, keep strict improvements, and perturb, until the access
/// budget is exhausted or the iteration cap is reached.
QtaResult run_qta(const Instance& inst, const QtaConfig& config, std::uint64_t seed);

struct BaselineResult {
    std::vector<int> tour;
    double cost = 0.0;
    int access_equivalent = 0; ///< tabu restart rounds executed
};

/// Whole-problem comparison heuristic ("qbsolv-approximation"): one QUBO
/// over all N cities solved by restarted tabu search over bit flips. Counts
/// restart rounds as its access equivalent. N <= 30.
BaselineResult run_baseline(const Instance& inst, const QtaConfig& config, std::uint64_t seed);

} // namespace qta
