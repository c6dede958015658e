#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qta/clustering.hpp"
#include "qta/instance.hpp"
#include "qta/rng.hpp"

namespace qta {

enum class Metric { modularity, davies_bouldin, calinski_harabasz };

const char* to_string(Metric m);

/// Score a labeling under one clustering metric, oriented so that higher is
/// always better (Davies-Bouldin is negated). Labelings a metric cannot
/// judge (e.g. a single cluster for DB/CH) score -infinity.
double oriented_score(const Instance& inst, const PartitionLabeling& lab, Metric metric,
                      int max_cluster_size = kDefaultMaxClusterSize);

struct Individual {
    PartitionLabeling lab;
    double score = 0.0; ///< oriented score, higher is better
};

/// One VNS population optimizing the partition under a single metric.
struct Subpopulation {
    Metric metric = Metric::modularity;
    std::vector<Individual> individuals;
    Individual best;
    int max_cluster_size = kDefaultMaxClusterSize;
};

struct InitializerConfig {
    int population_size = 10;
    int generations = 50;
    int migration_period = 10;
    int max_cluster_size = kDefaultMaxClusterSize;
};

/// Uniformly random feasible labeling: C is drawn from
/// [ceil(N / max_cluster_size), floor(N / 3)] and memberships are repaired
/// until every cluster size lies in [3, max_cluster_size].
PartitionLabeling random_labeling(const Instance& inst, int max_cluster_size, Rng& rng);

/// Same, with the cluster count fixed.
PartitionLabeling random_labeling_with_clusters(const Instance& inst, int num_clusters,
                                                int max_cluster_size, Rng& rng);

/// One VNS round on every individual: shake with neighbourhood k, then
/// first-improvement local search over single-city relabels; an individual
/// is replaced only when the result improves it. Neighbourhoods:
///   k=1 relabel one city, k=2 swap the labels of two cities in different
///   clusters, k=3 split a cluster / merge two centroid-adjacent clusters.
void vns_step(Subpopulation& sub, const Instance& inst, int neighborhood_index, Rng& rng);

/// Ring migration: each subpopulation's incumbent replaces the worst
/// individual of the next subpopulation (re-scored under the receiving
/// metric). No-op with fewer than two subpopulations.
void migrate(std::vector<Subpopulation>& subs, const Instance& inst, Rng& rng);

/// Run the full multiform initializer and return the best labeling found
/// per metric. Deterministic for a given seed and config.
std::map<Metric, PartitionLabeling> run_initializer(const Instance& inst,
                                                    const InitializerConfig& config,
                                                    std::uint64_t seed);

} // namespace qta
