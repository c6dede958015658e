#pragma once

#include <vector>

#include "qta/instance.hpp"

namespace qta {

inline constexpr int kDefaultMaxClusterSize = 10;
inline constexpr int kMinClusterSize = 3;

/// Label-based partition: labels[i] in {1..C} is the cluster of city i.
struct PartitionLabeling {
    std::vector<int> labels;
    int num_clusters = 0;
};

/// Build a labeling from a raw label vector; num_clusters = max label.
PartitionLabeling make_labeling(std::vector<int> labels);

/// Throws invalid-labeling naming the violated rule: labels in 1..C, no
/// empty cluster, every cluster size in [3, max_cluster_size].
void validate_labeling(const PartitionLabeling& lab, int max_cluster_size);

/// Disjoint city-index sets covering all cities, ordered by ascending label.
struct ClusterSet {
    std::vector<std::vector<int>> clusters;

    int num_clusters() const { return static_cast<int>(clusters.size()); }
    int num_cities() const;
};

ClusterSet extract_clusters(const PartitionLabeling& lab,
                            int max_cluster_size = kDefaultMaxClusterSize);

/// Recover a labeling from a cluster set (cluster i -> label i+1).
PartitionLabeling labeling_from_clusters(const ClusterSet& cs);

/// Newman-Girvan modularity of the partition over the complete similarity
/// graph with weights w_ij = 1 / (1e-9 + d_ij). In [-1, 1]; higher is better.
double modularity(const Instance& inst, const ClusterSet& cs);

/// Davies-Bouldin index on city coordinates. Non-negative; lower is better.
/// Requires at least two clusters.
double davies_bouldin(const Instance& inst, const ClusterSet& cs);

/// Calinski-Harabasz index on city coordinates. Non-negative; higher is
/// better. Requires 2 <= C < N.
double calinski_harabasz(const Instance& inst, const ClusterSet& cs);

} // namespace qta
