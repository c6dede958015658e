#include "qta/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qta/error.hpp"

namespace qta {

namespace {
constexpr double kSimilarityEps = 1e-9;

double sq(double v) { return v * v; }
} // namespace

PartitionLabeling make_labeling(std::vector<int> labels) {
    PartitionLabeling lab;
    lab.num_clusters = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    lab.labels = std::move(labels);
    return lab;
}

void validate_labeling(const PartitionLabeling& lab, int max_cluster_size) {
    const int c = lab.num_clusters;
    if (c < 1) fail(Errc::invalid_labeling, "labeling has no clusters (C >= 1 required)");
    std::vector<int> sizes(c, 0);
    for (std::size_t i = 0; i < lab.labels.size(); ++i) {
        const int l = lab.labels[i];
        if (l < 1 || l > c)
            fail(Errc::invalid_labeling, "city " + std::to_string(i) + " has label " +
                                             std::to_string(l) + " outside 1.." + std::to_string(c));
        ++sizes[l - 1];
    }
    for (int k = 0; k < c; ++k) {
        if (sizes[k] == 0)
            fail(Errc::invalid_labeling, "cluster " + std::to_string(k + 1) + " is empty");
        if (sizes[k] < kMinClusterSize)
            fail(Errc::invalid_labeling, "cluster " + std::to_string(k + 1) + " has size " +
                                             std::to_string(sizes[k]) + " < minimum " +
                                             std::to_string(kMinClusterSize));
        if (sizes[k] > max_cluster_size)
            fail(Errc::invalid_labeling, "cluster " + std::to_string(k + 1) + " has size " +
                                             std::to_string(sizes[k]) + " > maximum " +
                                             std::to_string(max_cluster_size));
    }
}

int ClusterSet::num_cities() const {
    int n = 0;
    for (const auto& c : clusters) n += static_cast<int>(c.size());
    return n;
}

ClusterSet extract_clusters(const PartitionLabeling& lab, int max_cluster_size) {
    validate_labeling(lab, max_cluster_size);
    ClusterSet cs;
    cs.clusters.resize(lab.num_clusters);
    for (std::size_t i = 0; i < lab.labels.size(); ++i)
        cs.clusters[lab.labels[i] - 1].push_back(static_cast<int>(i));
    return cs;
}

PartitionLabeling labeling_from_clusters(const ClusterSet& cs) {
    PartitionLabeling lab;
    lab.num_clusters = cs.num_clusters();
    lab.labels.assign(cs.num_cities(), 0);
    for (int k = 0; k < cs.num_clusters(); ++k)
        for (int city : cs.clusters[k]) lab.labels[city] = k + 1;
    return lab;
}

double modularity(const Instance& inst, const ClusterSet& cs) {
    const int n = inst.n;
    // Complete similarity graph: w_ij = 1/(eps + d_ij), no self loops.
    std::vector<double> strength(n, 0.0);
    double total = 0.0; // sum over i<j
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double w = 1.0 / (kSimilarityEps + inst(i, j));
            strength[i] += w;
            strength[j] += w;
            total += w;
        }
    }
    double q = 0.0;
    for (const auto& cluster : cs.clusters) {
        double internal = 0.0;
        for (std::size_t a = 0; a < cluster.size(); ++a)
            for (std::size_t b = a + 1; b < cluster.size(); ++b)
                internal += 1.0 / (kSimilarityEps + inst(cluster[a], cluster[b]));
        double degree = 0.0;
        for (int city : cluster) degree += strength[city];
        q += internal / total - sq(degree / (2.0 * total));
    }
    return q;
}

double davies_bouldin(const Instance& inst, const ClusterSet& cs) {
    const int c = cs.num_clusters();
    if (c < 2) fail(Errc::undefined_metric, "Davies-Bouldin needs at least 2 clusters");

    std::vector<double> cx(c, 0.0), cy(c, 0.0), scatter(c, 0.0);
    for (int k = 0; k < c; ++k) {
        for (int city : cs.clusters[k]) {
            cx[k] += inst.xs[city];
            cy[k] += inst.ys[city];
        }
        cx[k] /= static_cast<double>(cs.clusters[k].size());
        cy[k] /= static_cast<double>(cs.clusters[k].size());
        for (int city : cs.clusters[k])
            scatter[k] += std::sqrt(sq(inst.xs[city] - cx[k]) + sq(inst.ys[city] - cy[k]));
        scatter[k] /= static_cast<double>(cs.clusters[k].size());
    }
    double sum = 0.0;
    for (int i = 0; i < c; ++i) {
        double worst = 0.0;
        for (int j = 0; j < c; ++j) {
            if (j == i) continue;
            const double centroid_dist = std::sqrt(sq(cx[i] - cx[j]) + sq(cy[i] - cy[j]));
            worst = std::max(worst, (scatter[i] + scatter[j]) / centroid_dist);
        }
        sum += worst;
    }
    return sum / static_cast<double>(c);
}

double calinski_harabasz(const Instance& inst, const ClusterSet& cs) {
    const int c = cs.num_clusters();
    const int n = cs.num_cities();
    if (c < 2 || n <= c)
        fail(Errc::undefined_metric, "Calinski-Harabasz needs 2 <= C < N");

    double gx = 0.0, gy = 0.0;
    for (int i = 0; i < inst.n; ++i) {
        gx += inst.xs[i];
        gy += inst.ys[i];
    }
    gx /= inst.n;
    gy /= inst.n;

    double between = 0.0, within = 0.0;
    for (const auto& cluster : cs.clusters) {
        double cx = 0.0, cy = 0.0;
        for (int city : cluster) {
            cx += inst.xs[city];
            cy += inst.ys[city];
        }
        cx /= static_cast<double>(cluster.size());
        cy /= static_cast<double>(cluster.size());
        between += static_cast<double>(cluster.size()) * (sq(cx - gx) + sq(cy - gy));
        for (int city : cluster) within += sq(inst.xs[city] - cx) + sq(inst.ys[city] - cy);
    }
    if (within == 0.0) return std::numeric_limits<double>::infinity();
    return (between / (c - 1)) / (within / (n - c));
}

} // namespace qta
