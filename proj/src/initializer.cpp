#include "qta/initializer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qta/error.hpp"

namespace qta {

namespace {

constexpr double kUndefinedScore = -std::numeric_limits<double>::infinity();
constexpr int kShakeRetries = 50;
constexpr int kLocalSearchPassCap = 30;

std::vector<int> cluster_sizes(const PartitionLabeling& lab) {
    std::vector<int> sizes(lab.num_clusters, 0);
    for (int l : lab.labels) ++sizes[l - 1];
    return sizes;
}

// Drop empty labels and renumber 1..C, preserving ascending label order.
void compact_labels(PartitionLabeling& lab) {
    std::vector<int> remap(lab.num_clusters + 1, 0);
    for (int l : lab.labels) remap[l] = 1;
    int next = 0;
    for (int l = 1; l <= lab.num_clusters; ++l)
        if (remap[l]) remap[l] = ++next;
    for (int& l : lab.labels) l = remap[l];
    lab.num_clusters = next;
}

bool can_relabel(const std::vector<int>& sizes, int from_label, int to_label, int max_size) {
    return sizes[from_label - 1] > kMinClusterSize && sizes[to_label - 1] < max_size;
}

// First-improvement local search over single-city relabels, scanning
// (city, label) pairs in lexicographic order until a full pass finds nothing.
void local_search_relabel(Individual& ind, const Instance& inst, Metric metric, int max_size) {
    const int n = static_cast<int>(ind.lab.labels.size());
    for (int pass = 0; pass < kLocalSearchPassCap; ++pass) {
        bool improved = false;
        std::vector<int> sizes = cluster_sizes(ind.lab);
        for (int city = 0; city < n; ++city) {
            const int old_label = ind.lab.labels[city];
            for (int label = 1; label <= ind.lab.num_clusters; ++label) {
                if (label == old_label) continue;
                if (!can_relabel(sizes, old_label, label, max_size)) continue;
                ind.lab.labels[city] = label;
                const double s = oriented_score(inst, ind.lab, metric, max_size);
                if (s > ind.score) {
                    ind.score = s;
                    --sizes[old_label - 1];
                    ++sizes[label - 1];
                    improved = true;
                    break;
                }
                ind.lab.labels[city] = old_label;
            }
        }
        if (!improved) return;
    }
}

bool shake(PartitionLabeling& lab, const Instance& inst, int k, int max_size, Rng& rng) {
    const int n = static_cast<int>(lab.labels.size());
    std::vector<int> sizes = cluster_sizes(lab);

    if (k == 1) {
        for (int attempt = 0; attempt < kShakeRetries; ++attempt) {
            const int city = rng.uniform_int(0, n - 1);
            if (lab.num_clusters < 2) return false;
            int label = rng.uniform_int(1, lab.num_clusters - 1);
            if (label >= lab.labels[city]) ++label;
            if (!can_relabel(sizes, lab.labels[city], label, max_size)) continue;
            lab.labels[city] = label;
            return true;
        }
        return false;
    }
    if (k == 2) {
        for (int attempt = 0; attempt < kShakeRetries; ++attempt) {
            const int a = rng.uniform_int(0, n - 1);
            const int b = rng.uniform_int(0, n - 1);
            if (lab.labels[a] == lab.labels[b]) continue;
            std::swap(lab.labels[a], lab.labels[b]);
            return true;
        }
        return false;
    }
    if (k == 3) {
        const bool try_split = rng.uniform01() < 0.5;
        if (try_split) {
            // Split a random cluster of size >= 6 into two halves of >= 3.
            for (int attempt = 0; attempt < kShakeRetries; ++attempt) {
                const int label = rng.uniform_int(1, lab.num_clusters);
                if (sizes[label - 1] < 2 * kMinClusterSize) continue;
                std::vector<int> members;
                for (int c = 0; c < n; ++c)
                    if (lab.labels[c] == label) members.push_back(c);
                rng.shuffle(members);
                const int keep = rng.uniform_int(kMinClusterSize,
                                                 static_cast<int>(members.size()) - kMinClusterSize);
                const int new_label = lab.num_clusters + 1;
                for (std::size_t m = keep; m < members.size(); ++m)
                    lab.labels[members[m]] = new_label;
                lab.num_clusters = new_label;
                return true;
            }
            return false;
        }
        // Merge a random cluster into its centroid-nearest neighbour.
        if (lab.num_clusters < 2) return false;
        for (int attempt = 0; attempt < kShakeRetries; ++attempt) {
            const int label = rng.uniform_int(1, lab.num_clusters);
            std::vector<double> cx(lab.num_clusters, 0.0), cy(lab.num_clusters, 0.0);
            for (int c = 0; c < n; ++c) {
                cx[lab.labels[c] - 1] += inst.xs[c];
                cy[lab.labels[c] - 1] += inst.ys[c];
            }
            int partner = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int other = 1; other <= lab.num_clusters; ++other) {
                if (other == label) continue;
                if (sizes[label - 1] + sizes[other - 1] > max_size) continue;
                const double dx = cx[label - 1] / sizes[label - 1] - cx[other - 1] / sizes[other - 1];
                const double dy = cy[label - 1] / sizes[label - 1] - cy[other - 1] / sizes[other - 1];
                const double d2 = dx * dx + dy * dy;
                if (d2 < best) {
                    best = d2;
                    partner = other;
                }
            }
            if (partner < 0) continue;
            for (int c = 0; c < n; ++c)
                if (lab.labels[c] == label) lab.labels[c] = partner;
            compact_labels(lab);
            return true;
        }
        return false;
    }
    fail(Errc::invalid_argument, "neighborhood index must be in {1, 2, 3}");
}

} // namespace

const char* to_string(Metric m) {
    switch (m) {
    case Metric::modularity: return "modularity";
    case Metric::davies_bouldin: return "davies-bouldin";
    case Metric::calinski_harabasz: return "calinski-harabasz";
    }
    return "?";
}

double oriented_score(const Instance& inst, const PartitionLabeling& lab, Metric metric,
                      int max_cluster_size) {
    const ClusterSet cs = extract_clusters(lab, max_cluster_size);
    try {
        switch (metric) {
        case Metric::modularity: return modularity(inst, cs);
        case Metric::davies_bouldin: return -davies_bouldin(inst, cs);
        case Metric::calinski_harabasz: return calinski_harabasz(inst, cs);
        }
    } catch (const Error& e) {
        if (e.code() == Errc::undefined_metric) return kUndefinedScore;
        throw;
    }
    return kUndefinedScore;
}

PartitionLabeling random_labeling_with_clusters(const Instance& inst, int num_clusters,
                                                int max_cluster_size, Rng& rng) {
    const int n = inst.n;
    if (n < 3) fail(Errc::degenerate_instance, "instance needs at least 3 cities");
    if (max_cluster_size < kMinClusterSize)
        fail(Errc::invalid_argument, "max cluster size below minimum cluster size");
    if (num_clusters < 1 || num_clusters * kMinClusterSize > n ||
        num_clusters * max_cluster_size < n)
        fail(Errc::invalid_argument,
             "no feasible labeling with " + std::to_string(num_clusters) + " clusters");

    PartitionLabeling lab;
    lab.num_clusters = num_clusters;
    lab.labels.resize(n);
    for (int& l : lab.labels) l = rng.uniform_int(1, num_clusters);

    // Repair: feed undersized clusters from the largest, drain oversized
    // ones into the smallest. Each move lowers the total violation.
    std::vector<int> sizes = cluster_sizes(lab);
    for (;;) {
        int under = -1, over = -1;
        for (int c = 0; c < num_clusters; ++c) {
            if (sizes[c] < kMinClusterSize && under < 0) under = c;
            if (sizes[c] > max_cluster_size && over < 0) over = c;
        }
        if (under < 0 && over < 0) break;

        int from = -1, to = -1;
        if (under >= 0) {
            to = under;
            for (int c = 0; c < num_clusters; ++c)
                if (sizes[c] > kMinClusterSize && (from < 0 || sizes[c] > sizes[from])) from = c;
        } else {
            from = over;
            for (int c = 0; c < num_clusters; ++c)
                if (sizes[c] < max_cluster_size && (to < 0 || sizes[c] < sizes[to])) to = c;
        }
        std::vector<int> movable;
        for (int c = 0; c < n; ++c)
            if (lab.labels[c] == from + 1) movable.push_back(c);
        const int pick = movable[rng.uniform_int(0, static_cast<int>(movable.size()) - 1)];
        lab.labels[pick] = to + 1;
        --sizes[from];
        ++sizes[to];
    }
    return lab;
}

PartitionLabeling random_labeling(const Instance& inst, int max_cluster_size, Rng& rng) {
    const int n = inst.n;
    if (n < 3) fail(Errc::degenerate_instance, "instance needs at least 3 cities");
    if (max_cluster_size < kMinClusterSize)
        fail(Errc::invalid_argument, "max cluster size below minimum cluster size");
    const int c_min = (n + max_cluster_size - 1) / max_cluster_size;
    const int c_max = n / kMinClusterSize;
    if (c_min > c_max)
        fail(Errc::invalid_argument, "no feasible cluster count for n=" + std::to_string(n) +
                                         ", max size " + std::to_string(max_cluster_size));
    const int c = rng.uniform_int(c_min, c_max);
    return random_labeling_with_clusters(inst, c, max_cluster_size, rng);
}

void vns_step(Subpopulation& sub, const Instance& inst, int neighborhood_index, Rng& rng) {
    if (neighborhood_index < 1 || neighborhood_index > 3)
        fail(Errc::invalid_argument, "neighborhood index must be in {1, 2, 3}");
    for (Individual& ind : sub.individuals) {
        Individual trial = ind;
        if (!shake(trial.lab, inst, neighborhood_index, sub.max_cluster_size, rng)) continue;
        trial.score = oriented_score(inst, trial.lab, sub.metric, sub.max_cluster_size);
        local_search_relabel(trial, inst, sub.metric, sub.max_cluster_size);
        if (trial.score > ind.score) ind = std::move(trial);
        if (ind.score > sub.best.score) sub.best = ind;
    }
}

void migrate(std::vector<Subpopulation>& subs, const Instance& inst, Rng&) {
    if (subs.size() < 2) return;
    std::vector<Individual> migrants;
    migrants.reserve(subs.size());
    for (const Subpopulation& s : subs) migrants.push_back(s.best);

    for (std::size_t i = 0; i < subs.size(); ++i) {
        Subpopulation& target = subs[(i + 1) % subs.size()];
        std::size_t worst = 0;
        for (std::size_t j = 1; j < target.individuals.size(); ++j)
            if (target.individuals[j].score < target.individuals[worst].score) worst = j;

        Individual arriving;
        arriving.lab = migrants[i].lab;
        arriving.score = oriented_score(inst, arriving.lab, target.metric, target.max_cluster_size);
        target.individuals[worst] = arriving;
        if (arriving.score > target.best.score) target.best = arriving;
    }
}

std::map<Metric, PartitionLabeling> run_initializer(const Instance& inst,
                                                    const InitializerConfig& config,
                                                    std::uint64_t seed) {
    const Metric metrics[] = {Metric::modularity, Metric::davies_bouldin,
                              Metric::calinski_harabasz};
    const Rng base(seed);

    std::vector<Subpopulation> subs;
    std::vector<Rng> streams;
    for (std::size_t i = 0; i < std::size(metrics); ++i) {
        Rng rng = base.split(i + 1);
        Subpopulation sub;
        sub.metric = metrics[i];
        sub.max_cluster_size = config.max_cluster_size;
        sub.best.score = kUndefinedScore;
        for (int p = 0; p < config.population_size; ++p) {
            Individual ind;
            ind.lab = random_labeling(inst, config.max_cluster_size, rng);
            ind.score = oriented_score(inst, ind.lab, sub.metric, config.max_cluster_size);
            if (sub.individuals.empty() || ind.score > sub.best.score) sub.best = ind;
            sub.individuals.push_back(std::move(ind));
        }
        subs.push_back(std::move(sub));
        streams.push_back(rng);
    }

    Rng migration_rng = base.split(99);
    for (int g = 1; g <= config.generations; ++g) {
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (int k = 1; k <= 3; ++k) vns_step(subs[i], inst, k, streams[i]);
        if (config.migration_period > 0 && g % config.migration_period == 0)
            migrate(subs, inst, migration_rng);
    }

    std::map<Metric, PartitionLabeling> out;
    for (const Subpopulation& s : subs) out.emplace(s.metric, s.best.lab);
    return out;
}

} // namespace qta
