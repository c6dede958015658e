#include "qta/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qta/error.hpp"
#include "qta/merge.hpp"
#include "qta/qubo.hpp"

namespace qta {

const char* to_string(SamplerKind k) {
    switch (k) {
    case SamplerKind::exact: return "exact";
    case SamplerKind::anneal: return "anneal";
    case SamplerKind::remote: return "remote";
    }
    return "?";
}

const char* to_string(InitKind k) {
    switch (k) {
    case InitKind::random: return "random";
    case InitKind::covns: return "covns";
    }
    return "?";
}

std::string QtaResult::log() const {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed;
    for (const IterationRecord& r : history)
        out << "iter=" << r.index << " phase=" << (r.from_initializer ? "init" : "search")
            << " cost=" << r.cost << " best=" << r.incumbent << " used=" << r.used
            << " hits=" << r.hits << " improved=" << (r.improved ? 1 : 0) << "\n";
    out << "end reason=" << termination << " best=" << cost << " used=" << ledger.used
        << " hits=" << ledger.hits << " misses=" << ledger.misses << "\n";
    return out.str();
}

PartitionLabeling insertion_move(const PartitionLabeling& lab, int max_cluster_size, Rng& rng) {
    const int n = static_cast<int>(lab.labels.size());
    const int c = lab.num_clusters;
    if (c < 2) return lab;

    std::vector<int> sizes(c, 0);
    for (int l : lab.labels) ++sizes[l - 1];

    PartitionLabeling out = lab;
    const int attempts = n * c;
    for (int a = 0; a < attempts; ++a) {
        const int city = rng.uniform_int(0, n - 1);
        int label = rng.uniform_int(1, c - 1);
        if (label >= out.labels[city]) ++label;
        const int donor = out.labels[city];
        if (sizes[donor - 1] - 1 < kMinClusterSize || sizes[label - 1] + 1 > max_cluster_size)
            continue;
        out.labels[city] = label;
        return out;
    }
    return out; // no feasible move exists (or none was drawn); unchanged
}

namespace {

std::unique_ptr<Sampler> build_sampler(const QtaConfig& config, std::uint64_t seed) {
    switch (config.sampler) {
    case SamplerKind::exact: return std::make_unique<ExactSampler>();
    case SamplerKind::anneal:
        return std::make_unique<AnnealSampler>(config.reads, config.sweeps, seed);
    case SamplerKind::remote: {
        auto adapter = std::make_unique<RemoteAdapter>();
        if (config.remote_delegate) {
            Sampler* delegate = config.remote_delegate.get();
            adapter->set_delegate([delegate](const QuboProblem& q) { return delegate->sample(q); });
        }
        return adapter;
    }
    }
    fail(Errc::invalid_argument, "unknown sampler kind");
}

struct Evaluation {
    std::vector<int> tour;
    double cost = 0.0;
};

Evaluation evaluate_labeling(const Instance& inst, const PartitionLabeling& lab,
                             OracleLedger& ledger, Sampler& sampler, const QtaConfig& config,
                             Rng& merge_rng) {
    const ClusterSet cs = extract_clusters(lab, config.max_cluster_size);
    std::vector<SubTour> subtours;
    subtours.reserve(cs.clusters.size());
    for (const auto& cluster : cs.clusters)
        subtours.push_back(ledger.solve_cluster(inst, cluster, sampler));

    MergeResult merged;
    if (config.merge_full_sweep || subtours.size() == 1) {
        merged = merge(inst, subtours);
    } else {
        const int initial = merge_rng.uniform_int(0, static_cast<int>(subtours.size()) - 1);
        merged = merge_from(inst, subtours, initial);
    }
    return {std::move(merged.tour), merged.cost};
}

} // namespace

QtaResult run_qta(const Instance& inst, const QtaConfig& config, std::uint64_t seed) {
    Rng rng(seed);
    Rng merge_rng = rng.split(7);
    auto sampler = build_sampler(config, seed);
    OracleLedger ledger(config.budget, config.max_cluster_size);

    // Starting labelings: one per metric from the multiform initializer, or
    // a single random one.
    std::vector<PartitionLabeling> starts;
    if (config.init == InitKind::covns) {
        InitializerConfig icfg = config.initializer;
        icfg.max_cluster_size = config.max_cluster_size;
        for (auto& [metric, lab] : run_initializer(inst, icfg, rng.next()))
            starts.push_back(lab);
    } else {
        starts.push_back(random_labeling(inst, config.max_cluster_size, rng));
    }

    if (config.budget < starts.front().num_clusters)
        fail(Errc::insufficient_budget,
             "budget " + std::to_string(config.budget) + " cannot cover the " +
                 std::to_string(starts.front().num_clusters) + " clusters of the first labeling");

    QtaResult result;
    result.cost = std::numeric_limits<double>::infinity();
    const int cap = config.iteration_cap > 0 ? config.iteration_cap : 10 * config.budget;
    int iteration = 0;
    int search_iterations = 0;
    int non_improving = 0;
    PartitionLabeling current;
    result.termination = "iteration-cap";

    auto record = [&](const Evaluation& eval, bool from_init) {
        const bool improved = eval.cost < result.cost;
        if (improved) {
            result.cost = eval.cost;
            result.tour = eval.tour;
            result.labeling = current;
            non_improving = 0;
        } else {
            ++non_improving;
        }
        result.history.push_back({iteration, from_init, eval.cost, result.cost, ledger.used(),
                                  ledger.hit_count(), improved});
        ++iteration;
    };

    try {
        for (const PartitionLabeling& lab : starts) {
            current = lab;
            record(evaluate_labeling(inst, lab, ledger, *sampler, config, merge_rng), true);
        }
        current = result.labeling;

        while (search_iterations < cap) {
            current = insertion_move(current, config.max_cluster_size, rng);
            record(evaluate_labeling(inst, current, ledger, *sampler, config, merge_rng), false);
            ++search_iterations;
            if (config.restart_after > 0 && non_improving >= config.restart_after) {
                current = result.labeling;
                non_improving = 0;
            }
        }
    } catch (const Error& e) {
        if (e.code() != Errc::budget_exhausted) throw;
        // Abandon the interrupted iteration; the incumbent stands.
        result.termination = "budget-exhausted";
    }

    result.ledger = ledger.stats();
    return result;
}

BaselineResult run_baseline(const Instance& inst, const QtaConfig& config, std::uint64_t seed) {
    if (inst.n > 30)
        fail(Errc::size, "baseline QUBO over " + std::to_string(inst.n) +
                             " cities exceeds the N=30 local-search limit");

    const QuboProblem q = build_tsp_qubo(inst, [&] {
        std::vector<int> all(inst.n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }(), {}, inst.n);

    const int v = q.num_vars;
    const int n = q.n;

    // Dense symmetric view for O(1) flip deltas.
    std::vector<double> diag(v, 0.0), w(static_cast<std::size_t>(v) * v, 0.0);
    for (int i = 0; i < v; ++i) {
        diag[i] = q.qv(i, i);
        for (int k = i + 1; k < v; ++k) {
            w[static_cast<std::size_t>(i) * v + k] = q.qv(i, k);
            w[static_cast<std::size_t>(k) * v + i] = q.qv(i, k);
        }
    }

    const int iters_per_restart = std::max(150, 3 * v);
    const int tenure = 10 + v / 10;

    BaselineResult best;
    best.cost = std::numeric_limits<double>::infinity();

    Rng base(seed);
    std::vector<std::uint8_t> z(v);
    std::vector<double> field(v);
    std::vector<int> tabu_until(v);

    for (int restart = 0; restart < config.baseline_restarts; ++restart) {
        Rng rng = base.split(restart + 1);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::fill(z.begin(), z.end(), 0);
        for (int p = 0; p < n; ++p) z[q.var_index(perm[p], p)] = 1;

        for (int i = 0; i < v; ++i) {
            double f = diag[i];
            const double* row = w.data() + static_cast<std::size_t>(i) * v;
            for (int j = 0; j < v; ++j)
                if (z[j]) f += row[j];
            field[i] = f;
        }
        double energy = q.energy(z);
        double best_energy = energy;
        std::vector<std::uint8_t> best_z = z;
        std::fill(tabu_until.begin(), tabu_until.end(), -1);

        for (int it = 0; it < iters_per_restart; ++it) {
            int move = -1;
            double move_delta = std::numeric_limits<double>::infinity();
            for (int i = 0; i < v; ++i) {
                const double delta = (z[i] ? -1.0 : 1.0) * field[i];
                const bool tabu = tabu_until[i] > it;
                if (tabu && energy + delta >= best_energy) continue; // aspiration only
                if (delta < move_delta) {
                    move_delta = delta;
                    move = i;
                }
            }
            if (move < 0) break;
            const double sign = z[move] ? -1.0 : 1.0;
            z[move] ^= 1;
            energy += move_delta;
            const double* row = w.data() + static_cast<std::size_t>(move) * v;
            for (int j = 0; j < v; ++j) field[j] += sign * row[j];
            tabu_until[move] = it + tenure;
            if (energy < best_energy) {
                best_energy = energy;
                best_z = z;
            }
        }

        const DecodeResult dec = decode(q, best_z);
        if (dec.feasible() && dec.tour->cost < best.cost) {
            best.cost = dec.tour->cost;
            best.tour = dec.tour->order;
        }
        ++best.access_equivalent;
    }

    if (!std::isfinite(best.cost))
        fail(Errc::infeasible_sample, "baseline found no feasible assignment");
    return best;
}

} // namespace qta
