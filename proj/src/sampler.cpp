#include "qta/sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "qta/error.hpp"
#include "qta/rng.hpp"

namespace qta {

namespace {

constexpr int kQuboEnumLimit = 4;  // 2^(n*n) assignments
constexpr int kPermEnumLimit = 10; // (n-1)! tours

// Dense symmetric view of the upper-triangular coefficients, for O(1) flip
// deltas and O(V) field updates.
struct DenseQubo {
    int v = 0;
    std::vector<double> diag;
    std::vector<double> w; // v x v, zero diagonal

    explicit DenseQubo(const QuboProblem& q) : v(q.num_vars), diag(q.num_vars, 0.0) {
        w.assign(static_cast<std::size_t>(v) * v, 0.0);
        for (int i = 0; i < v; ++i) {
            diag[i] = q.qv(i, i);
            for (int k = i + 1; k < v; ++k) {
                const double c = q.qv(i, k);
                w[static_cast<std::size_t>(i) * v + k] = c;
                w[static_cast<std::size_t>(k) * v + i] = c;
            }
        }
    }

    const double* row(int i) const { return w.data() + static_cast<std::size_t>(i) * v; }
};

std::vector<std::uint8_t> encode_order(const QuboProblem& q, const std::vector<int>& blocks) {
    std::vector<std::uint8_t> z(q.num_vars, 0);
    for (int p = 0; p < q.n; ++p) z[q.var_index(blocks[p], p)] = 1;
    return z;
}

std::vector<std::uint8_t> exact_sample_qubo_enum(const QuboProblem& q) {
    const int v = q.num_vars;
    const DenseQubo dq(q);

    std::vector<std::uint8_t> z(v, 0), best(v, 0);
    std::vector<double> field(dq.diag);
    double energy = 0.0;
    double best_energy = 0.0;

    // Gray-code walk: step t flips bit ctz(t), so each assignment is one
    // flip away from the previous.
    const std::uint64_t total = 1ULL << v;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int i = std::countr_zero(t);
        const double delta = (z[i] ? -1.0 : 1.0) * field[i];
        const double sign = z[i] ? -1.0 : 1.0;
        z[i] ^= 1;
        energy += delta;
        const double* row = dq.row(i);
        for (int j = 0; j < v; ++j) field[j] += sign * row[j];
        if (energy < best_energy) {
            best_energy = energy;
            best = z;
        }
    }
    return best;
}

std::vector<std::uint8_t> exact_sample_perm_enum(const QuboProblem& q) {
    const int n = q.n;
    // Rotation degeneracy: block 0 can always sit at position 0.
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);

    std::vector<int> best_blocks;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = q.d(0, rest.front()) + q.d(rest.back(), 0);
        for (int p = 0; p + 1 < n - 1; ++p) cost += q.d(rest[p], rest[p + 1]);
        if (cost < best_cost) {
            best_cost = cost;
            best_blocks = rest;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));

    std::vector<int> blocks;
    blocks.reserve(n);
    blocks.push_back(0);
    blocks.insert(blocks.end(), best_blocks.begin(), best_blocks.end());
    return encode_order(q, blocks);
}

} // namespace

std::vector<std::uint8_t> exact_sample(const QuboProblem& q) {
    if (q.n <= kQuboEnumLimit) return exact_sample_qubo_enum(q);
    if (q.n <= kPermEnumLimit) return exact_sample_perm_enum(q);
    fail(Errc::size, "cluster size " + std::to_string(q.n) + " exceeds exact enumeration limit " +
                         std::to_string(kPermEnumLimit));
}

std::vector<std::uint8_t> anneal_sample(const QuboProblem& q, int reads, int sweeps,
                                        std::uint64_t seed) {
    if (reads < 1 || sweeps < 1)
        fail(Errc::invalid_argument, "anneal sampler needs reads >= 1 and sweeps >= 1");
    const int v = q.num_vars;
    const int n = q.n;
    const DenseQubo dq(q);

    double max_abs = 0.0;
    double min_abs = std::numeric_limits<double>::infinity();
    for (int i = 0; i < v; ++i)
        for (int k = i; k < v; ++k) {
            const double a = std::abs(q.qv(i, k));
            if (a == 0.0) continue;
            max_abs = std::max(max_abs, a);
            min_abs = std::min(min_abs, a);
        }
    if (max_abs == 0.0) {
        // Degenerate all-zero problem: any tour assignment is optimal.
        std::vector<int> ident(n);
        std::iota(ident.begin(), ident.end(), 0);
        return encode_order(q, ident);
    }
    const double t_hot = max_abs;
    const double t_cold = 1e-3 * min_abs;
    const double decay = sweeps > 1 ? std::pow(t_cold / t_hot, 1.0 / (sweeps - 1)) : 1.0;

    Rng base(seed);
    std::vector<std::uint8_t> z(v), best(v);
    std::vector<double> field(v);
    double best_energy = std::numeric_limits<double>::infinity();

    for (int read = 0; read < reads; ++read) {
        Rng rng = base.split(static_cast<std::uint64_t>(read) + 1);

        // Restart from a random tour so every read begins feasible.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::fill(z.begin(), z.end(), 0);
        for (int p = 0; p < n; ++p) z[q.var_index(perm[p], p)] = 1;

        for (int i = 0; i < v; ++i) {
            double f = dq.diag[i];
            const double* row = dq.row(i);
            for (int j = 0; j < v; ++j)
                if (z[j]) f += row[j];
            field[i] = f;
        }
        double energy = q.energy(z);
        if (energy < best_energy) {
            best_energy = energy;
            best = z;
        }

        double temp = t_hot;
        for (int sweep = 0; sweep < sweeps; ++sweep, temp *= decay) {
            for (int i = 0; i < v; ++i) {
                const double delta = (z[i] ? -1.0 : 1.0) * field[i];
                if (delta > 0.0 && rng.uniform01() >= std::exp(-delta / temp)) continue;
                const double sign = z[i] ? -1.0 : 1.0;
                z[i] ^= 1;
                energy += delta;
                const double* row = dq.row(i);
                for (int j = 0; j < v; ++j) field[j] += sign * row[j];
                if (energy < best_energy) {
                    best_energy = energy;
                    best = z;
                }
            }
        }
    }
    return best;
}

std::vector<std::uint8_t> AnnealSampler::sample(const QuboProblem& q) {
    // FNV-1a over the cluster content.
    std::uint64_t h = 1469598103934665603ULL;
    for (int city : q.city_order) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(city));
        h *= 1099511628211ULL;
    }
    return anneal_sample(q, reads_, sweeps_, seed_ ^ h);
}

std::vector<std::uint8_t> RemoteAdapter::sample(const QuboProblem& q) {
    if (!delegate_)
        fail(Errc::not_configured, "remote sampler invoked without a configured delegate");
    return delegate_(q);
}

} // namespace qta
