#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "qta/qubo.hpp"

namespace qta {

/// A QUBO sampler returns the best 0/1 assignment it can find. Samplers are
/// pure given their configuration and may run concurrently on distinct
/// problems.
class Sampler {
public:
    virtual ~Sampler() = default;
    virtual std::vector<std::uint8_t> sample(const QuboProblem& q) = 0;
    virtual std::string_view name() const = 0;
};

/// Ground-truth assignment: exhaustive QUBO enumeration for n <= 4 clusters,
/// permutation enumeration for n <= 10. Throws a size error above that.
std::vector<std::uint8_t> exact_sample(const QuboProblem& q);

/// Simulated annealing over single-bit flips. Geometric temperature schedule
/// from max|Q| down to 1e-3 * min nonzero |Q|, one restart per read, each
/// started from a random tour assignment. Deterministic per seed.
std::vector<std::uint8_t> anneal_sample(const QuboProblem& q, int reads, int sweeps,
                                        std::uint64_t seed);

class ExactSampler final : public Sampler {
public:
    std::vector<std::uint8_t> sample(const QuboProblem& q) override { return exact_sample(q); }
    std::string_view name() const override { return "exact"; }
};

class AnnealSampler final : public Sampler {
public:
    AnnealSampler(int reads, int sweeps, std::uint64_t seed)
        : reads_(reads), sweeps_(sweeps), seed_(seed) {}

    // The per-call seed mixes in the cluster content, so results for a given
    // cluster do not depend on submission order.
    std::vector<std::uint8_t> sample(const QuboProblem& q) override;
    std::string_view name() const override { return "anneal"; }

private:
    int reads_;
    int sweeps_;
    std::uint64_t seed_;
};

/// Placeholder with the same contract as the other samplers; a real annealer
/// client can be slotted in as the delegate without touching solver logic.
class RemoteAdapter final : public Sampler {
public:
    using Delegate = std::function<std::vector<std::uint8_t>(const QuboProblem&)>;

    RemoteAdapter() = default;
    explicit RemoteAdapter(Delegate d) : delegate_(std::move(d)) {}

    void set_delegate(Delegate d) { delegate_ = std::move(d); }
    bool configured() const { return static_cast<bool>(delegate_); }

    std::vector<std::uint8_t> sample(const QuboProblem& q) override;
    std::string_view name() const override { return "remote"; }

private:
    Delegate delegate_;
};

} // namespace qta
