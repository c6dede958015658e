#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qta/clustering.hpp"
#include "qta/instance.hpp"
#include "qta/subtour.hpp"

namespace qta {

/// Position-based TSP QUBO over one cluster: binary variable x_{v,p} means
/// "city block v sits at tour position p"; variable index = v * n + p.
/// Coefficients are stored dense upper-triangular (diagonal = linear terms).
struct QuboProblem {
    int n = 0;        ///< cluster size
    int num_vars = 0; ///< n * n
    std::vector<int> city_order;      ///< block -> city index in the instance
    std::vector<double> coeffs;       ///< num_vars x num_vars, entries only at i <= j
    std::vector<double> cluster_dist; ///< n x n distances between cluster cities
    double penalty_a = 0.0;
    double scale_b = 1.0;
    double offset = 0.0; ///< feasible z: energy(z) == scale_b * tour_cost + offset

    double& q(int i, int j) { return coeffs[static_cast<std::size_t>(i) * num_vars + j]; }
    double qv(int i, int j) const { return coeffs[static_cast<std::size_t>(i) * num_vars + j]; }
    int var_index(int block, int pos) const { return block * n + pos; }
    double d(int a, int b) const { return cluster_dist[static_cast<std::size_t>(a) * n + b]; }

    /// z^T Q z for a 0/1 assignment of length num_vars.
    double energy(std::span<const std::uint8_t> z) const;
};

/// Build the QUBO for the TSP restricted to `cluster`. With no explicit
/// penalty the constraint weight is A = max(2 * B * max_d, 1) with B = 1,
/// which keeps every constraint violation costlier than any tour saving.
QuboProblem build_tsp_qubo(const Instance& inst, std::span<const int> cluster,
                           std::optional<double> penalty_a = {},
                           int max_cluster_size = kDefaultMaxClusterSize);

struct InfeasibilityReport {
    std::vector<std::string> violations;
    int violated_city_rows = 0;
    int violated_position_columns = 0;
};

struct DecodeResult {
    std::optional<SubTour> tour;
    InfeasibilityReport report;

    bool feasible() const { return tour.has_value(); }
};

/// Decode a bitstring back to a SubTour, or report which one-hot
/// constraints it violates.
DecodeResult decode(const QuboProblem& q, std::span<const std::uint8_t> z);

/// Spin formulation: E(s) = sum h_i s_i + sum_{i<j} J_ij s_i s_j, with
/// s = 2z - 1 and E(s) + offset == z^T Q z for every assignment.
struct IsingProblem {
    int num_vars = 0;
    std::vector<double> h;
    std::vector<double> j; ///< dense upper-triangular couplers
    double offset = 0.0;

    double coupler(int a, int b) const { return j[static_cast<std::size_t>(a) * num_vars + b]; }
    double energy(std::span<const int> spins) const;
};

IsingProblem qubo_to_ising(const QuboProblem& q);

/// Plain-text coordinate list ("i j value" per line, header with num_vars
/// and offset) for interoperability with external QUBO samplers.
std::string qubo_to_coordinate_list(const QuboProblem& q);

} // namespace qta
