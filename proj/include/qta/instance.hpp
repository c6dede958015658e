#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qta {

/// How arc costs are derived from node coordinates.
enum class DistanceMode {
    tsplib_geo, ///< TSPLIB geographical distance (DDD.MM coordinates, integer result)
    euc2d_round, ///< Euclidean rounded to the nearest integer
    euc2d_real, ///< exact real-valued Euclidean
};

const char* to_string(DistanceMode mode);
std::optional<DistanceMode> distance_mode_from_string(std::string_view s);

/// A symmetric TSP instance with a fully materialized distance matrix.
/// Immutable after construction; safe to share across threads.
struct Instance {
    std::string name;
    int n = 0;
    std::vector<double> xs; ///< x (or latitude) per city
    std::vector<double> ys; ///< y (or longitude) per city
    DistanceMode mode = DistanceMode::euc2d_real;
    std::vector<double> dist; ///< n*n row-major, symmetric, zero diagonal
    std::vector<std::string> parse_notes; ///< sections ignored by the parser, etc.

    /// Bounds-checked arc cost.
    double distance(int i, int j) const;

    /// Unchecked arc cost for inner loops.
    double operator()(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
};

/// Parse a TSPLIB-style file (.tsp or Augerat .vrp). Demand and depot
/// sections are discarded and recorded in Instance::parse_notes. The
/// default distance mode follows the file header (GEO -> tsplib_geo,
/// EUC_2D -> euc2d_real) unless overridden.
Instance parse_instance(const std::string& path,
                        std::optional<DistanceMode> mode_override = {});

/// Same parser over an in-memory buffer.
Instance parse_instance_text(std::string_view text, std::string_view fallback_name,
                             std::optional<DistanceMode> mode_override = {});

/// Build an instance directly from coordinates (synthetic inputs).
Instance make_instance(std::string name, std::vector<double> xs, std::vector<double> ys,
                       DistanceMode mode);

/// Cost of the closed tour visiting `tour` in order (includes the arc
/// back to the first city). Requires >= 3 distinct cities.
double tour_cost(const Instance& inst, std::span<const int> tour);

} // namespace qta
