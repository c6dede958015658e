#pragma once

#include <span>
#include <string>

#include "qta/instance.hpp"

namespace qta {

/// Render a tour as an SVG drawing: one circle per city (filled with its
/// cluster's color when labels are given) and one line per tour edge.
/// Intra-cluster edges take the cluster color; bridges between clusters are
/// drawn dashed. `labels` may be empty.
std::string render_tour_svg(const Instance& inst, std::span<const int> tour,
                            std::span<const int> labels);

} // namespace qta
