#include "qta/merge.hpp"

#include <algorithm>
#include <limits>

#include "qta/error.hpp"

namespace qta {

namespace {

void validate_subtours(const Instance& inst, const std::vector<SubTour>& subtours) {
    if (subtours.empty()) fail(Errc::invalid_argument, "no subtours to merge");
    std::vector<bool> covered(inst.n, false);
    int total = 0;
    for (std::size_t i = 0; i < subtours.size(); ++i) {
        const SubTour& st = subtours[i];
        if (st.order.size() < 3)
            fail(Errc::size, "subtour " + std::to_string(i) + " has " +
                                 std::to_string(st.order.size()) + " cities, need at least 3");
        for (int city : st.order) {
            if (city < 0 || city >= inst.n)
                fail(Errc::bounds, "subtour city " + std::to_string(city) + " out of range");
            if (covered[city])
                fail(Errc::invalid_argument,
                     "subtours are not disjoint: city " + std::to_string(city) + " repeats");
            covered[city] = true;
            ++total;
        }
    }
    if (total != inst.n)
        fail(Errc::invalid_argument, "subtours cover " + std::to_string(total) + " of " +
                                         std::to_string(inst.n) + " cities");
}

struct Search {
    const Instance& inst;
    const std::vector<SubTour>& subtours;
    std::vector<CycleLeaf>& leaves;
    std::vector<bool> visited;
    int ending_node = -1;

    Search(const Instance& i, const std::vector<SubTour>& s, std::vector<CycleLeaf>& out)
        : inst(i), subtours(s), leaves(out), visited(s.size(), false) {}

    // Extends the route from `exit_node` after the current cluster has been
    // fully appended: bridge to the nearest unvisited cluster, or close the
    // cycle when none remains.
    void extend(std::vector<int>& route, double cost, int exit_node) {
        int target = -1, entry = -1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < subtours.size(); ++c) {
            if (visited[c]) continue;
            for (int city : subtours[c].order) {
                const double d = inst(exit_node, city);
                if (d < best || (d == best && city < entry)) {
                    best = d;
                    entry = city;
                    target = static_cast<int>(c);
                }
            }
        }
        if (target < 0) {
            leaves.push_back({route, cost + inst(exit_node, ending_node)});
            return;
        }
        enter(route, cost + best, target, entry);
    }

    // Walks cluster `target` from `entry` in both directions. Breaking the
    // arc between the entry and one of its cycle neighbours leaves a
    // Hamiltonian path over the cluster that exits at that neighbour.
    void enter(std::vector<int>& route, double cost, int target, int entry) {
        visited[target] = true;
        const SubTour& st = subtours[target];
        const int s = static_cast<int>(st.order.size());
        int p = 0;
        while (st.order[p] != entry) ++p;

        const std::size_t mark = route.size();
        for (int dir = 0; dir < 2; ++dir) {
            double internal = st.cost;
            if (dir == 0) {
                // forward walk, breaks (entry, predecessor)
                for (int k = 0; k < s; ++k) route.push_back(st.order[(p + k) % s]);
                internal -= inst(entry, st.order[(p + s - 1) % s]);
            } else {
                // backward walk, breaks (entry, successor)
                for (int k = 0; k < s; ++k) route.push_back(st.order[(p - k + s) % s]);
                internal -= inst(entry, st.order[(p + 1) % s]);
            }
            extend(route, cost + internal, route.back());
            route.resize(mark);
        }
        visited[target] = false;
    }
};

} // namespace

std::vector<CycleLeaf> merge_leaves(const Instance& inst, const std::vector<SubTour>& subtours,
                                    int initial_cluster) {
    validate_subtours(inst, subtours);
    if (initial_cluster < 0 || initial_cluster >= static_cast<int>(subtours.size()))
        fail(Errc::bounds, "initial cluster index out of range");

    std::vector<CycleLeaf> leaves;
    if (subtours.size() == 1) {
        leaves.push_back({subtours[0].order, subtours[0].cost});
        return leaves;
    }

    Search search(inst, subtours, leaves);
    search.visited[initial_cluster] = true;
    const SubTour& st = subtours[initial_cluster];
    const int s = static_cast<int>(st.order.size());

    std::vector<int> route;
    route.reserve(inst.n);
    for (int a = 0; a < s; ++a) {
        const int u = st.order[a];
        const int v = st.order[(a + 1) % s];
        const double opened = st.cost - inst(u, v);
        // Orientation 1: exit u, orphan v. The path from the orphan to the
        // exit is the cycle walked forward from v around to u.
        // Orientation 2: roles swapped, path reversed.
        for (int orientation = 0; orientation < 2; ++orientation) {
            route.clear();
            if (orientation == 0) {
                for (int k = 0; k < s; ++k) route.push_back(st.order[(a + 1 + k) % s]);
                search.ending_node = v;
            } else {
                for (int k = 0; k < s; ++k) route.push_back(st.order[(a - k + s) % s]);
                search.ending_node = u;
            }
            search.extend(route, opened, route.back());
        }
    }
    return leaves;
}

namespace {

MergeResult best_leaf(const std::vector<CycleLeaf>& leaves, int initial_cluster) {
    const CycleLeaf* best = nullptr;
    for (const CycleLeaf& leaf : leaves) {
        if (!best || leaf.cost < best->cost ||
            (leaf.cost == best->cost && leaf.route < best->route))
            best = &leaf;
    }
    return {best->route, best->cost, initial_cluster};
}

} // namespace

MergeResult merge_from(const Instance& inst, const std::vector<SubTour>& subtours,
                       int initial_cluster) {
    return best_leaf(merge_leaves(inst, subtours, initial_cluster), initial_cluster);
}

MergeResult merge(const Instance& inst, const std::vector<SubTour>& subtours) {
    validate_subtours(inst, subtours);
    if (subtours.size() == 1) return {subtours[0].order, subtours[0].cost, 0};

    MergeResult best;
    bool have = false;
    for (int i = 0; i < static_cast<int>(subtours.size()); ++i) {
        MergeResult candidate = merge_from(inst, subtours, i);
        if (!have || candidate.cost < best.cost ||
            (candidate.cost == best.cost && candidate.tour < best.tour)) {
            best = std::move(candidate);
            have = true;
        }
    }
    return best;
}

} // namespace qta
