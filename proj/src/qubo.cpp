#include "qta/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qta/error.hpp"

namespace qta {

double QuboProblem::energy(std::span<const std::uint8_t> z) const {
    if (static_cast<int>(z.size()) != num_vars)
        fail(Errc::shape, "bitstring length " + std::to_string(z.size()) + " != num_vars " +
                              std::to_string(num_vars));
    double e = 0.0;
    for (int i = 0; i < num_vars; ++i) {
        if (!z[i]) continue;
        e += qv(i, i);
        for (int j = i + 1; j < num_vars; ++j)
            if (z[j]) e += qv(i, j);
    }
    return e;
}

QuboProblem build_tsp_qubo(const Instance& inst, std::span<const int> cluster,
                           std::optional<double> penalty_a, int max_cluster_size) {
    const int n = static_cast<int>(cluster.size());
    if (n < kMinClusterSize || n > max_cluster_size)
        fail(Errc::size, "cluster size " + std::to_string(n) + " outside [" +
                             std::to_string(kMinClusterSize) + ", " +
                             std::to_string(max_cluster_size) + "]");

    QuboProblem q;
    q.n = n;
    q.num_vars = n * n;
    q.city_order.assign(cluster.begin(), cluster.end());
    q.coeffs.assign(static_cast<std::size_t>(q.num_vars) * q.num_vars, 0.0);
    q.cluster_dist.assign(static_cast<std::size_t>(n) * n, 0.0);

    double max_d = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double d = inst.distance(cluster[a], cluster[b]);
            q.cluster_dist[static_cast<std::size_t>(a) * n + b] = d;
            max_d = std::max(max_d, d);
        }
    }

    q.scale_b = 1.0;
    // The 1.0 floor keeps the penalty positive for degenerate clusters of
    // coincident points, where max_d would otherwise zero it out.
    q.penalty_a = penalty_a ? *penalty_a : std::max(2.0 * q.scale_b * max_d, 1.0);
    const double a_w = q.penalty_a;
    const double b_w = q.scale_b;

    // Row constraints: each city occupies exactly one position.
    // A * (1 - sum_p x_{v,p})^2 = A - A * sum_p x + 2A * sum_{p<r} x_p x_r  (x^2 = x)
    for (int v = 0; v < n; ++v) {
        for (int p = 0; p < n; ++p) {
            const int i = q.var_index(v, p);
            q.q(i, i) -= a_w;
            for (int r = p + 1; r < n; ++r) q.q(i, q.var_index(v, r)) += 2.0 * a_w;
        }
    }
    // Column constraints: each position holds exactly one city.
    for (int p = 0; p < n; ++p) {
        for (int v = 0; v < n; ++v) {
            const int i = q.var_index(v, p);
            q.q(i, i) -= a_w;
            for (int w = v + 1; w < n; ++w) {
                const int k = q.var_index(w, p);
                q.q(std::min(i, k), std::max(i, k)) += 2.0 * a_w;
            }
        }
    }
    // Travel costs: consecutive positions, cyclic.
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            if (v == w) continue;
            const double d = q.d(v, w);
            if (d == 0.0) continue;
            for (int p = 0; p < n; ++p) {
                const int i = q.var_index(v, p);
                const int k = q.var_index(w, (p + 1) % n);
                q.q(std::min(i, k), std::max(i, k)) += b_w * d;
            }
        }
    }
    // Constant from expanding the 2n one-hot constraints; for feasible z,
    // z^T Q z == B * tour_cost - 2An, hence:
    q.offset = -2.0 * a_w * n;
    return q;
}

DecodeResult decode(const QuboProblem& q, std::span<const std::uint8_t> z) {
    if (static_cast<int>(z.size()) != q.num_vars)
        fail(Errc::shape, "bitstring length " + std::to_string(z.size()) + " != num_vars " +
                              std::to_string(q.num_vars));
    const int n = q.n;
    DecodeResult res;

    bool feasible = true;
    std::vector<int> city_at_pos(n, -1);
    for (int v = 0; v < n; ++v) {
        int ones = 0;
        for (int p = 0; p < n; ++p) ones += z[q.var_index(v, p)];
        if (ones != 1) {
            feasible = false;
            ++res.report.violated_city_rows;
            res.report.violations.push_back("city " + std::to_string(q.city_order[v]) +
                                            " occupies " + std::to_string(ones) + " positions");
        }
    }
    for (int p = 0; p < n; ++p) {
        int ones = 0;
        for (int v = 0; v < n; ++v) {
            if (z[q.var_index(v, p)]) {
                ++ones;
                city_at_pos[p] = v;
            }
        }
        if (ones != 1) {
            feasible = false;
            ++res.report.violated_position_columns;
            res.report.violations.push_back("position " + std::to_string(p) + " holds " +
                                            std::to_string(ones) + " cities");
        }
    }
    if (!feasible) return res;

    SubTour t;
    t.cluster.assign(q.city_order.begin(), q.city_order.end());
    std::sort(t.cluster.begin(), t.cluster.end());
    t.order.reserve(n);
    for (int p = 0; p < n; ++p) t.order.push_back(q.city_order[city_at_pos[p]]);
    t.cost = 0.0;
    for (int p = 0; p < n; ++p) t.cost += q.d(city_at_pos[p], city_at_pos[(p + 1) % n]);
    res.tour = std::move(t);
    return res;
}

double IsingProblem::energy(std::span<const int> spins) const {
    double e = 0.0;
    for (int i = 0; i < num_vars; ++i) {
        e += h[i] * spins[i];
        for (int k = i + 1; k < num_vars; ++k) e += coupler(i, k) * spins[i] * spins[k];
    }
    return e;
}

IsingProblem qubo_to_ising(const QuboProblem& q) {
    IsingProblem out;
    out.num_vars = q.num_vars;
    out.h.assign(q.num_vars, 0.0);
    out.j.assign(static_cast<std::size_t>(q.num_vars) * q.num_vars, 0.0);
    out.offset = 0.0;
    // x = (1 + s) / 2:
    //   Q_ii x_i         -> Q_ii/2 * s_i            + Q_ii/2
    //   Q_ik x_i x_k     -> Q_ik/4 * (s_i s_k + s_i + s_k) + Q_ik/4
    for (int i = 0; i < q.num_vars; ++i) {
        const double qii = q.qv(i, i);
        out.h[i] += qii / 2.0;
        out.offset += qii / 2.0;
        for (int k = i + 1; k < q.num_vars; ++k) {
            const double qik = q.qv(i, k);
            if (qik == 0.0) continue;
            out.j[static_cast<std::size_t>(i) * q.num_vars + k] = qik / 4.0;
            out.h[i] += qik / 4.0;
            out.h[k] += qik / 4.0;
            out.offset += qik / 4.0;
        }
    }
    return out;
}

std::string qubo_to_coordinate_list(const QuboProblem& q) {
    std::ostringstream out;
    out.precision(17);
    out << "num_vars " << q.num_vars << "\n";
    out << "offset " << q.offset << "\n";
    for (int i = 0; i < q.num_vars; ++i)
        for (int k = i; k < q.num_vars; ++k)
            if (q.qv(i, k) != 0.0) out << i << " " << k << " " << q.qv(i, k) << "\n";
    return out.str();
}

} // namespace qta
