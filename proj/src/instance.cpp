#include "qta/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qta/error.hpp"

namespace qta {

namespace {

// TSPLIB defines geographical distances with this truncated pi.
constexpr double kTsplibPi = 3.141592;
constexpr double kEarthRadius = 6378.388;

double to_radians(double ddd_mm) {
    const double deg = std::trunc(ddd_mm);
    const double min = ddd_mm - deg;
    return kTsplibPi * (deg + 5.0 * min / 3.0) / 180.0;
}

double geo_distance(double lat_i, double lon_i, double lat_j, double lon_j) {
    const double q1 = std::cos(to_radians(lon_i) - to_radians(lon_j));
    const double q2 = std::cos(to_radians(lat_i) - to_radians(lat_j));
    const double q3 = std::cos(to_radians(lat_i) + to_radians(lat_j));
    return std::floor(kEarthRadius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
}

double euclidean(double xi, double yi, double xj, double yj) {
    const double dx = xi - xj;
    const double dy = yi - yj;
    return std::sqrt(dx * dx + dy * dy);
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Splits "KEY : value" / "KEY: value" / "KEY" header lines.
bool split_header(const std::string& line, std::string& key, std::string& value) {
    const auto colon = line.find(':');
    std::string head = trim(colon == std::string::npos ? line : line.substr(0, colon));
    if (head.empty()) return false;
    if (!std::all_of(head.begin(), head.end(),
                     [](unsigned char c) { return std::isupper(c) || c == '_' || std::isdigit(c); }))
        return false;
    key = head;
    value = colon == std::string::npos ? std::string{} : trim(line.substr(colon + 1));
    return true;
}

} // namespace

const char* to_string(DistanceMode mode) {
    switch (mode) {
    case DistanceMode::tsplib_geo: return "geo";
    case DistanceMode::euc2d_round: return "euc-round";
    case DistanceMode::euc2d_real: return "euc-real";
    }
    return "?";
}

std::optional<DistanceMode> distance_mode_from_string(std::string_view s) {
    if (s == "geo") return DistanceMode::tsplib_geo;
    if (s == "euc-round") return DistanceMode::euc2d_round;
    if (s == "euc-real") return DistanceMode::euc2d_real;
    return std::nullopt;
}

double Instance::distance(int i, int j) const {
    if (i < 0 || i >= n || j < 0 || j >= n)
        fail(Errc::bounds, "city index out of range: (" + std::to_string(i) + ", " +
                               std::to_string(j) + ") with n=" + std::to_string(n));
    return (*this)(i, j);
}

Instance make_instance(std::string name, std::vector<double> xs, std::vector<double> ys,
                       DistanceMode mode) {
    if (xs.size() != ys.size())
        fail(Errc::invalid_argument, "coordinate arrays differ in length");
    if (xs.size() < 3)
        fail(Errc::degenerate_instance,
             "instance has " + std::to_string(xs.size()) + " cities, need at least 3");
    Instance inst;
    inst.name = std::move(name);
    inst.n = static_cast<int>(xs.size());
    inst.xs = std::move(xs);
    inst.ys = std::move(ys);
    inst.mode = mode;
    inst.dist.assign(static_cast<std::size_t>(inst.n) * inst.n, 0.0);
    for (int i = 0; i < inst.n; ++i) {
        for (int j = i + 1; j < inst.n; ++j) {
            double d = 0.0;
            switch (mode) {
            case DistanceMode::tsplib_geo:
                d = geo_distance(inst.xs[i], inst.ys[i], inst.xs[j], inst.ys[j]);
                break;
            case DistanceMode::euc2d_round:
                d = std::floor(euclidean(inst.xs[i], inst.ys[i], inst.xs[j], inst.ys[j]) + 0.5);
                break;
            case DistanceMode::euc2d_real:
                d = euclidean(inst.xs[i], inst.ys[i], inst.xs[j], inst.ys[j]);
                break;
            }
            inst.dist[static_cast<std::size_t>(i) * inst.n + j] = d;
            inst.dist[static_cast<std::size_t>(j) * inst.n + i] = d;
        }
    }
    return inst;
}

Instance parse_instance_text(std::string_view text, std::string_view fallback_name,
                             std::optional<DistanceMode> mode_override) {
    std::istringstream in{std::string(text)};

    std::string name(fallback_name);
    std::string edge_weight_type;
    int dimension = -1;
    std::vector<double> xs, ys;
    std::vector<bool> seen;
    std::vector<std::string> notes;

    std::string line;
    int line_no = 0;
    bool in_coords = false;
    bool saw_coord_section = false;
    std::string skipping_section;

    auto parse_error = [&](const std::string& what) {
        fail(Errc::parse, name + ": " + what + " (line " + std::to_string(line_no) + ")");
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "EOF") break;

        std::string key, value;
        const bool is_header = split_header(t, key, value);

        if (is_header && key.size() >= 8 && key.ends_with("_SECTION")) {
            in_coords = false;
            skipping_section.clear();
            if (key == "NODE_COORD_SECTION") {
                if (dimension < 0) parse_error("NODE_COORD_SECTION before DIMENSION");
                in_coords = true;
                saw_coord_section = true;
                xs.assign(dimension, 0.0);
                ys.assign(dimension, 0.0);
                seen.assign(dimension, false);
            } else {
                // Augerat CVRP extras (DEMAND_SECTION, DEPOT_SECTION, ...) are
                // irrelevant for a plain TSP reading of the file.
                skipping_section = key;
                notes.push_back("ignored " + key);
            }
            continue;
        }

        if (in_coords) {
            std::istringstream ls(t);
            int idx = 0;
            double x = 0, y = 0;
            if (!(ls >> idx >> x >> y)) parse_error("malformed coordinate line '" + t + "'");
            if (idx < 1 || idx > dimension)
                parse_error("coordinate index " + std::to_string(idx) + " outside 1.." +
                            std::to_string(dimension));
            if (seen[idx - 1]) parse_error("duplicate coordinate index " + std::to_string(idx));
            seen[idx - 1] = true;
            xs[idx - 1] = x;
            ys[idx - 1] = y;
            continue;
        }
        if (!skipping_section.empty() && !is_header) continue;

        if (is_header) {
            if (key == "NAME" && !value.empty()) name = value;
            else if (key == "DIMENSION") dimension = std::stoi(value);
            else if (key == "EDGE_WEIGHT_TYPE") edge_weight_type = value;
            // TYPE, COMMENT, CAPACITY, DISPLAY_DATA_TYPE, ... carry nothing we need
            continue;
        }
        parse_error("unrecognized line '" + t + "'");
    }

    if (dimension >= 0 && dimension < 3)
        fail(Errc::degenerate_instance,
             name + ": " + std::to_string(dimension) + " cities, need at least 3");

    DistanceMode mode;
    if (edge_weight_type == "GEO") mode = DistanceMode::tsplib_geo;
    else if (edge_weight_type == "EUC_2D") mode = DistanceMode::euc2d_real;
    else
        fail(Errc::unsupported_format,
             name + ": unsupported EDGE_WEIGHT_TYPE '" + edge_weight_type + "'");
    if (mode_override) mode = *mode_override;

    if (!saw_coord_section) {
        line_no = line_no == 0 ? 1 : line_no;
        fail(Errc::parse, name + ": missing NODE_COORD_SECTION (after line " +
                              std::to_string(line_no) + ")");
    }
    for (int i = 0; i < dimension; ++i)
        if (!seen[i])
            fail(Errc::parse,
                 name + ": NODE_COORD_SECTION is missing city " + std::to_string(i + 1));

    Instance inst = make_instance(std::move(name), std::move(xs), std::move(ys), mode);
    inst.parse_notes = std::move(notes);
    return inst;
}

Instance parse_instance(const std::string& path, std::optional<DistanceMode> mode_override) {
    std::ifstream f(path);
    if (!f) fail(Errc::io, "cannot open instance file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();

    // Fallback name = file stem.
    std::string stem = path;
    if (const auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);

    return parse_instance_text(buf.str(), stem, mode_override);
}

double tour_cost(const Instance& inst, std::span<const int> tour) {
    if (tour.size() < 3)
        fail(Errc::invalid_tour,
             "degenerate tour of " + std::to_string(tour.size()) + " cities");
    std::vector<bool> used(inst.n, false);
    for (int c : tour) {
        if (c < 0 || c >= inst.n) fail(Errc::bounds, "tour city " + std::to_string(c) + " out of range");
        if (used[c]) fail(Errc::invalid_tour, "tour repeats city " + std::to_string(c));
        used[c] = true;
    }
    double total = 0.0;
    for (std::size_t k = 0; k < tour.size(); ++k)
        total += inst(tour[k], tour[(k + 1) % tour.size()]);
    return total;
}

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ok: return "ok";
    case Errc::io: return "io";
    case Errc::parse: return "parse";
    case Errc::unsupported_format: return "unsupported-format";
    case Errc::degenerate_instance: return "degenerate-instance";
    case Errc::bounds: return "bounds";
    case Errc::invalid_tour: return "invalid-tour";
    case Errc::invalid_labeling: return "invalid-labeling";
    case Errc::undefined_metric: return "undefined-metric";
    case Errc::size: return "size";
    case Errc::shape: return "shape";
    case Errc::budget_exhausted: return "budget-exhausted";
    case Errc::infeasible_sample: return "infeasible-sample";
    case Errc::not_configured: return "not-configured";
    case Errc::insufficient_budget: return "insufficient-budget";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::internal: return "internal";
    }
    return "?";
}

} // namespace qta
