#include "report_format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qta {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string format1(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

} // namespace

std::string summary_lines(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    for (const RunRecord& r : records)
        out << r.instance << "\t" << r.seed << "\t" << format_double(r.cost) << "\t" << r.accesses
            << "\t" << r.hits << "\t" << r.wall_ms << "\n";
    return out.str();
}

std::vector<RunRecord> parse_summary(std::string_view text) {
    std::vector<RunRecord> records;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        std::istringstream ls(line);
        RunRecord r;
        if (!(ls >> r.instance >> r.seed >> r.cost >> r.accesses >> r.hits >> r.wall_ms))
            throw std::runtime_error("malformed summary line " + std::to_string(line_no) + ": " +
                                     line);
        records.push_back(std::move(r));
    }
    return records;
}

std::string render_table(const std::vector<RunRecord>& records) {
    struct Agg {
        int runs = 0;
        double sum = 0.0, sum_sq = 0.0;
        double best = std::numeric_limits<double>::infinity();
        long long accesses = 0;
    };
    // Keyed by instance field in first-seen order.
    std::vector<std::string> order;
    std::map<std::string, Agg> agg;
    for (const RunRecord& r : records) {
        auto [it, inserted] = agg.try_emplace(r.instance);
        if (inserted) order.push_back(r.instance);
        Agg& a = it->second;
        ++a.runs;
        a.sum += r.cost;
        a.sum_sq += r.cost * r.cost;
        a.best = std::min(a.best, r.cost);
        a.accesses += r.accesses;
    }

    std::ostringstream out;
    out << "instance                      runs      avg      std     best    avacc\n";
    for (const std::string& name : order) {
        const Agg& a = agg.at(name);
        const double mean = a.sum / a.runs;
        const double var = std::max(0.0, a.sum_sq / a.runs - mean * mean);
        char line[256];
        std::snprintf(line, sizeof line, "%-28s %5d %8s %8s %8s %8s\n", name.c_str(), a.runs,
                      format1(mean).c_str(), format1(std::sqrt(var)).c_str(),
                      format1(a.best).c_str(),
                      format1(static_cast<double>(a.accesses) / a.runs).c_str());
        out << line;
    }
    return out.str();
}

} // namespace qta
