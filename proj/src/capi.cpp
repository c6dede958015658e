#include "qta.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qta/driver.hpp"
#include "qta/error.hpp"
#include "qta/instance.hpp"
#include "qta/qubo.hpp"
#include "qta/svg.hpp"

using qta::Errc;

struct qta_instance {
    qta::Instance inst;
    std::string notes;
};

struct qta_config {
    qta::QtaConfig cfg;
};

struct qta_result {
    qta::QtaResult res;
    std::string log;
};

struct qta_baseline_result {
    qta::BaselineResult res;
};

namespace {

thread_local std::string g_last_error;

qta_status status_of(Errc c) {
    switch (c) {
    case Errc::ok: return QTA_OK;
    case Errc::io: return QTA_ERR_IO;
    case Errc::parse: return QTA_ERR_PARSE;
    case Errc::unsupported_format: return QTA_ERR_UNSUPPORTED_FORMAT;
    case Errc::degenerate_instance: return QTA_ERR_DEGENERATE_INSTANCE;
    case Errc::bounds: return QTA_ERR_BOUNDS;
    case Errc::invalid_tour: return QTA_ERR_INVALID_TOUR;
    case Errc::invalid_labeling: return QTA_ERR_INVALID_LABELING;
    case Errc::undefined_metric: return QTA_ERR_UNDEFINED_METRIC;
    case Errc::size: return QTA_ERR_SIZE;
    case Errc::shape: return QTA_ERR_SHAPE;
    case Errc::budget_exhausted: return QTA_ERR_BUDGET_EXHAUSTED;
    case Errc::infeasible_sample: return QTA_ERR_INFEASIBLE_SAMPLE;
    case Errc::not_configured: return QTA_ERR_NOT_CONFIGURED;
    case Errc::insufficient_budget: return QTA_ERR_INSUFFICIENT_BUDGET;
    case Errc::invalid_argument: return QTA_ERR_INVALID_ARGUMENT;
    case Errc::internal: return QTA_ERR_INTERNAL;
    }
    return QTA_ERR_INTERNAL;
}

template <class F>
qta_status guarded(F&& f) {
    try {
        f();
        return QTA_OK;
    } catch (const qta::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QTA_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QTA_ERR_INTERNAL;
    }
}

qta_status fail_arg(const char* msg) {
    g_last_error = msg;
    return QTA_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qta_status copy_tour(const std::vector<int>& tour, int* buf, int buf_len) {
    if (!buf || buf_len < static_cast<int>(tour.size())) return fail_arg("buffer too small");
    std::memcpy(buf, tour.data(), tour.size() * sizeof(int));
    return QTA_OK;
}

} // namespace

extern "C" {

const char* qta_version(void) { return "0.1.0"; }

const char* qta_status_name(qta_status status) {
    switch (status) {
    case QTA_OK: return "ok";
    case QTA_ERR_IO: return "io";
    case QTA_ERR_PARSE: return "parse";
    case QTA_ERR_UNSUPPORTED_FORMAT: return "unsupported-format";
    case QTA_ERR_DEGENERATE_INSTANCE: return "degenerate-instance";
    case QTA_ERR_BOUNDS: return "bounds";
    case QTA_ERR_INVALID_TOUR: return "invalid-tour";
    case QTA_ERR_INVALID_LABELING: return "invalid-labeling";
    case QTA_ERR_UNDEFINED_METRIC: return "undefined-metric";
    case QTA_ERR_SIZE: return "size";
    case QTA_ERR_SHAPE: return "shape";
    case QTA_ERR_BUDGET_EXHAUSTED: return "budget-exhausted";
    case QTA_ERR_INFEASIBLE_SAMPLE: return "infeasible-sample";
    case QTA_ERR_NOT_CONFIGURED: return "not-configured";
    case QTA_ERR_INSUFFICIENT_BUDGET: return "insufficient-budget";
    case QTA_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case QTA_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* qta_last_error(void) { return g_last_error.c_str(); }

qta_status qta_instance_load(const char* path, const char* mode_override, qta_instance** out) {
    if (!path || !out) return fail_arg("path and out must be non-null");
    return guarded([&] {
        std::optional<qta::DistanceMode> mode;
        if (mode_override) {
            mode = qta::distance_mode_from_string(mode_override);
            if (!mode)
                qta::fail(Errc::invalid_argument,
                          std::string("unknown distance mode '") + mode_override + "'");
        }
        auto handle = std::make_unique<qta_instance>();
        handle->inst = qta::parse_instance(path, mode);
        for (const auto& note : handle->inst.parse_notes) {
            handle->notes += note;
            handle->notes += '\n';
        }
        *out = handle.release();
    });
}

void qta_instance_free(qta_instance* inst) { delete inst; }

int qta_instance_n_cities(const qta_instance* inst) { return inst ? inst->inst.n : 0; }

const char* qta_instance_name(const qta_instance* inst) {
    return inst ? inst->inst.name.c_str() : "";
}

const char* qta_instance_mode(const qta_instance* inst) {
    return inst ? qta::to_string(inst->inst.mode) : "";
}

const char* qta_instance_notes(const qta_instance* inst) {
    return inst ? inst->notes.c_str() : "";
}

qta_status qta_instance_distance(const qta_instance* inst, int i, int j, double* out) {
    if (!inst || !out) return fail_arg("instance and out must be non-null");
    return guarded([&] { *out = inst->inst.distance(i, j); });
}

qta_status qta_instance_tour_cost(const qta_instance* inst, const int* tour, int len,
                                  double* out) {
    if (!inst || !tour || !out) return fail_arg("instance, tour and out must be non-null");
    return guarded(
        [&] { *out = qta::tour_cost(inst->inst, std::span<const int>(tour, len)); });
}

qta_config* qta_config_new(void) { return new qta_config{}; }

void qta_config_free(qta_config* config) { delete config; }

qta_status qta_config_set(qta_config* config, const char* key, const char* value) {
    if (!config || !key || !value) return fail_arg("config, key and value must be non-null");
    return guarded([&] {
        const std::string k(key), v(value);
        auto to_int = [&](int min_value) {
            std::size_t pos = 0;
            int parsed = 0;
            try {
                parsed = std::stoi(v, &pos);
            } catch (const std::exception&) {
                qta::fail(Errc::invalid_argument, "value for " + k + " is not an integer: " + v);
            }
            if (pos != v.size())
                qta::fail(Errc::invalid_argument, "value for " + k + " is not an integer: " + v);
            if (parsed < min_value)
                qta::fail(Errc::invalid_argument, k + " must be >= " + std::to_string(min_value));
            return parsed;
        };
        qta::QtaConfig& c = config->cfg;
        if (k == "budget") c.budget = to_int(0);
        else if (k == "max_cluster_size") c.max_cluster_size = to_int(3);
        else if (k == "reads") c.reads = to_int(1);
        else if (k == "sweeps") c.sweeps = to_int(1);
        else if (k == "iteration_cap") c.iteration_cap = to_int(0);
        else if (k == "restart_after") c.restart_after = to_int(0);
        else if (k == "population_size") c.initializer.population_size = to_int(1);
        else if (k == "generations") c.initializer.generations = to_int(0);
        else if (k == "migration_period") c.initializer.migration_period = to_int(0);
        else if (k == "baseline_restarts") c.baseline_restarts = to_int(1);
        else if (k == "sampler") {
            if (v == "exact") c.sampler = qta::SamplerKind::exact;
            else if (v == "anneal") c.sampler = qta::SamplerKind::anneal;
            else if (v == "remote") c.sampler = qta::SamplerKind::remote;
            else qta::fail(Errc::invalid_argument, "unknown sampler '" + v + "'");
        } else if (k == "init") {
            if (v == "random") c.init = qta::InitKind::random;
            else if (v == "covns") c.init = qta::InitKind::covns;
            else qta::fail(Errc::invalid_argument, "unknown init '" + v + "'");
        } else if (k == "merge_sweep") {
            if (v == "all") c.merge_full_sweep = true;
            else if (v == "random") c.merge_full_sweep = false;
            else qta::fail(Errc::invalid_argument, "unknown merge_sweep '" + v + "'");
        } else {
            qta::fail(Errc::invalid_argument, "unknown config key '" + k + "'");
        }
    });
}

qta_status qta_run(const qta_instance* inst, const qta_config* config, unsigned long long seed,
                   qta_result** out) {
    if (!inst || !out) return fail_arg("instance and out must be non-null");
    return guarded([&] {
        const qta::QtaConfig cfg = config ? config->cfg : qta::QtaConfig{};
        auto handle = std::make_unique<qta_result>();
        handle->res = qta::run_qta(inst->inst, cfg, seed);
        handle->log = handle->res.log();
        *out = handle.release();
    });
}

void qta_result_free(qta_result* result) { delete result; }

double qta_result_cost(const qta_result* result) { return result ? result->res.cost : 0.0; }

int qta_result_tour_length(const qta_result* result) {
    return result ? static_cast<int>(result->res.tour.size()) : 0;
}

qta_status qta_result_tour(const qta_result* result, int* buf, int buf_len) {
    if (!result) return fail_arg("result must be non-null");
    return copy_tour(result->res.tour, buf, buf_len);
}

qta_status qta_result_labels(const qta_result* result, int* buf, int buf_len) {
    if (!result) return fail_arg("result must be non-null");
    return copy_tour(result->res.labeling.labels, buf, buf_len);
}

int qta_result_accesses(const qta_result* result) { return result ? result->res.ledger.used : 0; }

int qta_result_budget(const qta_result* result) { return result ? result->res.ledger.budget : 0; }

long long qta_result_cache_hits(const qta_result* result) {
    return result ? result->res.ledger.hits : 0;
}

long long qta_result_cache_misses(const qta_result* result) {
    return result ? result->res.ledger.misses : 0;
}

int qta_result_iterations(const qta_result* result) {
    return result ? static_cast<int>(result->res.history.size()) : 0;
}

const char* qta_result_termination(const qta_result* result) {
    return result ? result->res.termination.c_str() : "";
}

const char* qta_result_log(const qta_result* result) { return result ? result->log.c_str() : ""; }

qta_status qta_baseline_run(const qta_instance* inst, const qta_config* config,
                            unsigned long long seed, qta_baseline_result** out) {
    if (!inst || !out) return fail_arg("instance and out must be non-null");
    return guarded([&] {
        const qta::QtaConfig cfg = config ? config->cfg : qta::QtaConfig{};
        auto handle = std::make_unique<qta_baseline_result>();
        handle->res = qta::run_baseline(inst->inst, cfg, seed);
        *out = handle.release();
    });
}

void qta_baseline_result_free(qta_baseline_result* result) { delete result; }

double qta_baseline_result_cost(const qta_baseline_result* result) {
    return result ? result->res.cost : 0.0;
}

int qta_baseline_result_access_equivalent(const qta_baseline_result* result) {
    return result ? result->res.access_equivalent : 0;
}

int qta_baseline_result_tour_length(const qta_baseline_result* result) {
    return result ? static_cast<int>(result->res.tour.size()) : 0;
}

qta_status qta_baseline_result_tour(const qta_baseline_result* result, int* buf, int buf_len) {
    if (!result) return fail_arg("result must be non-null");
    return copy_tour(result->res.tour, buf, buf_len);
}

qta_status qta_render_svg(const qta_instance* inst, const qta_result* result, char** out) {
    if (!inst || !result || !out) return fail_arg("instance, result and out must be non-null");
    return guarded([&] {
        const std::string svg = qta::render_tour_svg(inst->inst, result->res.tour,
                                                     result->res.labeling.labels);
        *out = dup_string(svg);
    });
}

qta_status qta_export_cluster_qubo(const qta_instance* inst, const int* cluster, int len,
                                   char** out) {
    if (!inst || !cluster || !out) return fail_arg("instance, cluster and out must be non-null");
    return guarded([&] {
        const qta::QuboProblem q = qta::build_tsp_qubo(
            inst->inst, std::span<const int>(cluster, len), {}, inst->inst.n);
        *out = dup_string(qta::qubo_to_coordinate_list(q));
    });
}

void qta_string_free(char* s) { std::free(s); }

} // extern "C"
