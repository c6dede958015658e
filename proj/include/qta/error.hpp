#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qta {

/// Error categories shared between the C++ core and the C API status codes.
enum class Errc {
    ok = 0,
    io,
    parse,
    unsupported_format,
    degenerate_instance,
    bounds,
    invalid_tour,
    invalid_labeling,
    undefined_metric,
    size,
    shape,
    budget_exhausted,
    infeasible_sample,
    not_configured,
    insufficient_budget,
    invalid_argument,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace qta
