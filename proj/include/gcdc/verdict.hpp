#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gcdc {

/// Numeric protocol shared by every semantic comparison.
struct Config {
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    double tol_rel = 1e-9;
    double tol_abs = 1e-8;
    double radius = 2.0;
    std::size_t retry_cap = 10000;
    std::size_t order = 4;
};

enum class Status { pass, fail, starved, info };

const char* status_name(Status s);

struct Verdict {
    Status status = Status::pass;
    double worst_residual = 0.0;
    std::optional<std::vector<double>> witness;
    std::optional<std::size_t> component;
    std::string detail;

    bool ok() const { return status == Status::pass || status == Status::info; }

    static Verdict failure(std::string detail, std::optional<std::vector<double>> witness = std::nullopt);
};

/// Worst of two verdicts: fail over starved over pass. Residuals take the max;
/// the first witness and detail of the deciding verdict are kept.
Verdict combine(const Verdict& a, const Verdict& b);

/// Same as combine, tagging `b` with a jet component index if it has none.
Verdict combine_component(const Verdict& a, Verdict b, std::size_t component);

}  // namespace gcdc
