#pragma once

#include <string>
#include <vector>

#include "gcdc/axioms.hpp"
#include "gcdc/verdict.hpp"

#include <json.hpp>

namespace gcdc {

/// Sorts by suite, then map index, then axiom id.
void sort_checks(std::vector<Check>& checks);

/// {"schema": 1, "suite", "seed", "config", "checks": [...], "summary"}.
nlohmann::json report_json(const std::string& suite, const std::string& model, const Config& cfg,
                           std::vector<Check> checks);

/// 0 when everything passes, 1 on any law failure, 3 when sampling starved
/// (and nothing failed).
int exit_code(const std::vector<Check>& checks);

/// One line per check, for terminals.
std::string format_check(const Check& c);

}  // namespace gcdc
