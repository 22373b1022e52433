#include "gcdc/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace gcdc {

void sort_checks(std::vector<Check>& checks) {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
        return std::tie(a.suite, a.map_index, a.axiom) < std::tie(b.suite, b.map_index, b.axiom);
    });
}

namespace {

nlohmann::json number(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

}  // namespace

nlohmann::json report_json(const std::string& suite, const std::string& model, const Config& cfg,
                           std::vector<Check> checks) {
    sort_checks(checks);
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["suite"] = suite;
    doc["seed"] = cfg.seed;
    doc["config"] = {{"samples", cfg.samples}, {"tol_rel", cfg.tol_rel}, {"tol_abs", cfg.tol_abs},
                     {"order", cfg.order},     {"radius", cfg.radius},   {"retry_cap", cfg.retry_cap},
                     {"model", model}};
    nlohmann::json list = nlohmann::json::array();
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const Check& c : checks) {
        nlohmann::json item;
        item["suite"] = c.suite;
        item["map_index"] = c.map_index;
        item["axiom"] = c.axiom;
        item["status"] = status_name(c.verdict.status);
        item["worst_residual"] = number(c.verdict.worst_residual);
        item["seed"] = cfg.seed;
        if (c.verdict.witness) {
            nlohmann::json w = nlohmann::json::array();
            for (double x : *c.verdict.witness) {
                w.push_back(number(x));
            }
            item["witness_point"] = w;
        }
        if (c.verdict.component) {
            item["component"] = *c.verdict.component;
        }
        if (!c.verdict.detail.empty()) {
            item["detail"] = c.verdict.detail;
        }
        list.push_back(item);
        ++counts[static_cast<int>(c.verdict.status)];
    }
    doc["checks"] = list;
    doc["summary"] = {{"total", checks.size()},
                      {"pass", counts[static_cast<int>(Status::pass)]},
                      {"fail", counts[static_cast<int>(Status::fail)]},
                      {"starved", counts[static_cast<int>(Status::starved)]},
                      {"info", counts[static_cast<int>(Status::info)]}};
    return doc;
}

int exit_code(const std::vector<Check>& checks) {
    bool starved = false;
    for (const Check& c : checks) {
        if (c.verdict.status == Status::fail) {
            return 1;
        }
        starved = starved || c.verdict.status == Status::starved;
    }
    return starved ? 3 : 0;
}

std::string format_check(const Check& c) {
    std::ostringstream os;
    os << status_name(c.verdict.status) << "  " << c.suite << "[" << c.map_index << "] " << c.axiom;
    if (c.verdict.component) {
        os << " (component " << *c.verdict.component << ")";
    }
    os.precision(3);
    os << "  residual " << c.verdict.worst_residual;
    if (!c.verdict.detail.empty()) {
        os << "  " << c.verdict.detail;
    }
    if (c.verdict.witness) {
        os.precision(17);
        os << "  at (";
        for (std::size_t i = 0; i < c.verdict.witness->size(); ++i) {
            os << (i ? ", " : "") << (*c.verdict.witness)[i];
        }
        os << ")";
    }
    return os.str();
}

}  // namespace gcdc
