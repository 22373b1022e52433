#include "gcdc/verdict.hpp"

#include <algorithm>

namespace gcdc {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::starved: return "starved";
        case Status::info: return "info";
    }
    return "?";
}

Verdict Verdict::failure(std::string detail, std::optional<std::vector<double>> witness) {
    Verdict v;
    v.status = Status::fail;
    v.detail = std::move(detail);
    v.witness = std::move(witness);
    return v;
}

namespace {

int severity(Status s) {
    switch (s) {
        case Status::fail: return 3;
        case Status::starved: return 2;
        case Status::pass: return 1;
        case Status::info: return 0;
    }
    return 0;
}

}  // namespace

Verdict combine(const Verdict& a, const Verdict& b) {
    Verdict out = severity(b.status) > severity(a.status) ? b : a;
    out.worst_residual = std::max(a.worst_residual, b.worst_residual);
    return out;
}

Verdict combine_component(const Verdict& a, Verdict b, std::size_t component) {
    if (!b.component) {
        b.component = component;
    }
    return combine(a, b);
}

}  // namespace gcdc
