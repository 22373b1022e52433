#include "gcdc/smooth_map.hpp"

#include <cmath>
#include <stdexcept>

namespace gcdc {

SmoothMap::SmoothMap(std::size_t dom, std::vector<Expr> coords, Guard guard)
    : dom_(dom), coords_(std::move(coords)), guard_(std::move(guard)) {
    for (const Expr& e : coords_) {
        if (!variables_within(e, 0, dom_)) {
            throw std::invalid_argument("coordinate mentions a variable outside the domain");
        }
    }
    if (!guard_.variables_within(0, dom_)) {
        throw std::invalid_argument("guard mentions a variable outside the domain");
    }
}

const Program& SmoothMap::program() const {
    if (!program_) {
        std::vector<Expr> outs;
        outs.reserve(guard_.atoms().size() + coords_.size());
        for (const GuardAtom& a : guard_.atoms()) {
            outs.push_back(a.expr);
        }
        outs.insert(outs.end(), coords_.begin(), coords_.end());
        program_ = std::make_shared<const Program>(outs);
    }
    return *program_;
}

SmoothMap::Evaluation SmoothMap::evaluate(std::span<const double> point) const {
    if (point.size() != dom_) {
        throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, map expects " +
                                    std::to_string(dom_));
    }
    const Program& p = program();
    std::vector<double> out(p.output_count());
    p.run(point, out);
    Evaluation ev;
    std::size_t atoms = guard_.atoms().size();
    ev.defined = true;
    for (std::size_t i = 0; i < atoms; ++i) {
        if (!atom_holds(out[i], guard_.atoms()[i].positive)) {
            ev.defined = false;
        }
    }
    ev.values.assign(out.begin() + static_cast<std::ptrdiff_t>(atoms), out.end());
    if (ev.defined) {
        for (double v : ev.values) {
            if (!std::isfinite(v)) {
                ev.fault = true;
            }
        }
    }
    return ev;
}

std::vector<std::string> point_names(std::size_t dim) {
    if (dim == 1) {
        return {"x"};
    }
    return default_names(dim);
}

std::string SmoothMap::to_string(const std::vector<std::string>& names) const {
    std::string out = "fn(";
    for (std::size_t i = 0; i < dom_; ++i) {
        out += (i ? ", " : "") + names.at(i);
    }
    out += ") -> (";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        out += (i ? ", " : "") + gcdc::to_string(coords_[i], names);
    }
    out += ")";
    if (!guard_.is_true()) {
        out += " where " + guard_.to_string(names);
    }
    return out;
}

std::string SmoothMap::to_string() const { return to_string(point_names(dom_)); }

bool structurally_equal(const SmoothMap& a, const SmoothMap& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod() || !structurally_equal(a.guard(), b.guard())) {
        return false;
    }
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (!structurally_equal(a.coords()[i], b.coords()[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace gcdc
