#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gcdc/expr.hpp"
#include "gcdc/guard.hpp"
#include "gcdc/program.hpp"

namespace gcdc {

/// R^dim. Dimension 0 is the terminal object.
struct SpaceObject {
    std::size_t dim = 0;
    friend bool operator==(const SpaceObject&, const SpaceObject&) = default;
};

/// A guarded smooth map R^dom -> R^cod: one expression per output coordinate
/// over x_0..x_{dom-1}, defined where the guard holds.
class SmoothMap {
public:
    SmoothMap() = default;
    SmoothMap(std::size_t dom, std::vector<Expr> coords, Guard guard = {});

    SpaceObject dom() const { return {dom_}; }
    SpaceObject cod() const { return {coords_.size()}; }
    const std::vector<Expr>& coords() const { return coords_; }
    const Guard& guard() const { return guard_; }

    struct Evaluation {
        bool defined = false;
        bool fault = false;  // defined, yet some coordinate is not finite
        std::vector<double> values;
    };
    Evaluation evaluate(std::span<const double> point) const;

    /// Map text in the parser grammar, with the given parameter names.
    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string() const;

private:
    const Program& program() const;

    std::size_t dom_ = 0;
    std::vector<Expr> coords_;
    Guard guard_;
    mutable std::shared_ptr<const Program> program_;
};

/// x for a one-dimensional domain, x1..xn otherwise.
std::vector<std::string> point_names(std::size_t dim);

bool structurally_equal(const SmoothMap& a, const SmoothMap& b);

}  // namespace gcdc
