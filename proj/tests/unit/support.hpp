#pragma once

// Independent oracles for the unit tests. Nothing here calls the library's
// sampler or finite-difference code.

#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "gcdc/parser.hpp"
#include "gcdc/smooth_map.hpp"

namespace oracle {

inline gcdc::SmoothMap map(const char* text) { return gcdc::parse_map(text).map; }

/// Uniform points in [-r, r]^dim from a plain mt19937_64 stream.
class Points {
public:
    explicit Points(std::uint64_t seed) : rng_(seed) {}
    std::vector<double> next(std::size_t dim, double r = 2.0) {
        std::uniform_real_distribution<double> u(-r, r);
        std::vector<double> p(dim);
        for (double& x : p) {
            x = u(rng_);
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

/// Value of a map at a point, or nullopt outside its guard.
inline std::optional<std::vector<double>> at(const gcdc::SmoothMap& f, const std::vector<double>& x) {
    auto r = f.evaluate(x);
    if (!r.defined) {
        return std::nullopt;
    }
    return r.values;
}

inline double scalar(const gcdc::SmoothMap& f, const std::vector<double>& x) {
    auto r = f.evaluate(x);
    return r.defined ? r.values.at(0) : std::nan("");
}

/// Central difference of a scalar function.
inline double central(const std::function<double(double)>& g, double t, double h = 1e-4) {
    return (g(t + h) - g(t - h)) / (2 * h);
}

inline bool close(double a, double b, double rel, double abs_floor) {
    double scale = std::max({std::fabs(a), std::fabs(b), abs_floor / rel});
    return std::fabs(a - b) <= rel * scale;
}

/// Counts set partitions of {0..n-1} by brute force: every labelling of the
/// elements by 0..n-1 is reduced to its set of blocks, and distinct block
/// sets are counted.
inline std::size_t brute_force_partitions(std::size_t n) {
    std::set<std::set<std::set<std::size_t>>> seen;
    std::vector<std::size_t> label(n, 0);
    while (true) {
        std::vector<std::set<std::size_t>> blocks(n);
        for (std::size_t i = 0; i < n; ++i) {
            blocks[label[i]].insert(i);
        }
        std::set<std::set<std::size_t>> p;
        for (auto& b : blocks) {
            if (!b.empty()) {
                p.insert(b);
            }
        }
        seen.insert(p);
        std::size_t k = 0;
        while (k < n && ++label[k] == n) {
            label[k++] = 0;
        }
        if (k == n) {
            break;
        }
    }
    return seen.size();
}

}  // namespace oracle
