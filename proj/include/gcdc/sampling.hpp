#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gcdc/smooth_map.hpp"
#include "gcdc/verdict.hpp"

namespace gcdc {

/// Uniform points in the box [-radius, radius]^dim. The stream depends only on
/// (seed, label), so a check draws the same points whatever runs before it.
class Sampler {
public:
    Sampler(std::uint64_t seed, const std::string& label);

    double uniform();  // [0, 1)
    std::vector<double> point(std::size_t dim, double radius);
    std::uint64_t next() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

std::uint64_t stream_seed(std::uint64_t seed, const std::string& label);

/// |a - b| relative to max(|a|, |b|), with the floor tol_abs / tol_rel on the
/// scale so values near zero are judged absolutely.
double residual(double a, double b, const Config& cfg);

/// Semantic equality of two parallel maps: guards must agree at every drawn
/// point, and values must agree within tol_rel where both are defined.
Verdict compare_maps(const SmoothMap& a, const SmoothMap& b, const Config& cfg, const std::string& label);

class OutOfDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Central difference (f(x + h v) - f(x - h v)) / 2h.
std::vector<double> finite_diff(const SmoothMap& f, std::span<const double> x, std::span<const double> v, double h);

/// Compares a derivative map df: R^a x R^n -> R^m (direction block first)
/// against central differences of f at points whose whole probe box
/// x +- margin e_j lies in the guard. Points where the quotients at steps h
/// and 2h disagree beyond `rel` are skipped as unconverged.
Verdict check_finite_diff(const SmoothMap& f, const SmoothMap& df, const Config& cfg, const std::string& label,
                          double h = 1e-4, double rel = 1e-5, double margin = 0.05);

}  // namespace gcdc
