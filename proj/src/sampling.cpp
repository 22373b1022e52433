#include "gcdc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gcdc {

std::uint64_t stream_seed(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Sampler::Sampler(std::uint64_t seed, const std::string& label) : rng_(stream_seed(seed, label)) {}

double Sampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

std::vector<double> Sampler::point(std::size_t dim, double radius) {
    std::vector<double> p(dim);
    for (double& x : p) {
        x = (2.0 * uniform() - 1.0) * radius;
    }
    return p;
}

double residual(double a, double b, const Config& cfg) {
    double scale = std::max({std::fabs(a), std::fabs(b), cfg.tol_abs / cfg.tol_rel});
    return std::fabs(a - b) / scale;
}

namespace {

std::string dims(const SmoothMap& m) {
    return std::to_string(m.dom().dim) + "->" + std::to_string(m.cod().dim);
}

}  // namespace

Verdict compare_maps(const SmoothMap& a, const SmoothMap& b, const Config& cfg, const std::string& label) {
    if (a.dom() != b.dom() || a.cod() != b.cod()) {
        return Verdict::failure("shape mismatch: " + dims(a) + " vs " + dims(b));
    }
    Sampler rng(cfg.seed, label);
    std::size_t dim = a.dom().dim;
    std::size_t wanted = dim == 0 ? 1 : cfg.samples;
    std::size_t cap = dim == 0 ? 1 : cfg.retry_cap;
    std::size_t accepted = 0;
    Verdict v;
    for (std::size_t draws = 0; draws < cap && accepted < wanted; ++draws) {
        std::vector<double> p = rng.point(dim, cfg.radius);
        auto ea = a.evaluate(p);
        auto eb = b.evaluate(p);
        if (ea.defined != eb.defined) {
            return Verdict::failure(std::string("guards disagree: ") + (ea.defined ? "left" : "right") +
                                        " side defined, other undefined",
                                    p);
        }
        if (!ea.defined) {
            continue;
        }
        if (ea.fault || eb.fault) {
            return Verdict::failure(std::string("domain fault inside guard on the ") + (ea.fault ? "left" : "right") +
                                        " side",
                                    p);
        }
        ++accepted;
        for (std::size_t i = 0; i < ea.values.size(); ++i) {
            double r = residual(ea.values[i], eb.values[i], cfg);
            if (r > v.worst_residual) {
                v.worst_residual = r;
                if (r > cfg.tol_rel) {
                    std::ostringstream os;
                    os.precision(17);
                    os << "coordinate " << i << ": " << ea.values[i] << " vs " << eb.values[i];
                    v.status = Status::fail;
                    v.witness = p;
                    v.detail = os.str();
                }
            }
        }
    }
    if (v.status == Status::pass && accepted < wanted) {
        v.status = Status::starved;
        v.detail = "only " + std::to_string(accepted) + " of " + std::to_string(wanted) +
                   " sample points fell inside the common domain";
    }
    return v;
}

std::vector<double> finite_diff(const SmoothMap& f, std::span<const double> x, std::span<const double> v, double h) {
    std::vector<double> plus(x.begin(), x.end());
    std::vector<double> minus(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        plus[i] += h * v[i];
        minus[i] -= h * v[i];
    }
    auto ep = f.evaluate(plus);
    auto em = f.evaluate(minus);
    if (!ep.defined || !em.defined || ep.fault || em.fault) {
        throw OutOfDomain("finite difference probe leaves the domain");
    }
    std::vector<double> out(ep.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (ep.values[i] - em.values[i]) / (2.0 * h);
    }
    return out;
}

Verdict check_finite_diff(const SmoothMap& f, const SmoothMap& df, const Config& cfg, const std::string& label,
                          double h, double rel, double margin) {
    std::size_t n = f.dom().dim;
    if (df.dom().dim != 2 * n || df.cod() != f.cod()) {
        return Verdict::failure("derivative shape does not match the map");
    }
    Config fd = cfg;
    fd.tol_rel = rel;
    Sampler rng(cfg.seed, label);
    std::size_t accepted = 0;
    Verdict v;
    for (std::size_t draws = 0; draws < cfg.retry_cap && accepted < cfg.samples; ++draws) {
        std::vector<double> x = rng.point(n, cfg.radius);
        std::vector<double> dir = rng.point(n, 1.0);
        bool inside = f.evaluate(x).defined;
        for (std::size_t j = 0; j < n && inside; ++j) {
            for (double s : {-margin, margin}) {
                std::vector<double> probe = x;
                probe[j] += s;
                inside = inside && f.evaluate(probe).defined;
            }
        }
        if (!inside) {
            continue;
        }
        std::vector<double> vx = dir;
        vx.insert(vx.end(), x.begin(), x.end());
        auto exact = df.evaluate(vx);
        if (!exact.defined || exact.fault) {
            return Verdict::failure("derivative undefined where the map is defined", vx);
        }
        std::vector<double> approx, coarse;
        try {
            approx = finite_diff(f, x, dir, h);
            coarse = finite_diff(f, x, dir, 2 * h);
        } catch (const OutOfDomain&) {
            continue;
        }
        // Near a pole the quotient has not converged at this step; such a
        // point says nothing about the derivative.
        bool converged = true;
        for (std::size_t i = 0; i < approx.size(); ++i) {
            converged = converged && residual(approx[i], coarse[i], fd) <= rel;
        }
        if (!converged) {
            continue;
        }
        ++accepted;
        for (std::size_t i = 0; i < approx.size(); ++i) {
            double r = residual(exact.values[i], approx[i], fd);
            if (r > v.worst_residual) {
                v.worst_residual = r;
                if (r > rel) {
                    v.status = Status::fail;
                    v.witness = vx;
                    v.detail = "derivative disagrees with central differences in coordinate " + std::to_string(i);
                }
            }
        }
    }
    if (v.status == Status::pass && accepted < cfg.samples) {
        v.status = Status::starved;
        v.detail = "only " + std::to_string(accepted) + " interior points found";
    }
    return v;
}

}  // namespace gcdc
