#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcdc/smooth.hpp"
#include "gcdc/verdict.hpp"

namespace gcdc {

/// The smooth category with a chosen L, in the shape AxiomChecker expects.
class SmoothModel {
public:
    using Object = SpaceObject;
    using Map = SmoothMap;

    explicit SmoothModel(LAssignment L) : L_(L) {}

    const LAssignment& L() const { return L_; }

    Object dom(const Map& f) const { return f.dom(); }
    Object cod(const Map& f) const { return f.cod(); }
    Object terminal() const { return Smooth::terminal(); }
    Object product(const std::vector<Object>& fs) const { return Smooth::product(fs); }
    Map projection(const std::vector<Object>& fs, std::size_t i) const { return Smooth::projection(fs, i); }
    Map tuple(const Object& dom, const std::vector<Map>& ms) const { return Smooth::tuple(dom, ms); }
    Map then(const Map& f, const Map& g) const { return Smooth::then(f, g); }
    Map identity(const Object& x) const { return Smooth::identity(x); }
    Map restriction(const Map& f) const { return Smooth::restriction(f); }
    Map bang(const Object& x) const { return Smooth::bang(x); }

    Object L0(const Object& x) const { return L_.L0(x); }
    Map add(const Object& x) const { return L_.monoid(x).add; }
    Map zero(const Object& x) const { return L_.monoid(x).zero; }
    Map D(const Map& f) const { return gcdc::D(f, L_); }

    Verdict compare(const Map& a, const Map& b, const Config& cfg, const std::string& label) const {
        return Smooth::compare(a, b, cfg, label);
    }
    bool same_object(const Object& a, const Object& b) const { return a == b; }
    bool same_map(const Map& a, const Map& b) const { return structurally_equal(a, b); }
    std::string describe(const Object& x) const { return "R^" + std::to_string(x.dim); }

    /// All pairs of spaces with total dimension at most 6.
    std::vector<std::pair<Object, Object>> small_object_pairs() const;

    /// Two maps X -> L0(Y) for the additivity lemma: f itself (or its
    /// restricted map to the point when L0(Y) = 1) and a second one.
    std::pair<Map, Map> lemma_maps(const Map& f) const;

    /// Checks that the guard of a derivative D f: L0(X) x X -> L0(Y) only
    /// mentions the point block.
    Verdict guard_on_point_block(const Map& df, const Object& x) const;

private:
    LAssignment L_;
};

/// Componentwise sin on R^n.
SmoothMap componentwise_sin(std::size_t n);

}  // namespace gcdc
