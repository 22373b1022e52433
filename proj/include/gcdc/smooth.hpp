#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcdc/category.hpp"
#include "gcdc/smooth_map.hpp"
#include "gcdc/verdict.hpp"

namespace gcdc {

/// The base Cartesian restriction category: real spaces and guarded smooth
/// maps. Products are flat (R^a x R^b = R^(a+b)). `then(f, g)` is "f, then g".
struct Smooth {
    using Object = SpaceObject;
    using Map = SmoothMap;

    static Object dom(const Map& f) { return f.dom(); }
    static Object cod(const Map& f) { return f.cod(); }
    static bool same(const Object& a, const Object& b) { return a == b; }
    static Object terminal() { return {0}; }
    static Object product(std::span<const Object> factors);

    static Map identity(const Object& x);
    static Map projection(std::span<const Object> factors, std::size_t i);
    static Map tuple(const Object& dom, std::span<const Map> maps);
    static Map then(const Map& f, const Map& g);
    static Map restriction(const Map& f);
    static Map bang(const Object& x);

    static std::size_t order(const Map&) { return unbounded_order; }
    static Verdict compare(const Map& a, const Map& b, const Config& cfg, const std::string& label);
    static bool structurally_equal(const Map& a, const Map& b);
};

/// Componentwise (R^n, +, 0).
Monoid<Smooth> componentwise_monoid(const SpaceObject& carrier);

/// Pointwise sum of two parallel maps into R^n; guards conjoin.
SmoothMap pointwise_sum(const SmoothMap& a, const SmoothMap& b);

/// The zero map X -> R^n carrying the guard of `guarded` (same domain).
SmoothMap restricted_zero(const SmoothMap& guarded, std::size_t cod);

/// Choice of vector spaces L(X): classical L(X) = X, trivial L(X) = 1.
class LAssignment {
public:
    enum class Variant { classical, trivial };

    explicit LAssignment(Variant v = Variant::classical) : variant_(v) {}

    Variant variant() const { return variant_; }
    const char* name() const { return variant_ == Variant::classical ? "classical" : "trivial"; }

    SpaceObject L0(const SpaceObject& x) const { return {variant_ == Variant::classical ? x.dim : 0}; }
    Monoid<Smooth> monoid(const SpaceObject& x) const { return componentwise_monoid(L0(x)); }

private:
    Variant variant_;
};

/// D[f]: L0(X) x X -> L0(Y), direction block first. Classical: the Jacobian of
/// f at the point block applied to the direction block. Trivial: the map to
/// the terminal object. Either way the guard is guard(f) on the point block.
SmoothMap D(const SmoothMap& f, const LAssignment& L);

/// D applied n times; the domain doubles at each step.
SmoothMap iterate_D(const SmoothMap& f, std::size_t n, const LAssignment& L);

/// n-th derivative as a map L0(X)^n x X -> L0(Y), computed by differentiating
/// n times in the directions v_1..v_n in turn.
SmoothMap nested_Dn(const SmoothMap& f, std::size_t n, const LAssignment& L);

/// The same n-th derivative read off D^n(f) by feeding zeros into every block
/// except the point block and the n blocks that sit one doubling away from it.
SmoothMap literal_Dn(const SmoothMap& f, std::size_t n, const LAssignment& L);

/// Slot of each argument in the flat 2^n block layout of D^n: result[i] is
/// the block index receiving v_{i+1}, and result[n] the block receiving x.
std::vector<std::size_t> literal_slots(std::size_t n);

}  // namespace gcdc
