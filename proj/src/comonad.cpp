#include "gcdc/faa/comonad.hpp"

namespace gcdc {

FaaObject<Smooth> smooth_faa_object(const SpaceObject& x, const LAssignment& L) {
    return FaaObject<Smooth>{L.monoid(x), x};
}

Jet<Smooth> cofree(const SmoothMap& f, const LAssignment& L, std::size_t order) {
    Jet<Smooth> j{smooth_faa_object(f.dom(), L), smooth_faa_object(f.cod(), L), f, {}, false};
    for (std::size_t n = 1; n <= order; ++n) {
        j.derivs.push_back(nested_Dn(f, n, L));
    }
    return j;
}

Jet<Smooth> cofree_literal(const SmoothMap& f, const LAssignment& L, std::size_t order) {
    Jet<Smooth> j{smooth_faa_object(f.dom(), L), smooth_faa_object(f.cod(), L), f, {}, false};
    for (std::size_t n = 1; n <= order; ++n) {
        j.derivs.push_back(literal_Dn(f, n, L));
    }
    return j;
}

}  // namespace gcdc
