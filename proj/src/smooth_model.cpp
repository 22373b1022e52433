#include "gcdc/smooth_model.hpp"

namespace gcdc {

std::vector<std::pair<SpaceObject, SpaceObject>> SmoothModel::small_object_pairs() const {
    std::vector<std::pair<Object, Object>> out;
    for (std::size_t a = 0; a <= 6; ++a) {
        for (std::size_t b = 0; a + b <= 6; ++b) {
            out.push_back({{a}, {b}});
        }
    }
    return out;
}

std::pair<SmoothMap, SmoothMap> SmoothModel::lemma_maps(const Map& f) const {
    Object l0y = L0(f.cod());
    if (l0y == f.cod()) {
        return {f, then(f, componentwise_sin(l0y.dim))};
    }
    Map to_l0 = then(restriction(f), then(bang(f.dom()), zero(f.cod())));
    return {to_l0, then(f, then(bang(f.cod()), zero(f.cod())))};
}

Verdict SmoothModel::guard_on_point_block(const Map& df, const Object& x) const {
    std::size_t a = L0(x).dim;
    if (df.dom().dim != a + x.dim) {
        return Verdict::failure("derivative has the wrong domain");
    }
    if (!df.guard().variables_within(a, a + x.dim)) {
        return Verdict::failure("guard of the derivative mentions the direction block: " +
                                df.guard().to_string(default_names(df.dom().dim)));
    }
    return {};
}

SmoothMap componentwise_sin(std::size_t n) {
    std::vector<Expr> coords;
    for (std::size_t i = 0; i < n; ++i) {
        coords.push_back(sin(Expr::var(i)));
    }
    return SmoothMap(n, std::move(coords));
}

}  // namespace gcdc
