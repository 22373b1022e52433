#include "gcdc/splitting.hpp"

#include <stdexcept>

#include "gcdc/sampling.hpp"
#include "gcdc/smooth_model.hpp"

namespace gcdc {

SplitObject SplitObject::make(std::size_t dim, const Guard& g) {
    SmoothMap id = Smooth::identity({dim});
    return SplitObject{{dim}, SmoothMap(dim, id.coords(), g)};
}

std::string SplitObject::to_string() const {
    return "R^" + std::to_string(space.dim) + " | " + guard().to_string(point_names(space.dim));
}

bool same_split_object(const SplitObject& a, const SplitObject& b) {
    return a.space == b.space && structurally_equal(a.guard(), b.guard());
}

SplitMap split_identity(const SplitObject& o) { return SplitMap{o.idem, o, o}; }

SplitMap split_then(const SplitMap& f, const SplitMap& g) {
    if (!same_split_object(f.dst, g.src)) {
        throw std::invalid_argument("object mismatch: " + f.dst.to_string() + " vs " + g.src.to_string());
    }
    return SplitMap{Smooth::then(f.f, g.f), f.src, g.dst};
}

SplitMap split_restriction(const SplitMap& f) { return SplitMap{Smooth::restriction(f.f), f.src, f.src}; }

Verdict check_hom_condition(const SplitMap& f, const Config& cfg, const std::string& label) {
    SmoothMap sandwich = Smooth::then(Smooth::then(f.src.idem, f.f), f.dst.idem);
    return compare_maps(sandwich, f.f, cfg, label);
}

SplitObject SplitModel::product(const std::vector<Object>& fs) const {
    Guard g;
    std::size_t offset = 0;
    for (const Object& o : fs) {
        g = guard_and(g, guard_shift(o.guard(), offset));
        offset += o.space.dim;
    }
    return SplitObject::make(offset, g);
}

SplitMap SplitModel::projection(const std::vector<Object>& fs, std::size_t i) const {
    std::vector<SpaceObject> spaces;
    for (const Object& o : fs) {
        spaces.push_back(o.space);
    }
    Object src = product(fs);
    return SplitMap{Smooth::then(src.idem, Smooth::projection(spaces, i)), src, fs[i]};
}

SplitMap SplitModel::tuple(const Object& dom, const std::vector<Map>& ms) const {
    std::vector<SmoothMap> parts;
    std::vector<Object> dsts;
    for (const Map& m : ms) {
        if (!same_split_object(m.src, dom)) {
            throw std::invalid_argument("object mismatch: tuple components need a common source");
        }
        parts.push_back(m.f);
        dsts.push_back(m.dst);
    }
    return SplitMap{Smooth::tuple(dom.space, parts), dom, product(dsts)};
}

SplitMap SplitModel::bang(const Object& x) const {
    return SplitMap{Smooth::then(x.idem, Smooth::bang(x.space)), x, terminal()};
}

SplitObject SplitModel::L0(const Object& x) const { return SplitObject::whole(L_.L0(x.space).dim); }

SplitMap SplitModel::add(const Object& x) const {
    Object a = L0(x);
    return SplitMap{L_.monoid(x.space).add, product({a, a}), a};
}

SplitMap SplitModel::zero(const Object& x) const { return SplitMap{L_.monoid(x.space).zero, terminal(), L0(x)}; }

SplitMap SplitModel::D(const Map& f) const {
    return SplitMap{gcdc::D(f.f, L_), product({L0(f.src), f.src}), L0(f.dst)};
}

Verdict SplitModel::compare(const Map& a, const Map& b, const Config& cfg, const std::string& label) const {
    if (!same_split_object(a.src, b.src) || !same_split_object(a.dst, b.dst)) {
        return Verdict::failure("object mismatch: " + a.src.to_string() + " -> " + a.dst.to_string() + " vs " +
                                b.src.to_string() + " -> " + b.dst.to_string());
    }
    return compare_maps(a.f, b.f, cfg, label);
}

bool SplitModel::same_map(const Map& a, const Map& b) const {
    return same_split_object(a.src, b.src) && same_split_object(a.dst, b.dst) && structurally_equal(a.f, b.f);
}

std::vector<std::pair<SplitObject, SplitObject>> SplitModel::small_object_pairs() const {
    std::vector<std::pair<Object, Object>> out;
    for (std::size_t a = 0; a <= 6; ++a) {
        for (std::size_t b = 0; a + b <= 6; ++b) {
            out.push_back({SplitObject::whole(a), SplitObject::whole(b)});
        }
    }
    return out;
}

std::pair<SplitMap, SplitMap> SplitModel::lemma_maps(const Map& f) const {
    Object l0y = L0(f.dst);
    if (same_split_object(l0y, f.dst)) {
        SplitMap s{componentwise_sin(l0y.space.dim), l0y, l0y};
        return {f, split_then(f, s)};
    }
    Map to_l0 = then(restriction(f), then(bang(f.src), zero(f.dst)));
    return {to_l0, then(f, then(bang(f.dst), zero(f.dst)))};
}

Verdict SplitModel::guard_on_point_block(const Map& df, const Object& x) const {
    return SmoothModel(L_).guard_on_point_block(df.f, x.space);
}

SplitMap restrict_to(const SmoothMap& f, const SplitObject& src) {
    if (f.dom() != src.space) {
        throw std::invalid_argument("dimension mismatch: map and object annotation disagree");
    }
    return SplitMap{Smooth::then(src.idem, f), src, SplitObject::whole(f.cod().dim)};
}

}  // namespace gcdc
