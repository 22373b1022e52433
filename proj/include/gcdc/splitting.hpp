#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcdc/smooth.hpp"
#include "gcdc/verdict.hpp"

namespace gcdc {

/// An open subset of R^n given by a restriction idempotent: identity
/// coordinates carrying the guard that cuts out the subset.
struct SplitObject {
    SpaceObject space;
    SmoothMap idem;

    static SplitObject make(std::size_t dim, const Guard& g = {});
    static SplitObject whole(std::size_t dim) { return make(dim); }

    const Guard& guard() const { return idem.guard(); }
    /// "R^n | guard".
    std::string to_string() const;
};

/// A map (X, e1) -> (Y, e2): an underlying smooth map with e1 f e2 = f.
struct SplitMap {
    SmoothMap f;
    SplitObject src;
    SplitObject dst;
};

bool same_split_object(const SplitObject& a, const SplitObject& b);

SplitMap split_identity(const SplitObject& o);
SplitMap split_then(const SplitMap& f, const SplitMap& g);
SplitMap split_restriction(const SplitMap& f);

/// e1 then f then e2 compared with f.
Verdict check_hom_condition(const SplitMap& f, const Config& cfg, const std::string& label);

/// Restriction-idempotent splitting K_r of the smooth model with the
/// transported differential structure L(X, e) = (L(X), 1), D(f) = D(f).
class SplitModel {
public:
    using Object = SplitObject;
    using Map = SplitMap;

    explicit SplitModel(LAssignment L) : L_(L) {}

    const LAssignment& L() const { return L_; }

    Object dom(const Map& f) const { return f.src; }
    Object cod(const Map& f) const { return f.dst; }
    Object terminal() const { return SplitObject::whole(0); }
    Object product(const std::vector<Object>& fs) const;
    Map projection(const std::vector<Object>& fs, std::size_t i) const;
    Map tuple(const Object& dom, const std::vector<Map>& ms) const;
    Map then(const Map& f, const Map& g) const { return split_then(f, g); }
    Map identity(const Object& x) const { return split_identity(x); }
    Map restriction(const Map& f) const { return split_restriction(f); }
    Map bang(const Object& x) const;

    Object L0(const Object& x) const;
    Map add(const Object& x) const;
    Map zero(const Object& x) const;
    Map D(const Map& f) const;

    Verdict compare(const Map& a, const Map& b, const Config& cfg, const std::string& label) const;
    bool same_object(const Object& a, const Object& b) const { return same_split_object(a, b); }
    bool same_map(const Map& a, const Map& b) const;
    std::string describe(const Object& x) const { return x.to_string(); }
    std::vector<std::pair<Object, Object>> small_object_pairs() const;
    std::pair<Map, Map> lemma_maps(const Map& f) const;
    Verdict guard_on_point_block(const Map& df, const Object& x) const;

private:
    LAssignment L_;
};

/// A corpus map restricted to an open subset: e then f, landing in the whole
/// codomain.
SplitMap restrict_to(const SmoothMap& f, const SplitObject& src);

}  // namespace gcdc
