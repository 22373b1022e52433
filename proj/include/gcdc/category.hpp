#pragma once

#include <cstddef>
#include <limits>

namespace gcdc {

/// Order of a map that carries no truncation (base maps, infinite jets).
inline constexpr std::size_t unbounded_order = std::numeric_limits<std::size_t>::max();

/// Commutative monoid (A, +, 0) in a category C: add: A x A -> A, zero: 1 -> A.
template <class C>
struct Monoid {
    typename C::Object carrier;
    typename C::Map add;
    typename C::Map zero;
};

}  // namespace gcdc
