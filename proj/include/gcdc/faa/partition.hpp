#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gcdc {

/// Set partition of {0..n-1}: blocks ordered by least element, ascending
/// inside each block.
struct Partition {
    std::vector<std::vector<std::size_t>> blocks;

    /// One-based text, e.g. "{1,3}{2}".
    std::string to_string() const;
};

/// All set partitions of {0..n-1} in the lexicographic order of their
/// restricted growth strings. Results are cached; Bell(n) entries.
const std::vector<Partition>& enumerate_partitions(std::size_t n);

}  // namespace gcdc
