#include "gcdc/faa/partition.hpp"

#include <map>
#include <mutex>

namespace gcdc {

std::string Partition::to_string() const {
    std::string out;
    for (const auto& b : blocks) {
        out += "{";
        for (std::size_t i = 0; i < b.size(); ++i) {
            out += (i ? "," : "") + std::to_string(b[i] + 1);
        }
        out += "}";
    }
    return out;
}

namespace {

void grow(std::size_t n, std::vector<std::size_t>& label, std::size_t used, std::vector<Partition>& out) {
    if (label.size() == n) {
        Partition p;
        p.blocks.resize(used);
        for (std::size_t i = 0; i < n; ++i) {
            p.blocks[label[i]].push_back(i);
        }
        out.push_back(std::move(p));
        return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
        label.push_back(b);
        grow(n, label, b == used ? used + 1 : used, out);
        label.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& enumerate_partitions(std::size_t n) {
    static std::map<std::size_t, std::vector<Partition>> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<std::size_t> label;
        grow(n, label, 0, out);
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

}  // namespace gcdc
