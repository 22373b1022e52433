#include "gcdc/mutation.hpp"

#include <atomic>

namespace gcdc {

namespace {
std::atomic<Mutation> current{Mutation::none};
}

Mutation active_mutation() { return current.load(std::memory_order_relaxed); }

ScopedMutation::ScopedMutation(Mutation m) : previous_(current.exchange(m)) {}

ScopedMutation::~ScopedMutation() { current.store(previous_); }

}  // namespace gcdc
