#pragma once

namespace gcdc {

/// Deliberate defects that can be switched on to confirm the law suites
/// notice them. Only one is active at a time; the default is none.
enum class Mutation {
    none,
    derivative_sign,      // negate the f_{n+1} term of the jet derivative
    drop_partition_term,  // omit the single-block term of jet composition for n >= 2
    drop_guard_conjunct,  // composition forgets the guard of its second map
};

Mutation active_mutation();

class ScopedMutation {
public:
    explicit ScopedMutation(Mutation m);
    ~ScopedMutation();
    ScopedMutation(const ScopedMutation&) = delete;
    ScopedMutation& operator=(const ScopedMutation&) = delete;

private:
    Mutation previous_;
};

}  // namespace gcdc
