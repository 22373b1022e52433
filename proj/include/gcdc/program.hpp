#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcdc/expr.hpp"

namespace gcdc {

/// A straight-line tape compiled from one or more expressions, with common
/// subexpressions shared. Domain faults evaluate to NaN and propagate, so a
/// single pass yields every output and the caller inspects them afterwards.
class Program {
public:
    Program() = default;
    explicit Program(std::span<const Expr> outputs);

    std::size_t output_count() const { return outputs_.size(); }
    std::size_t instruction_count() const { return code_.size(); }

    /// Throws UnboundVariable when the tape reads past `input`.
    void run(std::span<const double> input, std::span<double> out) const;

private:
    struct Instr {
        Op op;
        std::uint32_t a = 0;
        std::uint32_t b = 0;
        std::uint32_t n = 0;  // variable index or exponent
        double c = 0.0;
    };
    std::vector<Instr> code_;
    std::vector<std::uint32_t> outputs_;
    std::uint32_t max_var_ = 0;
    bool any_var_ = false;
};

}  // namespace gcdc
