#include "gcdc/program.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

namespace gcdc {

namespace {

struct Key {
    Op op;
    std::uint32_t a, b, n;
    std::uint64_t c;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = static_cast<std::size_t>(k.op);
        for (std::uint64_t v : {std::uint64_t(k.a), std::uint64_t(k.b), std::uint64_t(k.n), k.c}) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace

Program::Program(std::span<const Expr> outputs) {
    std::unordered_map<const Expr::Node*, std::uint32_t> slot_of;
    std::unordered_map<Key, std::uint32_t, KeyHash> interned;

    // Iterative post-order so deep chains do not exhaust the stack.
    auto compile = [&](const Expr& root) -> std::uint32_t {
        std::vector<std::pair<Expr, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [e, expanded] = stack.back();
            stack.pop_back();
            if (slot_of.count(e.id())) {
                continue;
            }
            if (!expanded) {
                stack.push_back({e, true});
                if (e.arity() == 2) stack.push_back({e.rhs(), false});
                if (e.arity() >= 1) stack.push_back({e.lhs(), false});
                continue;
            }
            Key k{e.op(), 0, 0, 0, 0};
            Instr ins{e.op()};
            switch (e.op()) {
                case Op::var:
                    k.n = ins.n = static_cast<std::uint32_t>(e.var_index());
                    if (!any_var_ || ins.n > max_var_) max_var_ = ins.n;
                    any_var_ = true;
                    break;
                case Op::constant:
                    ins.c = e.value().value;
                    k.c = std::bit_cast<std::uint64_t>(ins.c);
                    break;
                case Op::pow:
                    k.n = ins.n = e.exponent();
                    k.a = ins.a = slot_of.at(e.lhs().id());
                    break;
                default:
                    k.a = ins.a = slot_of.at(e.lhs().id());
                    if (e.arity() == 2) k.b = ins.b = slot_of.at(e.rhs().id());
                    break;
            }
            auto [it, fresh] = interned.try_emplace(k, static_cast<std::uint32_t>(code_.size()));
            if (fresh) {
                code_.push_back(ins);
            }
            slot_of.emplace(e.id(), it->second);
        }
        return slot_of.at(root.id());
    };

    for (const Expr& e : outputs) {
        outputs_.push_back(compile(e));
    }
}

void Program::run(std::span<const double> input, std::span<double> out) const {
    if (any_var_ && max_var_ >= input.size()) {
        throw UnboundVariable("unbound variable x" + std::to_string(max_var_ + 1));
    }
    thread_local std::vector<double> r;
    r.resize(code_.size());
    constexpr double fault = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < code_.size(); ++i) {
        const Instr& in = code_[i];
        double v = 0.0;
        switch (in.op) {
            case Op::var: v = input[in.n]; break;
            case Op::constant: v = in.c; break;
            case Op::add: v = r[in.a] + r[in.b]; break;
            case Op::sub: v = r[in.a] - r[in.b]; break;
            case Op::mul: v = r[in.a] * r[in.b]; break;
            case Op::div: v = r[in.b] == 0.0 ? fault : r[in.a] / r[in.b]; break;
            case Op::pow: {
                double base = r[in.a];
                v = 1.0;
                for (std::uint32_t k = 0; k < in.n; ++k) v *= base;
                if (std::isnan(base)) v = fault;
                break;
            }
            case Op::neg: v = -r[in.a]; break;
            case Op::sin: v = std::sin(r[in.a]); break;
            case Op::cos: v = std::cos(r[in.a]); break;
            case Op::exp: v = std::exp(r[in.a]); break;
            case Op::log: v = r[in.a] > 0.0 ? std::log(r[in.a]) : fault; break;
            case Op::sqrt: v = r[in.a] > 0.0 ? std::sqrt(r[in.a]) : fault; break;
        }
        r[i] = v;
    }
    for (std::size_t i = 0; i < outputs_.size(); ++i) {
        out[i] = r[outputs_[i]];
    }
}

}  // namespace gcdc
