#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcdc/expr.hpp"
#include "gcdc/guard.hpp"
#include "gcdc/smooth_map.hpp"

namespace gcdc {

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, unbound_variable, wrong_arity };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

struct ParsedMap {
    std::vector<std::string> params;
    SmoothMap map;
};

/// Parses `fn(a, b) -> (e1, e2) where g1 > 0 && g2 != 0`. Denominators and
/// log/sqrt arguments add their domain atoms after the explicit ones.
/// Expressions are kept as written (no rewriting).
ParsedMap parse_map(const std::string& text);

Expr parse_expr(const std::string& text, const std::vector<std::string>& params);

/// Parses the text after `where`.
Guard parse_guard(const std::string& text, const std::vector<std::string>& params);

}  // namespace gcdc
