#ifndef SURVIVAL_ERRORS_HPP
#define SURVIVAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace survival {

// Two monomials (or a monomial and an ideal) from different variable contexts.
struct ContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A generating set that violates the ideal contract (constant or degree-1
// generator, empty set, or a non-Artinian ideal where one is required).
struct InvalidIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured size cap (vertices, edges, facets, search nodes) was exceeded.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-text syntax or semantic error, with a 1-based source position.
struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;

    ParseError(const std::string& msg, std::size_t line_, std::size_t col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) +
                             ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

}  // namespace survival

#endif
