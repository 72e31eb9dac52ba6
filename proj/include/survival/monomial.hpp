#ifndef SURVIVAL_MONOMIAL_HPP
#define SURVIVAL_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "survival/errors.hpp"

namespace survival {

/**
 * Ordered list of distinct variable names. The order is fixed at
 * construction and determines every canonical ordering downstream
 * (exponent vectors, serialized output, vertex lists).
 */
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarContext&) const = default;

private:
    std::vector<std::string> names_;
};

/**
 * A monomial as an exponent vector relative to some VarContext.
 * The all-zero vector is the constant monomial 1; it is representable
 * (multiplicative identity) but never a complex vertex.
 *
 * Comparison is lexicographic on the exponent vector, which is the
 * canonical order used for all serialized output.
 */
struct Monomial {
    std::vector<unsigned> exps;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }
    unsigned degree() const;
    bool is_constant() const { return degree() == 0; }

    // Number of variables with a nonzero exponent.
    std::size_t support_size() const;
    // Index of the unique nonzero exponent, if support_size() == 1.
    std::optional<std::size_t> pure_power_var() const;

    auto operator<=>(const Monomial&) const = default;
};

// true iff every exponent of a is <= the corresponding exponent of b.
bool divides(const Monomial& a, const Monomial& b);

// Componentwise exponent sum, overflow-checked.
Monomial multiply(const Monomial& a, const Monomial& b);

// Canonical string form: factors in context order, "^e" omitted when
// e == 1, joined by "*". The constant monomial prints as "1".
std::string to_string(const VarContext& ctx, const Monomial& m);

/**
 * A monomial ideal held by its canonically sorted minimal generating set.
 * Generators are validated on construction: none constant, none of
 * degree 1, and redundant generators (divisible by another) are dropped.
 */
class MonomialIdeal {
public:
    MonomialIdeal(VarContext ctx, std::vector<Monomial> gens);

    const VarContext& context() const { return ctx_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }

    // true iff some minimal generator divides m. The constant monomial
    // is never contained (the ideal is proper).
    bool contains(const Monomial& m) const;

    // Structural Artinian test: every variable has a pure-power generator.
    bool is_artinian() const;

    // Exponents a_i with x_i^{a_i} a minimal generator; empty when the
    // ideal is not Artinian.
    std::optional<std::vector<unsigned>> exponent_bounds() const;

    // ideal_equals: identical canonical minimal generating sets.
    bool operator==(const MonomialIdeal& other) const {
        return ctx_ == other.ctx_ && gens_ == other.gens_;
    }

private:
    VarContext ctx_;
    std::vector<Monomial> gens_;
};

// Canonical minimalization of a raw generating set; validates the same
// contract as the MonomialIdeal constructor.
MonomialIdeal minimalize(VarContext ctx, std::vector<Monomial> gens);

// The same ideal expressed over a target context holding the same variable
// names in a (possibly) different order. Throws ContextMismatch when the
// name sets differ.
MonomialIdeal reindex(const MonomialIdeal& ideal, const VarContext& target);

/**
 * An Artinian monomial quotient ring with its surviving monomials
 * (nonconstant monomials outside the ideal) fully enumerated in
 * canonical order.
 */
struct QuotientRing {
    MonomialIdeal ideal;
    std::vector<Monomial> survivors;
    std::vector<unsigned> exponent_bounds;

    const VarContext& context() const { return ideal.context(); }
};

inline constexpr std::size_t kDefaultMaxVertices = 200000;

// Enumerates all survivors of an Artinian ideal. Throws InvalidIdeal on
// a non-Artinian input and CapExceeded when the search box is larger
// than max_vertices allows.
QuotientRing enumerate_survivors(const MonomialIdeal& ideal,
                                 std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace survival

#endif
