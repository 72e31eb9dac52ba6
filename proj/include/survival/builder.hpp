#ifndef SURVIVAL_BUILDER_HPP
#define SURVIVAL_BUILDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "survival/complex.hpp"

namespace survival {

/**
 * A prescribed set of socle monomials: a divisibility antichain over
 * exactly the variables that occur in it. Input to the building
 * algorithms.
 */
struct SocleSpec {
    VarContext context;
    std::vector<Monomial> monomials;  // canonical (lex) order
};

// nullopt when the spec is valid; otherwise a message naming the
// offending pair or unused variable.
std::optional<std::string> validate_spec(const SocleSpec& spec);

// Normalizes (sorts, dedups) and validates; throws std::invalid_argument
// on violation.
SocleSpec make_socle_spec(VarContext ctx, std::vector<Monomial> monomials);

// Inexact n-variable construction: pure-power bounds one past the maximum
// exponents, every variable times every member, and products of variable
// pairs that never co-occur. The result's socle contains the spec but may
// be larger.
QuotientRing build_general(const SocleSpec& spec,
                           std::size_t max_vertices = kDefaultMaxVertices);

// Exact construction for specs over at most two variables: bounds plus a
// staircase generator for each consecutive pair in decreasing order of
// the second variable's exponent.
QuotientRing build_planar(const SocleSpec& spec,
                          std::size_t max_vertices = kDefaultMaxVertices);

struct SlabBuild {
    QuotientRing ring;
    std::size_t slab_axis;  // context index of the common-exponent variable
    unsigned slab_degree;
};

// Exact construction for three-variable specs of slab form: all members
// share a common positive exponent on one variable (the slab axis; ties
// resolved by context order), and the remaining two-variable parts form
// an antichain handled by the planar rule.
SlabBuild build_slab(const SocleSpec& spec,
                     std::size_t max_vertices = kDefaultMaxVertices);

// true iff the truly isolated vertices of the ring's complex equal the
// spec's monomials as sets.
bool realizes_exactly(const QuotientRing& ring, const SocleSpec& spec);

inline constexpr std::size_t kDefaultSearchNodeCap = 20000000;

// Exhaustive search over all Artinian minimal monomial ideals whose
// generator exponents stay within [0, bound] per variable, returning
// every ideal whose complex realizes the spec exactly. The at-most-one
// result is the uniqueness theorem; callers assert it.
std::vector<MonomialIdeal> uniqueness_search(
    const SocleSpec& spec, unsigned bound,
    std::size_t node_cap = kDefaultSearchNodeCap);

}  // namespace survival

#endif
