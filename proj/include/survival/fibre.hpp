#ifndef SURVIVAL_FIBRE_HPP
#define SURVIVAL_FIBRE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "survival/complex.hpp"

namespace survival {

struct FibreFactorization {
    std::vector<QuotientRing> factors;           // over disjoint sub-contexts
    std::vector<std::size_t> variable_partition; // original var index -> factor index
};

// Fibre product of >= 2 rings over pairwise-disjoint variable names:
// the combined context, all factor generators, and every cross-factor
// variable product.
QuotientRing fibre_product(std::span<const QuotientRing> rings,
                           std::size_t max_vertices = kDefaultMaxVertices);

// Decomposes along the variable graph (x_i ~ x_j iff x_i*x_j survives).
// Each factor keeps the minimal generators supported on its variable
// block; cross-block generators are exactly the pairwise variable
// products and are re-added by fibre_product.
FibreFactorization decompose(const SurvivalComplex& c);

// true iff every cross-block pair of variables multiplies into the ideal.
bool check_pairwise_products(const SurvivalComplex& c,
                             std::span<const std::size_t> variable_partition);

// Outcome of the pure-power factorization: either a factorization whose
// factor ideals are all pure power, or a refusal naming a variable shared
// by two socle generators. Refusal is a normal outcome.
struct PurePowerFactorization {
    std::optional<FibreFactorization> factorization;
    std::string refusal;

    explicit operator bool() const { return factorization.has_value(); }
};

PurePowerFactorization pure_power_factorization(const SurvivalComplex& c);

}  // namespace survival

#endif
