#ifndef SURVIVAL_SOCLE_HPP
#define SURVIVAL_SOCLE_HPP

#include <vector>

#include "survival/complex.hpp"

namespace survival {

struct SocleReport {
    std::vector<Monomial> generators;  // the truly isolated vertices, canonical
    std::size_t dimension = 0;         // = generators.size(), always >= 1
    bool is_gorenstein = false;
    bool is_pure_power = false;
    bool is_complete_intersection = false;
};

// The truly isolated vertices, canonically ordered. Nonempty for every
// built complex.
std::vector<Monomial> socle_generators(const SurvivalComplex& c);

std::size_t socle_dimension(const SurvivalComplex& c);

// true iff every minimal generator is a power of a single variable.
bool is_pure_power(const MonomialIdeal& ideal);

// Gorenstein == socle dimension one.
bool is_gorenstein(const SurvivalComplex& c);

// For an Artinian monomial ideal: minimally generated by exactly as many
// monomials as there are variables. Throws InvalidIdeal otherwise.
bool is_complete_intersection(const MonomialIdeal& ideal);

SocleReport socle_report(const SurvivalComplex& c);

}  // namespace survival

#endif
