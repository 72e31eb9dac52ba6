#include "survival/socle.hpp"

#include <algorithm>
#include <stdexcept>

namespace survival {

std::vector<Monomial> socle_generators(const SurvivalComplex& c) {
    std::vector<Monomial> out;
    const auto& vs = c.vertices();
    const auto& cls = c.classification();
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (cls[i] == VertexClass::TrulyIsolated) out.push_back(vs[i]);
    if (out.empty())
        throw std::logic_error("complex has no truly isolated vertex");
    return out;
}

std::size_t socle_dimension(const SurvivalComplex& c) {
    return socle_generators(c).size();
}

bool is_pure_power(const MonomialIdeal& ideal) {
    return std::all_of(ideal.min_gens().begin(), ideal.min_gens().end(),
                       [](const Monomial& g) { return g.support_size() == 1; });
}

bool is_gorenstein(const SurvivalComplex& c) {
    return socle_dimension(c) == 1;
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
    if (!ideal.is_artinian())
        throw InvalidIdeal("complete-intersection test requires an Artinian ideal");
    return ideal.min_gens().size() == ideal.context().size();
}

SocleReport socle_report(const SurvivalComplex& c) {
    SocleReport r;
    r.generators = socle_generators(c);
    r.dimension = r.generators.size();
    r.is_gorenstein = r.dimension == 1;
    r.is_pure_power = is_pure_power(c.ring().ideal);
    r.is_complete_intersection = is_complete_intersection(c.ring().ideal);
    return r;
}

}  // namespace survival
