#ifndef SURVIVAL_TEST_HELPERS_HPP
#define SURVIVAL_TEST_HELPERS_HPP

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "survival/builder.hpp"
#include "survival/complex.hpp"
#include "survival/io.hpp"
#include "survival/monomial.hpp"

namespace survival::testing {

inline VarContext ctx(std::vector<std::string> names) {
    return VarContext(std::move(names));
}

inline Monomial mono(std::vector<unsigned> exps) { return Monomial(std::move(exps)); }

inline std::string fixture_path(const std::string& name) {
    return std::string(SURVIVAL_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline SurvivalComplex complex_from_fixture(const std::string& name) {
    auto doc = parse_ideal(read_fixture(name));
    return build_complex(enumerate_survivors(minimalize(doc.context, doc.generators)));
}

// Independent socle oracle: survivors annihilated by every variable.
// Deliberately bypasses the complex and its classification.
inline std::vector<Monomial> oracle_socle(const QuotientRing& ring) {
    const std::size_t n = ring.context().size();
    std::vector<Monomial> out;
    for (const auto& m : ring.survivors) {
        bool killed = true;
        for (std::size_t i = 0; i < n && killed; ++i) {
            std::vector<unsigned> e(n, 0);
            e[i] = 1;
            killed = ring.ideal.contains(multiply(m, Monomial(std::move(e))));
        }
        if (killed) out.push_back(m);
    }
    return out;
}

// Independent facet oracle: exhaustive search over all vertex subsets.
// Only usable for small complexes.
inline std::vector<Face> oracle_facets(const SurvivalComplex& c) {
    const auto& vs = c.vertices();
    const auto& ideal = c.ring().ideal;
    const std::size_t n = vs.size();

    auto survives = [&](unsigned long mask) {
        Monomial p(std::vector<unsigned>(c.context().size(), 0));
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) p = multiply(p, vs[i]);
        return !ideal.contains(p);
    };

    std::vector<unsigned long> faces;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask)
        if (survives(mask)) faces.push_back(mask);

    std::vector<Face> out;
    for (unsigned long f : faces) {
        bool maximal = std::none_of(faces.begin(), faces.end(), [&](unsigned long g) {
            return g != f && (g & f) == f;
        });
        if (!maximal) continue;
        Face face;
        for (std::size_t i = 0; i < n; ++i)
            if (f >> i & 1) face.push_back(i);
        out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Random Artinian monomial ideal: pure-power generators with exponents in
// [2, max_exp] for each variable, plus up to `extra` random generators of
// degree >= 2 inside the exponent box.
inline MonomialIdeal random_artinian_ideal(std::mt19937& rng, std::size_t max_vars = 3,
                                           unsigned max_exp = 4, std::size_t extra = 4) {
    std::uniform_int_distribution<std::size_t> nv(1, max_vars);
    const std::size_t n = nv(rng);
    static const std::vector<std::string> pool = {"x", "y", "z"};
    VarContext vc(std::vector<std::string>(pool.begin(), pool.begin() + n));

    std::uniform_int_distribution<unsigned> pp(2, max_exp);
    std::vector<unsigned> bounds(n);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
        bounds[i] = pp(rng);
        std::vector<unsigned> e(n, 0);
        e[i] = bounds[i];
        gens.emplace_back(std::move(e));
    }
    std::uniform_int_distribution<std::size_t> ne(0, extra);
    std::size_t k = ne(rng);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<unsigned> e(n);
        for (std::size_t i = 0; i < n; ++i)
            e[i] = std::uniform_int_distribution<unsigned>(0, bounds[i])(rng);
        Monomial m(std::move(e));
        if (m.degree() >= 2) gens.push_back(std::move(m));
    }
    return minimalize(std::move(vc), std::move(gens));
}

// Strictly decreasing staircase of exponent pairs: always an antichain.
inline std::vector<std::pair<unsigned, unsigned>> random_staircase(std::mt19937& rng,
                                                                   unsigned max_exp = 5) {
    std::uniform_int_distribution<std::size_t> nk(1, 4);
    std::size_t k = nk(rng);
    std::set<unsigned> xs, ys;
    while (xs.size() < k) xs.insert(std::uniform_int_distribution<unsigned>(0, max_exp)(rng));
    while (ys.size() < k) ys.insert(std::uniform_int_distribution<unsigned>(0, max_exp)(rng));
    std::vector<unsigned> xv(xs.begin(), xs.end());
    std::vector<unsigned> yv(ys.rbegin(), ys.rend());  // descending
    std::vector<std::pair<unsigned, unsigned>> pts;
    for (std::size_t i = 0; i < k; ++i) pts.emplace_back(xv[i], yv[i]);
    // both variables must occur somewhere
    if (std::all_of(pts.begin(), pts.end(), [](auto p) { return p.first == 0; }))
        pts.back().first = 1;
    if (std::all_of(pts.begin(), pts.end(), [](auto p) { return p.second == 0; }))
        pts.front().second = 1;
    return pts;
}

inline SocleSpec random_planar_spec(std::mt19937& rng, unsigned max_exp = 5) {
    auto pts = random_staircase(rng, max_exp);
    std::vector<Monomial> ms;
    for (auto [a, b] : pts) ms.push_back(mono({a, b}));
    return make_socle_spec(ctx({"x", "y"}), std::move(ms));
}

inline SocleSpec random_slab_spec(std::mt19937& rng, unsigned max_exp = 4) {
    std::uniform_int_distribution<std::size_t> na(0, 2);
    std::size_t axis = na(rng);
    unsigned l = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    auto pts = random_staircase(rng, max_exp);
    std::size_t xi = axis == 0 ? 1 : 0;
    std::size_t yi = axis == 2 ? 1 : 2;
    std::vector<Monomial> ms;
    for (auto [a, b] : pts) {
        std::vector<unsigned> e(3, 0);
        e[axis] = l;
        e[xi] = a;
        e[yi] = b;
        ms.emplace_back(std::move(e));
    }
    return make_socle_spec(ctx({"x", "y", "z"}), std::move(ms));
}

// Random antichain over up to `max_vars` variables: maximal elements of a
// random monomial set, restricted to the variables that actually occur.
inline SocleSpec random_general_spec(std::mt19937& rng, std::size_t max_vars = 3,
                                     unsigned max_exp = 4) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vars)(rng);
    std::set<Monomial> candidates;
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    while (candidates.size() < k) {
        std::vector<unsigned> e(n);
        for (auto& x : e) x = std::uniform_int_distribution<unsigned>(0, max_exp)(rng);
        Monomial m(std::move(e));
        if (!m.is_constant()) candidates.insert(std::move(m));
    }
    std::vector<Monomial> maximal;
    for (const auto& m : candidates) {
        bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                     [&](const Monomial& q) {
                                         return q != m && divides(m, q);
                                     });
        if (!dominated) maximal.push_back(m);
    }
    // drop unused variables so the context-coverage invariant holds
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < n; ++i)
        if (std::any_of(maximal.begin(), maximal.end(),
                        [&](const Monomial& m) { return m.exps[i] > 0; }))
            used.push_back(i);
    static const std::vector<std::string> pool = {"x", "y", "z"};
    std::vector<std::string> names;
    for (std::size_t i : used) names.push_back(pool[i]);
    std::vector<Monomial> ms;
    for (const auto& m : maximal) {
        std::vector<unsigned> e;
        for (std::size_t i : used) e.push_back(m.exps[i]);
        ms.emplace_back(std::move(e));
    }
    return make_socle_spec(ctx(std::move(names)), std::move(ms));
}

}  // namespace survival::testing

#endif
