#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "survival/complex.hpp"

using namespace survival;
using namespace survival::testing;

namespace {

SurvivalComplex fig1() {
    return build_complex(enumerate_survivors(
        minimalize(ctx({"x", "y"}), {mono({3, 0}), mono({0, 3})})));
}

std::set<std::pair<Monomial, Monomial>> edge_monomials(const SurvivalComplex& c) {
    std::set<std::pair<Monomial, Monomial>> out;
    for (const auto& [i, j] : c.edges())
        out.insert({c.vertices()[i], c.vertices()[j]});
    return out;
}

}  // namespace

TEST_CASE("figure-1 complex: 8 vertices, 8 edges, one truly isolated point") {
    auto c = fig1();
    CHECK(c.vertices().size() == 8);
    CHECK(c.edges().size() == 8);

    auto x = mono({1, 0}), y = mono({0, 1}), xy = mono({1, 1});
    auto x2 = mono({2, 0}), y2 = mono({0, 2}), xy2 = mono({1, 2});
    auto x2y = mono({2, 1}), x2y2 = mono({2, 2});
    std::set<std::pair<Monomial, Monomial>> expected;
    auto add = [&](Monomial a, Monomial b) {
        if (b < a) std::swap(a, b);
        expected.insert({a, b});
    };
    add(x, y);
    add(x, xy);
    add(y, xy);
    add(x, y2);
    add(x, xy2);
    add(y, x2);
    add(y, x2y);
    add(x2, y2);
    CHECK(edge_monomials(c) == expected);

    CHECK(classify_vertex(c, x2y2) == VertexClass::TrulyIsolated);
    CHECK(classify_vertex(c, x) == VertexClass::Connected);
}

TEST_CASE("k[x]/(x^3): two points, x quasi-isolated") {
    auto c = build_complex(enumerate_survivors(minimalize(ctx({"x"}), {mono({3})})));
    CHECK(c.vertices() == std::vector<Monomial>{mono({1}), mono({2})});
    CHECK(c.edges().empty());
    CHECK(classify_vertex(c, mono({1})) == VertexClass::QuasiIsolated);
    CHECK(classify_vertex(c, mono({2})) == VertexClass::TrulyIsolated);

    auto comps = c.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].kind == ComponentKind::QuasiTriviallyConnected);
    CHECK(comps[1].kind == ComponentKind::TriviallyConnected);
}

TEST_CASE("k[x]/(x^2): single truly isolated vertex") {
    auto c = build_complex(enumerate_survivors(minimalize(ctx({"x"}), {mono({2})})));
    CHECK(c.vertices() == std::vector<Monomial>{mono({1})});
    CHECK(classify_vertex(c, mono({1})) == VertexClass::TrulyIsolated);
    REQUIRE(c.components().size() == 1);
    CHECK(c.components()[0].kind == ComponentKind::TriviallyConnected);
}

TEST_CASE("is_face checks product survival") {
    auto c = fig1();
    std::vector<Monomial> tri = {mono({1, 0}), mono({0, 1}), mono({1, 1})};
    CHECK(is_face(c, tri));  // the shaded triangle, product x^2y^2
    std::vector<Monomial> dead = {mono({1, 0}), mono({0, 1}), mono({0, 2})};
    CHECK_FALSE(is_face(c, dead));  // product xy^3 = 0
    std::vector<Monomial> single = {mono({2, 2})};
    CHECK(is_face(c, single));
    std::vector<Monomial> empty;
    CHECK(is_face(c, empty));
    std::vector<Monomial> nonvertex = {mono({3, 0})};
    CHECK_THROWS_AS(is_face(c, nonvertex), std::invalid_argument);
}

TEST_CASE("facets of the figure-1 complex") {
    auto c = fig1();
    auto fs = facets(c);
    CHECK(fs == oracle_facets(c));
    CHECK(fs.size() == 7);
    // the triangle {x, y, xy} is among them
    Face tri = {c.vertex_index(mono({0, 1})), c.vertex_index(mono({1, 0})),
                c.vertex_index(mono({1, 1}))};
    std::sort(tri.begin(), tri.end());
    CHECK(std::find(fs.begin(), fs.end(), tri) != fs.end());
    // {x^2 y^2} is a singleton facet
    Face iso = {c.vertex_index(mono({2, 2}))};
    CHECK(std::find(fs.begin(), fs.end(), iso) != fs.end());
}

TEST_CASE("facets of small rings match the exhaustive oracle") {
    auto single = build_complex(
        enumerate_survivors(minimalize(ctx({"x"}), {mono({2})})));
    CHECK(facets(single) == std::vector<Face>{{0}});

    auto cube = build_complex(enumerate_survivors(minimalize(
        ctx({"x", "y", "z"}), {mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2})})));
    CHECK(facets(cube) == oracle_facets(cube));
    // the full vertex set is not a face: the total product lands in the ideal
    CHECK_FALSE(is_face(cube, cube.vertices()));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto c = build_complex(enumerate_survivors(random_artinian_ideal(rng, 2, 3, 2)));
        if (c.vertices().size() > 16) continue;
        CHECK(facets(c) == oracle_facets(c));
    }
}

TEST_CASE("faces are downward closed") {
    std::mt19937 rng(29);
    int checked = 0;
    while (checked < 100) {
        auto c = build_complex(enumerate_survivors(random_artinian_ideal(rng, 3, 3, 2)));
        auto fs = facets(c);
        const auto& f = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
        if (f.size() < 2) continue;
        ++checked;
        // every proper nonempty subset is a face
        for (unsigned long mask = 1; mask + 1 < (1ul << f.size()); ++mask) {
            std::vector<Monomial> sub;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask >> i & 1) sub.push_back(c.vertices()[f[i]]);
            CHECK(is_face(c, sub));
        }
    }
}

TEST_CASE("figure-2 ring has five components of the reported kinds") {
    auto c = complex_from_fixture("fig2.ideal");
    const auto& comps = c.components();
    REQUIRE(comps.size() == 5);
    std::size_t nontrivial = 0, trivial = 0, quasi = 0;
    for (const auto& comp : comps) {
        if (comp.kind == ComponentKind::Nontrivial) ++nontrivial;
        if (comp.kind == ComponentKind::TriviallyConnected) ++trivial;
        if (comp.kind == ComponentKind::QuasiTriviallyConnected) ++quasi;
    }
    CHECK(nontrivial == 2);
    CHECK(trivial == 3);
    CHECK(quasi == 0);

    // the three singleton components are x^2y^2, x^2z, w^3
    std::set<Monomial> singles;
    for (const auto& comp : comps)
        if (comp.vertices.size() == 1) singles.insert(c.vertices()[comp.vertices[0]]);
    CHECK(singles == std::set<Monomial>{mono({2, 2, 0, 0}), mono({2, 0, 1, 0}),
                                        mono({0, 0, 0, 3})});
}

TEST_CASE("figure-1 ring: one nontrivial component plus the isolated corner") {
    auto c = fig1();
    REQUIRE(c.components().size() == 2);
    std::size_t big = c.components()[0].vertices.size() == 7 ? 0 : 1;
    CHECK(c.components()[big].kind == ComponentKind::Nontrivial);
    CHECK(c.components()[big].vertices.size() == 7);
    CHECK(c.components()[1 - big].kind == ComponentKind::TriviallyConnected);
}

TEST_CASE("zero-divisor graph is the exact complement") {
    auto x3 = build_complex(enumerate_survivors(minimalize(ctx({"x"}), {mono({3})})));
    auto zd = zero_divisor_graph(x3);
    REQUIRE(zd.size() == 1);
    CHECK(x3.vertices()[zd[0].first] == mono({1}));
    CHECK(x3.vertices()[zd[0].second] == mono({2}));

    auto c = fig1();
    CHECK(zero_divisor_graph(c).size() == 28 - 8);

    auto single = build_complex(enumerate_survivors(minimalize(ctx({"x"}), {mono({2})})));
    CHECK(zero_divisor_graph(single).empty());
}

TEST_CASE("random suite: isolation and factorization properties") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = build_complex(enumerate_survivors(random_artinian_ideal(rng)));
        const auto& cls = c.classification();

        // at least one isolated point
        CHECK(std::any_of(cls.begin(), cls.end(),
                          [](VertexClass k) { return k != VertexClass::Connected; }));

        // every vertex divides some truly isolated vertex
        std::vector<Monomial> truly;
        for (std::size_t i = 0; i < cls.size(); ++i)
            if (cls[i] == VertexClass::TrulyIsolated)
                truly.push_back(c.vertices()[i]);
        for (const auto& v : c.vertices()) {
            CHECK(std::any_of(truly.begin(), truly.end(),
                              [&](const Monomial& t) { return divides(v, t); }));
        }

        // skeleton + zero-divisor graph partition all pairs
        std::size_t nv = c.vertices().size();
        CHECK(c.edges().size() + zero_divisor_graph(c).size() == nv * (nv - 1) / 2);

        // nontrivial/quasi-trivial components never share a variable
        const auto& comps = c.components();
        std::vector<std::set<std::size_t>> vars(comps.size());
        for (std::size_t k = 0; k < comps.size(); ++k)
            for (std::size_t v : comps[k].vertices)
                for (std::size_t i = 0; i < c.context().size(); ++i)
                    if (c.vertices()[v].exps[i] > 0) vars[k].insert(i);
        for (std::size_t a = 0; a < comps.size(); ++a) {
            if (comps[a].kind == ComponentKind::TriviallyConnected) continue;
            for (std::size_t b = a + 1; b < comps.size(); ++b) {
                if (comps[b].kind == ComponentKind::TriviallyConnected) continue;
                for (std::size_t i : vars[a]) CHECK(vars[b].count(i) == 0);
            }
        }
    }
}

TEST_CASE("pure power rings have exactly one truly isolated point") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        static const std::vector<std::string> pool = {"x", "y", "z"};
        std::vector<Monomial> gens;
        std::vector<unsigned> corner(n);
        for (std::size_t i = 0; i < n; ++i) {
            unsigned a = std::uniform_int_distribution<unsigned>(2, 5)(rng);
            corner[i] = a - 1;
            std::vector<unsigned> e(n, 0);
            e[i] = a;
            gens.emplace_back(std::move(e));
        }
        auto c = build_complex(enumerate_survivors(minimalize(
            VarContext(std::vector<std::string>(pool.begin(), pool.begin() + n)),
            std::move(gens))));
        std::vector<Monomial> truly;
        for (std::size_t i = 0; i < c.vertices().size(); ++i)
            if (c.classification()[i] == VertexClass::TrulyIsolated)
                truly.push_back(c.vertices()[i]);
        REQUIRE(truly.size() == 1);
        CHECK(truly[0] == Monomial(corner));
    }
}

TEST_CASE("k[x]/(x^3) is the only pure power complex with a quasi-isolated point") {
    static const std::vector<std::string> pool = {"x", "y", "z"};
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<unsigned> exps(n, 2);
        for (;;) {
            std::vector<Monomial> gens;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<unsigned> e(n, 0);
                e[i] = exps[i];
                gens.emplace_back(std::move(e));
            }
            auto c = build_complex(enumerate_survivors(minimalize(
                VarContext(std::vector<std::string>(pool.begin(), pool.begin() + n)),
                std::move(gens))));
            bool has_quasi = std::any_of(
                c.classification().begin(), c.classification().end(),
                [](VertexClass k) { return k == VertexClass::QuasiIsolated; });
            CHECK(has_quasi == (n == 1 && exps[0] == 3));

            std::size_t i = n;
            bool done = true;
            while (i > 0) {
                --i;
                if (exps[i] < 5) {
                    ++exps[i];
                    done = false;
                    break;
                }
                exps[i] = 2;
            }
            if (done) break;
        }
    }
}

TEST_CASE("edge cap is enforced") {
    Caps caps;
    caps.max_edges = 3;
    CHECK_THROWS_AS(build_complex(enumerate_survivors(minimalize(
                        ctx({"x", "y"}), {mono({3, 0}), mono({0, 3})})),
                    caps),
                    CapExceeded);
}
