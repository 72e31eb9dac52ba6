#include "survival/builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "survival/socle.hpp"

namespace survival {

namespace {

Monomial variable_monomial(std::size_t i, std::size_t n) {
    std::vector<unsigned> e(n, 0);
    e[i] = 1;
    return Monomial(std::move(e));
}

std::vector<unsigned> max_exponents(const SocleSpec& spec) {
    std::vector<unsigned> mx(spec.context.size(), 0);
    for (const auto& m : spec.monomials)
        for (std::size_t i = 0; i < mx.size(); ++i)
            mx[i] = std::max(mx[i], m.exps[i]);
    return mx;
}

// Staircase generators of the planar rule, computed on (x,y) exponent
// pairs extracted from the spec members. Emits into `gens` as monomials
// of the full context, with xi/yi naming the two active coordinates.
void planar_generators(std::vector<std::pair<unsigned, unsigned>> pts,
                       std::size_t xi, std::size_t yi, std::size_t nvars,
                       std::vector<Monomial>& gens) {
    // decreasing y-degree; the antichain property makes y-degrees distinct
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    for (std::size_t k = 1; k < pts.size(); ++k)
        if (pts[k - 1].second == pts[k].second)
            throw std::logic_error("antichain spec produced a tied y-degree");

    unsigned t = 0, s = 0;
    for (const auto& [a, b] : pts) {
        t = std::max(t, a);
        s = std::max(s, b);
    }
    std::vector<unsigned> e(nvars, 0);
    e[xi] = t + 1;
    gens.emplace_back(e);
    e[xi] = 0;
    e[yi] = s + 1;
    gens.emplace_back(e);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        std::vector<unsigned> g(nvars, 0);
        g[xi] = pts[k - 1].first + 1;
        g[yi] = pts[k].second + 1;
        gens.emplace_back(std::move(g));
    }
}

}  // namespace

std::optional<std::string> validate_spec(const SocleSpec& spec) {
    if (spec.monomials.empty()) return "socle spec is empty";
    const std::size_t n = spec.context.size();
    for (const auto& m : spec.monomials) {
        if (m.nvars() != n) return "monomial length does not match context";
        if (m.is_constant()) return "socle spec contains the constant monomial";
    }
    for (const auto& a : spec.monomials) {
        for (const auto& b : spec.monomials) {
            if (&a != &b && divides(a, b))
                return "antichain violation: " + to_string(spec.context, a) +
                       " divides " + to_string(spec.context, b);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool used = std::any_of(spec.monomials.begin(), spec.monomials.end(),
                                [&](const Monomial& m) { return m.exps[i] > 0; });
        if (!used)
            return "variable " + spec.context.name(i) + " occurs in no spec monomial";
    }
    return std::nullopt;
}

SocleSpec make_socle_spec(VarContext ctx, std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()),
                    monomials.end());
    SocleSpec spec{std::move(ctx), std::move(monomials)};
    if (auto violation = validate_spec(spec))
        throw std::invalid_argument(*violation);
    return spec;
}

QuotientRing build_general(const SocleSpec& spec, std::size_t max_vertices) {
    if (auto violation = validate_spec(spec))
        throw std::invalid_argument(*violation);
    const std::size_t n = spec.context.size();
    const auto mx = max_exponents(spec);

    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<unsigned> e(n, 0);
        e[i] = mx[i] + 1;
        gens.emplace_back(std::move(e));
    }
    for (const auto& q : spec.monomials)
        for (std::size_t j = 0; j < n; ++j)
            gens.push_back(multiply(q, variable_monomial(j, n)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool together = std::any_of(
                spec.monomials.begin(), spec.monomials.end(),
                [&](const Monomial& q) { return q.exps[i] > 0 && q.exps[j] > 0; });
            if (together) continue;
            std::vector<unsigned> e(n, 0);
            e[i] = e[j] = 1;
            gens.emplace_back(std::move(e));
        }
    }
    return enumerate_survivors(minimalize(spec.context, std::move(gens)),
                               max_vertices);
}

QuotientRing build_planar(const SocleSpec& spec, std::size_t max_vertices) {
    if (auto violation = validate_spec(spec))
        throw std::invalid_argument(*violation);
    const std::size_t n = spec.context.size();
    if (n > 2)
        throw std::invalid_argument("planar construction takes at most two variables");

    std::vector<Monomial> gens;
    if (n == 1) {
        gens.emplace_back(std::vector<unsigned>{max_exponents(spec)[0] + 1});
    } else {
        std::vector<std::pair<unsigned, unsigned>> pts;
        for (const auto& m : spec.monomials) pts.emplace_back(m.exps[0], m.exps[1]);
        planar_generators(std::move(pts), 0, 1, 2, gens);
    }
    return enumerate_survivors(minimalize(spec.context, std::move(gens)),
                               max_vertices);
}

SlabBuild build_slab(const SocleSpec& spec, std::size_t max_vertices) {
    if (auto violation = validate_spec(spec))
        throw std::invalid_argument(*violation);
    if (spec.context.size() != 3)
        throw std::invalid_argument("slab construction takes exactly three variables");

    // first axis (in context order) carrying a common positive exponent
    std::optional<std::size_t> axis;
    for (std::size_t i = 0; i < 3 && !axis; ++i) {
        unsigned l = spec.monomials.front().exps[i];
        if (l == 0) continue;
        bool common = std::all_of(spec.monomials.begin(), spec.monomials.end(),
                                  [&](const Monomial& m) { return m.exps[i] == l; });
        if (common) axis = i;
    }
    if (!axis)
        throw std::invalid_argument(
            "spec is not of slab form: no variable has a common positive exponent");

    const unsigned l = spec.monomials.front().exps[*axis];
    const std::size_t xi = *axis == 0 ? 1 : 0;
    const std::size_t yi = *axis == 2 ? 1 : 2;

    std::vector<Monomial> gens;
    std::vector<unsigned> e(3, 0);
    e[*axis] = l + 1;
    gens.emplace_back(std::move(e));
    std::vector<std::pair<unsigned, unsigned>> pts;
    for (const auto& m : spec.monomials) pts.emplace_back(m.exps[xi], m.exps[yi]);
    planar_generators(std::move(pts), xi, yi, 3, gens);

    return SlabBuild{
        enumerate_survivors(minimalize(spec.context, std::move(gens)), max_vertices),
        *axis, l};
}

bool realizes_exactly(const QuotientRing& ring, const SocleSpec& spec) {
    if (ring.context() != spec.context)
        throw ContextMismatch("ring and spec are over different variables");
    auto complex = build_complex(ring);
    return socle_generators(complex) == spec.monomials;
}

namespace {

struct SearchState {
    const SocleSpec& spec;
    const std::vector<Monomial>& pool;
    std::size_t node_cap;
    std::size_t nodes = 0;
    std::vector<Monomial> chosen;
    std::vector<MonomialIdeal> found;
};

void search(SearchState& st, std::size_t next) {
    if (++st.nodes > st.node_cap)
        throw CapExceeded("uniqueness search exceeded its node cap");

    if (next == st.pool.size()) {
        if (st.chosen.empty()) return;
        MonomialIdeal ideal(st.spec.context, st.chosen);
        if (ideal.min_gens().size() != st.chosen.size()) return;  // not minimal
        if (!ideal.is_artinian()) return;
        auto ring = enumerate_survivors(ideal);
        if (realizes_exactly(ring, st.spec)) st.found.push_back(std::move(ideal));
        return;
    }

    const Monomial& cand = st.pool[next];
    bool comparable = std::any_of(
        st.chosen.begin(), st.chosen.end(), [&](const Monomial& g) {
            return divides(g, cand) || divides(cand, g);
        });
    if (!comparable) {
        st.chosen.push_back(cand);
        search(st, next + 1);
        st.chosen.pop_back();
    }
    search(st, next + 1);
}

}  // namespace

std::vector<MonomialIdeal> uniqueness_search(const SocleSpec& spec, unsigned bound,
                                             std::size_t node_cap) {
    if (auto violation = validate_spec(spec))
        throw std::invalid_argument(*violation);
    const std::size_t n = spec.context.size();

    // candidate generators: degree >= 2, exponents within the box, and not
    // dividing any prescribed socle monomial (those must survive)
    std::vector<Monomial> pool;
    Monomial cur(std::vector<unsigned>(n, 0));
    for (;;) {
        if (cur.degree() >= 2 &&
            std::none_of(spec.monomials.begin(), spec.monomials.end(),
                         [&](const Monomial& q) { return divides(cur, q); }))
            pool.push_back(cur);
        std::size_t i = n;
        bool done = true;
        while (i > 0) {
            --i;
            if (cur.exps[i] < bound) {
                ++cur.exps[i];
                done = false;
                break;
            }
            cur.exps[i] = 0;
        }
        if (done) break;
    }

    SearchState st{spec, pool, node_cap};
    search(st, 0);
    std::sort(st.found.begin(), st.found.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                  return a.min_gens() < b.min_gens();
              });
    return std::move(st.found);
}

}  // namespace survival
