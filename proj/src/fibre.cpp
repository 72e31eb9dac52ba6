#include "survival/fibre.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace survival {

namespace {

// Embed a monomial of a factor context into the combined context, whose
// variable i of the factor sits at global index offsets[i].
Monomial embed(const Monomial& m, std::span<const std::size_t> offsets,
               std::size_t total) {
    std::vector<unsigned> e(total, 0);
    for (std::size_t i = 0; i < m.exps.size(); ++i) e[offsets[i]] = m.exps[i];
    return Monomial(std::move(e));
}

}  // namespace

QuotientRing fibre_product(std::span<const QuotientRing> rings,
                           std::size_t max_vertices) {
    if (rings.size() < 2)
        throw std::invalid_argument("fibre product needs at least two factors");

    std::vector<std::string> names;
    std::vector<std::size_t> factor_of;  // global var index -> factor
    for (std::size_t f = 0; f < rings.size(); ++f) {
        for (const auto& n : rings[f].context().names()) {
            names.push_back(n);
            factor_of.push_back(f);
        }
    }
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != names.size())
        throw std::invalid_argument("fibre product factors share a variable name");
    VarContext ctx(std::move(names));
    const std::size_t total = ctx.size();

    std::vector<Monomial> gens;
    std::size_t offset = 0;
    for (const auto& r : rings) {
        std::vector<std::size_t> offsets(r.context().size());
        std::iota(offsets.begin(), offsets.end(), offset);
        for (const auto& g : r.ideal.min_gens())
            gens.push_back(embed(g, offsets, total));
        offset += r.context().size();
    }
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = i + 1; j < total; ++j) {
            if (factor_of[i] == factor_of[j]) continue;
            std::vector<unsigned> e(total, 0);
            e[i] = e[j] = 1;
            gens.emplace_back(std::move(e));
        }
    }
    return enumerate_survivors(minimalize(std::move(ctx), std::move(gens)),
                               max_vertices);
}

FibreFactorization decompose(const SurvivalComplex& c) {
    const auto& ideal = c.ring().ideal;
    const std::size_t n = c.context().size();

    // union-find over the variable graph: x_i ~ x_j iff x_i*x_j survives
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<unsigned> e(n, 0);
            e[i] = e[j] = 1;
            if (!ideal.contains(Monomial(std::move(e))))
                parent[find(i)] = find(j);
        }
    }

    // blocks ordered by their smallest variable index
    std::vector<std::size_t> block_of(n);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = find(i);
        bool found = false;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (find(blocks[b].front()) == root) {
                blocks[b].push_back(i);
                block_of[i] = b;
                found = true;
                break;
            }
        }
        if (!found) {
            block_of[i] = blocks.size();
            blocks.push_back({i});
        }
    }

    // distribute minimal generators; anything mixing blocks must be a
    // pairwise variable product, which fibre_product regenerates
    std::vector<std::vector<Monomial>> factor_gens(blocks.size());
    for (const auto& g : ideal.min_gens()) {
        std::set<std::size_t> touched;
        for (std::size_t i = 0; i < n; ++i)
            if (g.exps[i] > 0) touched.insert(block_of[i]);
        if (touched.size() == 1) {
            std::size_t b = *touched.begin();
            std::vector<unsigned> e;
            e.reserve(blocks[b].size());
            for (std::size_t i : blocks[b]) e.push_back(g.exps[i]);
            factor_gens[b].emplace_back(std::move(e));
        } else if (g.degree() != 2 || g.support_size() != 2) {
            throw std::logic_error(
                "generator mixes variable blocks but is not a pairwise product");
        }
    }

    FibreFactorization out;
    out.variable_partition = std::move(block_of);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<std::string> names;
        for (std::size_t i : blocks[b]) names.push_back(c.context().name(i));
        out.factors.push_back(enumerate_survivors(
            minimalize(VarContext(std::move(names)), std::move(factor_gens[b]))));
    }
    return out;
}

bool check_pairwise_products(const SurvivalComplex& c,
                             std::span<const std::size_t> variable_partition) {
    const auto& ideal = c.ring().ideal;
    const std::size_t n = c.context().size();
    if (variable_partition.size() != n)
        throw std::invalid_argument("partition size does not match context");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (variable_partition[i] == variable_partition[j]) continue;
            std::vector<unsigned> e(n, 0);
            e[i] = e[j] = 1;
            if (!ideal.contains(Monomial(std::move(e)))) return false;
        }
    }
    return true;
}

PurePowerFactorization pure_power_factorization(const SurvivalComplex& c) {
    const auto& vs = c.vertices();
    const auto& cls = c.classification();
    const std::size_t n = c.context().size();

    // the socle generators must be pairwise variable-disjoint
    std::vector<const Monomial*> socle;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (cls[i] == VertexClass::TrulyIsolated) socle.push_back(&vs[i]);
    for (std::size_t a = 0; a < socle.size(); ++a) {
        for (std::size_t b = a + 1; b < socle.size(); ++b) {
            for (std::size_t i = 0; i < n; ++i) {
                if (socle[a]->exps[i] > 0 && socle[b]->exps[i] > 0) {
                    PurePowerFactorization r;
                    r.refusal = "socle generators " + to_string(c.context(), *socle[a]) +
                                " and " + to_string(c.context(), *socle[b]) +
                                " share the variable " + c.context().name(i);
                    return r;
                }
            }
        }
    }

    PurePowerFactorization r;
    r.factorization = decompose(c);
    for (const auto& f : r.factorization->factors) {
        if (!std::all_of(f.ideal.min_gens().begin(), f.ideal.min_gens().end(),
                         [](const Monomial& g) { return g.support_size() == 1; }))
            throw std::logic_error(
                "variable-disjoint socle produced a non-pure-power factor");
    }
    return r;
}

}  // namespace survival
