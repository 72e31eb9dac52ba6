#include "survival/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace survival {

namespace {

Monomial variable_monomial(std::size_t i, std::size_t n) {
    std::vector<unsigned> e(n, 0);
    e[i] = 1;
    return Monomial(std::move(e));
}

bool truly_isolated(const MonomialIdeal& ideal, const Monomial& v) {
    const std::size_t n = v.nvars();
    for (std::size_t i = 0; i < n; ++i)
        if (!ideal.contains(multiply(v, variable_monomial(i, n))))
            return false;
    return true;
}

}  // namespace

std::size_t SurvivalComplex::vertex_index(const Monomial& m) const {
    const auto& vs = ring_.survivors;
    auto it = std::lower_bound(vs.begin(), vs.end(), m);
    if (it == vs.end() || *it != m)
        throw std::invalid_argument("monomial is not a vertex of the complex");
    return static_cast<std::size_t>(it - vs.begin());
}

SurvivalComplex build_complex(QuotientRing ring, const Caps& caps) {
    if (ring.survivors.size() > caps.max_vertices)
        throw CapExceeded("vertex count exceeds the vertex cap");

    SurvivalComplex c(std::move(ring));
    const auto& vs = c.ring_.survivors;
    const auto& ideal = c.ring_.ideal;
    const std::size_t n = vs.size();

    c.adj_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (ideal.contains(multiply(vs[i], vs[j]))) continue;
            if (c.edges_.size() == caps.max_edges)
                throw CapExceeded("edge count exceeds the edge cap");
            c.edges_.emplace_back(i, j);
            c.adj_[i].push_back(j);
            c.adj_[j].push_back(i);
        }
    }

    c.classes_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (truly_isolated(ideal, vs[i])) {
            c.classes_.push_back(VertexClass::TrulyIsolated);
        } else if (c.adj_[i].empty()) {
            // edgeless but some x_j*v survives: forces v = x_j with v^2 alive
            if (ideal.contains(multiply(vs[i], vs[i])))
                throw std::logic_error("edgeless vertex with dead square escaped isolation");
            if (vs[i].degree() != 1 ||
                !ideal.contains(multiply(multiply(vs[i], vs[i]), vs[i])))
                throw std::logic_error("quasi-isolated vertex is not a variable with cube zero");
            c.classes_.push_back(VertexClass::QuasiIsolated);
        } else {
            c.classes_.push_back(VertexClass::Connected);
        }
    }

    // connected components by BFS in canonical order
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (std::size_t w : c.adj_[comp[k]]) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        ComponentKind kind;
        if (comp.size() > 1)
            kind = ComponentKind::Nontrivial;
        else if (c.classes_[comp[0]] == VertexClass::QuasiIsolated)
            kind = ComponentKind::QuasiTriviallyConnected;
        else
            kind = ComponentKind::TriviallyConnected;
        c.components_.push_back(Component{kind, std::move(comp)});
    }

    return c;
}

VertexClass classify_vertex(const SurvivalComplex& c, const Monomial& v) {
    return c.classification()[c.vertex_index(v)];
}

bool is_face(const SurvivalComplex& c, std::span<const Monomial> members) {
    if (members.empty()) return true;
    std::vector<std::size_t> idx;
    idx.reserve(members.size());
    for (const auto& m : members) idx.push_back(c.vertex_index(m));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("face members must be distinct vertices");
    Monomial prod = members[0];
    for (std::size_t k = 1; k < members.size(); ++k)
        prod = multiply(prod, members[k]);
    return !c.ring().ideal.contains(prod);
}

namespace {

// Depth-first extension in canonical vertex order. A branch dies as soon
// as the running product lands in the ideal; a face is recorded when no
// vertex at all (not just a later one) extends it.
void facet_search(const SurvivalComplex& c, Face& face, const Monomial& prod,
                  std::size_t start, std::size_t max_facets,
                  std::vector<Face>& out) {
    const auto& vs = c.ring().survivors;
    const auto& ideal = c.ring().ideal;

    for (std::size_t v = start; v < vs.size(); ++v) {
        Monomial p = multiply(prod, vs[v]);
        if (ideal.contains(p)) continue;
        face.push_back(v);
        facet_search(c, face, p, v + 1, max_facets, out);
        face.pop_back();
    }

    bool maximal = true;
    for (std::size_t v = 0; v < vs.size() && maximal; ++v) {
        if (std::binary_search(face.begin(), face.end(), v)) continue;
        if (!ideal.contains(multiply(prod, vs[v]))) maximal = false;
    }
    if (maximal && !face.empty()) {
        if (out.size() == max_facets)
            throw CapExceeded("facet count exceeds the facet cap");
        out.push_back(face);
    }
}

}  // namespace

std::vector<Face> facets(const SurvivalComplex& c, std::size_t max_facets) {
    std::vector<Face> out;
    if (c.vertices().empty()) return out;
    Face face;
    Monomial one(std::vector<unsigned>(c.context().size(), 0));
    facet_search(c, face, one, 0, max_facets, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> zero_divisor_graph(const SurvivalComplex& c) {
    std::vector<Edge> out;
    const std::size_t n = c.vertices().size();
    std::size_t next = 0;
    const auto& edges = c.edges();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (next < edges.size() && edges[next] == Edge{i, j})
                ++next;
            else
                out.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace survival
