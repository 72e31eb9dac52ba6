#ifndef SURVIVAL_COMPLEX_HPP
#define SURVIVAL_COMPLEX_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "survival/monomial.hpp"

namespace survival {

enum class VertexClass { TrulyIsolated, QuasiIsolated, Connected };

enum class ComponentKind { Nontrivial, TriviallyConnected, QuasiTriviallyConnected };

struct Component {
    ComponentKind kind;
    std::vector<std::size_t> vertices;  // indices into the vertex list, ascending
};

struct Caps {
    std::size_t max_vertices = 200000;
    std::size_t max_edges = 1000000;
    std::size_t max_facets = 100000;
};

// An unordered vertex pair, stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

// A face as an ascending list of vertex indices.
using Face = std::vector<std::size_t>;

/**
 * The survival complex of an Artinian monomial quotient ring: vertices are
 * the surviving monomials, and a set of distinct vertices spans a face iff
 * its product survives. Holds the 1-skeleton, the per-vertex isolation
 * classification, and the connected-component partition.
 */
class SurvivalComplex {
public:
    const QuotientRing& ring() const { return ring_; }
    const VarContext& context() const { return ring_.context(); }
    const std::vector<Monomial>& vertices() const { return ring_.survivors; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }
    const std::vector<VertexClass>& classification() const { return classes_; }
    const std::vector<Component>& components() const { return components_; }

    // Index of a vertex monomial; throws std::invalid_argument if absent.
    std::size_t vertex_index(const Monomial& m) const;

    friend SurvivalComplex build_complex(QuotientRing ring, const Caps& caps);

private:
    explicit SurvivalComplex(QuotientRing ring) : ring_(std::move(ring)) {}

    QuotientRing ring_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<VertexClass> classes_;
    std::vector<Component> components_;
};

SurvivalComplex build_complex(QuotientRing ring, const Caps& caps = {});

// Classification of one vertex, by monomial.
VertexClass classify_vertex(const SurvivalComplex& c, const Monomial& v);

// true iff the members (distinct vertices of c) span a face: empty set, or
// the product of the members survives.
bool is_face(const SurvivalComplex& c, std::span<const Monomial> members);

// All inclusion-maximal faces, each ascending, the list sorted.
std::vector<Face> facets(const SurvivalComplex& c, std::size_t max_facets = 100000);

// The dual graph on the same vertices: edge {p,q} iff p*q dies in the ring.
// Together with edges() this partitions all unordered vertex pairs.
std::vector<Edge> zero_divisor_graph(const SurvivalComplex& c);

}  // namespace survival

#endif
