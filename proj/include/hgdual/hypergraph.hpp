#ifndef HGDUAL_HYPERGRAPH_HPP
#define HGDUAL_HYPERGRAPH_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgdual/bitset.hpp"

namespace hgdual {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Universe capacity bound. Larger inputs are rejected with a diagnostic.
inline constexpr std::size_t kMaxUniverse = 4096;

/// A hypergraph over a dense integer universe. Edge identity is position
/// in input order; that order is canonical for all tie-breaking.
struct Hypergraph {
    std::size_t universe_size = 0;
    std::vector<Bitset> edges;
    /// Optional token table mapping index -> name (shared by a pair).
    std::shared_ptr<const std::vector<std::string>> names;

    Hypergraph() = default;

    explicit Hypergraph(std::size_t universe) : universe_size(universe) {
        if (universe > kMaxUniverse)
            throw std::invalid_argument("hypergraph universe exceeds " +
                                        std::to_string(kMaxUniverse) + " vertices");
    }

    Hypergraph(std::size_t universe, std::vector<Bitset> es)
        : Hypergraph(universe) {
        edges = std::move(es);
        for (const Bitset& e : edges)
            if (e.capacity() != universe_size)
                throw std::invalid_argument("edge capacity does not match universe");
    }

    std::size_t edge_count() const { return edges.size(); }

    /// Adjacency-list representation size: total vertex occurrences.
    std::size_t representation_size() const {
        std::size_t n = 0;
        for (const Bitset& e : edges) n += e.count();
        return n;
    }

    void add_edge(Bitset e) {
        if (e.capacity() != universe_size)
            throw std::invalid_argument("edge capacity does not match universe");
        edges.push_back(std::move(e));
    }

    Bitset vertex_support() const {
        Bitset s(universe_size);
        for (const Bitset& e : edges) s |= e;
        return s;
    }
};

/// An ordered pair of hypergraphs over a shared universe.
struct Instance {
    Hypergraph g;
    Hypergraph h;

    Instance() = default;
    Instance(Hypergraph g_, Hypergraph h_) : g(std::move(g_)), h(std::move(h_)) {
        if (g.universe_size != h.universe_size)
            throw std::invalid_argument("instance sides must share one universe");
    }

    std::size_t universe_size() const { return g.universe_size; }

    /// N = ||G|| + ||H||, recorded for reporting.
    std::size_t input_size() const {
        return g.representation_size() + h.representation_size();
    }
};

// --- transversal-theoretic predicates ---------------------------------

/// Sperner test: no edge contained in a distinct edge.
bool is_simple(const Hypergraph& g);

/// min(g): inclusion-minimal edges, input order, first duplicate kept.
/// If the empty edge is present the result is the empty-edge hypergraph.
Hypergraph minimize(const Hypergraph& g);

/// G_S: keep exactly the edges contained in s.
Hypergraph restrict(const Hypergraph& g, const Bitset& s);

/// G^S: intersect every edge with s, then minimize. Always simple.
Hypergraph project(const Hypergraph& g, const Bitset& s);

/// True iff t meets every edge. Vacuously true for the empty hypergraph,
/// always false in the presence of an empty edge.
bool is_transversal(const Hypergraph& g, const Bitset& t);

/// True iff no edge of h is contained in t.
bool is_independent_set(const Hypergraph& h, const Bitset& t);

/// First edge (input order) whose intersection with t is exactly {v}.
/// Precondition: v in t.
std::optional<EdgeId> criticality_witness(const Hypergraph& g, const Bitset& t, VertexId v);

/// Transversal with every vertex critical.
bool is_minimal_transversal(const Hypergraph& g, const Bitset& t);

/// Every edge of G meets every edge of H.
bool intersection_property(const Instance& i);

/// On failure, the first offending pair (G-edge, H-edge) in input order.
std::optional<std::pair<EdgeId, EdgeId>> intersection_property_violation(const Instance& i);

/// One side is the empty hypergraph and the other the empty-edge one.
bool is_trivially_dual(const Instance& i);

} // namespace hgdual

#endif
