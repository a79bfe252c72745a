#include "hgdual/hypergraph.hpp"

#include <stdexcept>

namespace hgdual {

bool is_simple(const Hypergraph& g) {
    const auto& es = g.edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i != j && es[i].is_subset_of(es[j])) return false;
        }
    }
    return true;
}

Hypergraph minimize(const Hypergraph& g) {
    Hypergraph out(g.universe_size);
    out.names = g.names;
    for (const Bitset& e : g.edges) {
        if (e.none()) {
            out.edges.assign(1, Bitset(g.universe_size));
            return out;
        }
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < g.edges.size() && minimal; ++j) {
            if (j == i) continue;
            if (g.edges[j].is_subset_of(g.edges[i]) &&
                (g.edges[j] != g.edges[i] || j < i))
                minimal = false;  // strictly smaller, or earlier duplicate
        }
        if (minimal) out.edges.push_back(g.edges[i]);
    }
    return out;
}

Hypergraph restrict(const Hypergraph& g, const Bitset& s) {
    if (s.capacity() != g.universe_size)
        throw std::invalid_argument("restrict: set not within universe");
    Hypergraph out(g.universe_size);
    out.names = g.names;
    for (const Bitset& e : g.edges)
        if (e.is_subset_of(s)) out.edges.push_back(e);
    return out;
}

Hypergraph project(const Hypergraph& g, const Bitset& s) {
    if (s.capacity() != g.universe_size)
        throw std::invalid_argument("project: set not within universe");
    Hypergraph cut(g.universe_size);
    cut.names = g.names;
    for (const Bitset& e : g.edges) cut.edges.push_back(e & s);
    return minimize(cut);
}

bool is_transversal(const Hypergraph& g, const Bitset& t) {
    for (const Bitset& e : g.edges)
        if (!e.intersects(t)) return false;
    return true;
}

bool is_independent_set(const Hypergraph& h, const Bitset& t) {
    for (const Bitset& e : h.edges)
        if (e.is_subset_of(t)) return false;
    return true;
}

std::optional<EdgeId> criticality_witness(const Hypergraph& g, const Bitset& t, VertexId v) {
    if (!t.test(v))
        throw std::invalid_argument("criticality_witness: vertex not in the set");
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        Bitset cut = g.edges[j] & t;
        if (cut.count() == 1 && cut.test(v)) return j;
    }
    return std::nullopt;
}

bool is_minimal_transversal(const Hypergraph& g, const Bitset& t) {
    if (!is_transversal(g, t)) return false;
    bool ok = true;
    t.for_each([&](std::size_t v) {
        if (ok && !criticality_witness(g, t, v)) ok = false;
    });
    return ok;
}

bool intersection_property(const Instance& i) {
    return !intersection_property_violation(i).has_value();
}

std::optional<std::pair<EdgeId, EdgeId>> intersection_property_violation(const Instance& i) {
    for (std::size_t a = 0; a < i.g.edges.size(); ++a)
        for (std::size_t b = 0; b < i.h.edges.size(); ++b)
            if (!i.g.edges[a].intersects(i.h.edges[b])) return std::make_pair(a, b);
    return std::nullopt;
}

bool is_trivially_dual(const Instance& i) {
    auto empty_hg = [](const Hypergraph& x) { return x.edges.empty(); };
    auto empty_edge_hg = [](const Hypergraph& x) {
        return x.edges.size() == 1 && x.edges[0].none();
    };
    return (empty_hg(i.g) && empty_edge_hg(i.h)) ||
           (empty_edge_hg(i.g) && empty_hg(i.h));
}

} // namespace hgdual
