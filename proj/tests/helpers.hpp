#ifndef HGDUAL_TEST_HELPERS_HPP
#define HGDUAL_TEST_HELPERS_HPP

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hgdual/io.hpp"
#include "hgdual/hypergraph.hpp"
#include "hgdual/oracle.hpp"

namespace hgtest {

using namespace hgdual;

// Test builds honor HGDUAL_ORACLE_MAX_VERTICES (and the _BERGE variant)
// so long exhaustive runs can be widened or clamped from the outside.
inline oracle::OracleLimit oracle_limit_from_env() {
    oracle::OracleLimit limit;
    if (const char* s = std::getenv("HGDUAL_ORACLE_MAX_VERTICES"))
        limit.max_vertices_subset = static_cast<std::size_t>(std::strtoull(s, nullptr, 10));
    if (const char* s = std::getenv("HGDUAL_ORACLE_MAX_VERTICES_BERGE"))
        limit.max_vertices_berge = static_cast<std::size_t>(std::strtoull(s, nullptr, 10));
    return limit;
}

// Worked pair: G and its transversal hypergraph H. Sorted token order is
// a b c d e f -> indices 0..5.
inline Instance fig1() {
    return io::pair_from_token_edges(
        {{"a", "c", "d"}, {"a", "e", "f"}, {"c", "b"}, {"e", "b"}},
        {{"a", "b"}, {"c", "e"}, {"c", "b", "f"}, {"e", "b", "d"}, {"d", "b", "f"}});
}

// Same G with the transversal {d,b,f} removed from H.
inline Instance fig3() {
    return io::pair_from_token_edges(
        {{"a", "c", "d"}, {"a", "e", "f"}, {"c", "b"}, {"e", "b"}},
        {{"a", "b"}, {"c", "e"}, {"c", "b", "f"}, {"e", "b", "d"}});
}

inline Hypergraph appendix_b_g() {
    return io::from_token_edges({{"x1", "x2"}, {"x2", "x3"}, {"x1", "x3"}, {"x3", "x4"}});
}

inline Hypergraph appendix_b_tr() {
    return io::from_token_edges({{"x1", "x2", "x4"}, {"x1", "x3"}, {"x2", "x3"}});
}

inline Instance exp_family(std::size_t i) {
    std::vector<std::vector<std::string>> g_edges, h_edges;
    std::vector<std::string> xs, ys;
    for (std::size_t j = 1; j <= i; ++j) {
        std::string x = "x" + std::to_string(j);
        std::string y = "y" + std::to_string(j);
        g_edges.push_back({x, y});
        xs.push_back(x);
        ys.push_back(y);
    }
    h_edges.push_back(xs);
    h_edges.push_back(ys);
    return io::pair_from_token_edges(g_edges, h_edges);
}

inline Bitset set_of(const Hypergraph& g, const std::vector<std::string>& tokens) {
    Bitset b(g.universe_size);
    for (const auto& t : tokens) {
        bool hit = false;
        if (g.names) {
            for (std::size_t v = 0; v < g.names->size(); ++v) {
                if ((*g.names)[v] == t) {
                    b.set(v);
                    hit = true;
                    break;
                }
            }
        }
        if (!hit) throw std::runtime_error("unknown token " + t);
    }
    return b;
}

inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t vertices,
                                    std::size_t edges, std::size_t max_edge_size) {
    Hypergraph g(vertices);
    std::uniform_int_distribution<std::size_t> pick_size(1, std::min(max_edge_size, vertices));
    std::uniform_int_distribution<std::size_t> pick_vertex(0, vertices - 1);
    for (std::size_t e = 0; e < edges; ++e) {
        Bitset edge(vertices);
        std::size_t sz = pick_size(rng);
        while (edge.count() < sz) edge.set(pick_vertex(rng));
        g.edges.push_back(std::move(edge));
    }
    return g;
}

inline Hypergraph random_simple(std::mt19937_64& rng, std::size_t vertices,
                                std::size_t edges, std::size_t max_edge_size) {
    return minimize(random_hypergraph(rng, vertices, edges, max_edge_size));
}

inline Bitset random_subset(std::mt19937_64& rng, std::size_t universe) {
    Bitset b(universe);
    for (std::size_t v = 0; v < universe; ++v)
        if (rng() & 1) b.set(v);
    return b;
}

} // namespace hgtest

#endif
