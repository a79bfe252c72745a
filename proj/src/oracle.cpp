#include "hgdual/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hgdual {
namespace oracle {

namespace {

Bitset bitset_from_mask(std::size_t universe, std::uint64_t mask) {
    Bitset b(universe);
    while (mask) {
        int v = __builtin_ctzll(mask);
        b.set(static_cast<std::size_t>(v));
        mask &= mask - 1;
    }
    return b;
}

void check_subset_limit(const Hypergraph& g, const OracleLimit& limit) {
    if (g.universe_size > limit.max_vertices_subset)
        throw OracleLimitError("oracle subset scan limited to " +
                               std::to_string(limit.max_vertices_subset) + " vertices, got " +
                               std::to_string(g.universe_size));
}

bool minimal_transversal_mask(const Hypergraph& g, std::uint64_t mask) {
    Bitset t = bitset_from_mask(g.universe_size, mask);
    if (!is_transversal(g, t)) return false;
    // minimal iff dropping any single vertex breaks transversality
    std::uint64_t m = mask;
    while (m) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        t.reset(static_cast<std::size_t>(v));
        bool still = is_transversal(g, t);
        t.set(static_cast<std::size_t>(v));
        if (still) return false;
    }
    return true;
}

Hypergraph from_masks(const Hypergraph& g, const std::vector<std::uint64_t>& masks) {
    Hypergraph out(g.universe_size);
    out.names = g.names;
    out.edges.reserve(masks.size());
    for (std::uint64_t m : masks) out.edges.push_back(bitset_from_mask(g.universe_size, m));
    return out;
}

} // namespace

Hypergraph brute_force_tr_subsets(const Hypergraph& g, const OracleLimit& limit) {
    check_subset_limit(g, limit);
    const std::uint64_t end = std::uint64_t{1} << g.universe_size;
    std::vector<std::uint64_t> hits;
    for (std::uint64_t mask = 0; mask < end; ++mask)
        if (minimal_transversal_mask(g, mask)) hits.push_back(mask);
    return from_masks(g, hits);
}

Hypergraph brute_force_tr_subsets_parallel(const Hypergraph& g, const OracleLimit& limit) {
    check_subset_limit(g, limit);
    const std::int64_t end = std::int64_t{1} << g.universe_size;
    std::vector<std::uint64_t> hits;
#ifdef _OPENMP
    #pragma omp parallel
    {
        std::vector<std::uint64_t> local;
        #pragma omp for schedule(static) nowait
        for (std::int64_t mask = 0; mask < end; ++mask)
            if (minimal_transversal_mask(g, static_cast<std::uint64_t>(mask)))
                local.push_back(static_cast<std::uint64_t>(mask));
        #pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
#else
    for (std::int64_t mask = 0; mask < end; ++mask)
        if (minimal_transversal_mask(g, static_cast<std::uint64_t>(mask)))
            hits.push_back(static_cast<std::uint64_t>(mask));
#endif
    return from_masks(g, hits);
}

Hypergraph brute_force_tr_berge(const Hypergraph& g, const OracleLimit& limit) {
    if (g.universe_size > limit.max_vertices_berge)
        throw OracleLimitError("oracle Berge multiplication limited to " +
                               std::to_string(limit.max_vertices_berge) + " vertices, got " +
                               std::to_string(g.universe_size));
    // tr of the edgeless hypergraph is the empty-edge hypergraph.
    Hypergraph acc(g.universe_size);
    acc.names = g.names;
    acc.edges.push_back(Bitset(g.universe_size));
    for (const Bitset& e : g.edges) {
        Hypergraph next(g.universe_size);
        next.names = g.names;
        for (const Bitset& t : acc.edges) {
            e.for_each([&](std::size_t v) {
                Bitset grown = t;
                grown.set(v);
                next.edges.push_back(std::move(grown));
            });
        }
        acc = minimize(next);
        if (acc.edges.empty()) break;  // an empty input edge kills every product
    }
    std::sort(acc.edges.begin(), acc.edges.end());
    return acc;
}

Hypergraph brute_force_tr(const Hypergraph& g, TrMode mode, const OracleLimit& limit) {
    return mode == TrMode::SubsetScan ? brute_force_tr_subsets(g, limit)
                                      : brute_force_tr_berge(g, limit);
}

std::optional<Bitset> brute_force_new_transversal(const Instance& i, const OracleLimit& limit) {
    if (i.universe_size() > limit.max_vertices_subset)
        throw OracleLimitError("oracle subset scan limited to " +
                               std::to_string(limit.max_vertices_subset) + " vertices, got " +
                               std::to_string(i.universe_size()));
    const std::uint64_t end = std::uint64_t{1} << i.universe_size();
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        Bitset t = bitset_from_mask(i.universe_size(), mask);
        if (is_transversal(i.g, t) && is_independent_set(i.h, t)) return t;
    }
    return std::nullopt;
}

bool same_edge_set(const Hypergraph& a, const Hypergraph& b) {
    if (a.universe_size != b.universe_size || a.edges.size() != b.edges.size()) return false;
    std::vector<Bitset> ea = a.edges, eb = b.edges;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

} // namespace oracle
} // namespace hgdual
