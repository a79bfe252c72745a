#ifndef HGDUAL_ORACLE_HPP
#define HGDUAL_ORACLE_HPP

#include <optional>

#include "hgdual/hypergraph.hpp"

namespace hgdual {
namespace oracle {

/// Hard limits enforced before any exhaustive loop.
struct OracleLimit {
    std::size_t max_vertices_subset = 20;  // 2^V subset enumeration
    std::size_t max_vertices_berge = 64;   // edge-by-edge multiplication
};

struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact tr(g) by scanning all 2^|V| subsets, keeping minimal
/// transversals (a transversal is minimal iff dropping any of its
/// vertices breaks it). Edges emitted in ascending bit-pattern order.
Hypergraph brute_force_tr_subsets(const Hypergraph& g, const OracleLimit& limit = {});

/// Same scan with the mask range split across OpenMP threads.
Hypergraph brute_force_tr_subsets_parallel(const Hypergraph& g, const OracleLimit& limit = {});

/// Exact tr(g) by Berge multiplication: fold edges into the running
/// transversal hypergraph, minimizing after each step.
Hypergraph brute_force_tr_berge(const Hypergraph& g, const OracleLimit& limit = {});

enum class TrMode { SubsetScan, Berge };

/// Exact tr(g); the two modes must agree.
Hypergraph brute_force_tr(const Hypergraph& g, TrMode mode = TrMode::SubsetScan,
                          const OracleLimit& limit = {});

/// Least subset (as ascending bit pattern) that is a transversal of G
/// and an independent set of H; absent when none exists.
std::optional<Bitset> brute_force_new_transversal(const Instance& i,
                                                  const OracleLimit& limit = {});

/// Set equality of edge lists up to order.
bool same_edge_set(const Hypergraph& a, const Hypergraph& b);

} // namespace oracle
} // namespace hgdual

#endif
