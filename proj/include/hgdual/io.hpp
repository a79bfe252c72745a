#ifndef HGDUAL_IO_HPP
#define HGDUAL_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgdual/hypergraph.hpp"

namespace hgdual {
namespace io {

/// Input rejection with the offending line number.
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Hypergraph text format: one edge per line as whitespace-separated
/// vertex tokens; '#' starts a comment; a blank line separates the two
/// hypergraphs of a pair file; the literal line "EMPTYEDGE" is the empty
/// edge and the literal line "EMPTYHG" a zero-edge hypergraph section.
/// The universe is the union of tokens across all sections; indices are
/// assigned by sorted token order, independent of file order.

Hypergraph parse_hypergraph(std::istream& in);
Instance parse_pair(std::istream& in);

/// Monotone DNF: one term per line, variables as tokens. Returns the
/// term hypergraph as written (not yet minimized).
Hypergraph parse_dnf(std::istream& in);

void emit_hypergraph(std::ostream& out, const Hypergraph& g);
void emit_pair(std::ostream& out, const Instance& i);

std::string vertex_name(const Hypergraph& g, VertexId v);
std::vector<std::string> vertex_names(const Hypergraph& g, const Bitset& s);

/// Universe vertices that belong to no edge of this hypergraph.
std::vector<std::string> isolated_vertices(const Hypergraph& g);

/// Rebuild the pair over the union support of both sides, dropping
/// vertices that belong to no edge of either.
Instance drop_isolated(const Instance& i);

/// Build a hypergraph from token edges (empty vector = empty edge).
/// The universe is the sorted union of tokens plus `extra_tokens`.
Hypergraph from_token_edges(const std::vector<std::vector<std::string>>& edges,
                            const std::vector<std::string>& extra_tokens = {});

/// Build a pair over the shared sorted token universe.
Instance pair_from_token_edges(const std::vector<std::vector<std::string>>& g_edges,
                               const std::vector<std::vector<std::string>>& h_edges);

} // namespace io
} // namespace hgdual

#endif
