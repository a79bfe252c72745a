#ifndef HGDUAL_LABELS_HPP
#define HGDUAL_LABELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hgdual/assignment.hpp"
#include "hgdual/hypergraph.hpp"

namespace hgdual {

/// Decomposition-tree edge label: Exclude(v) or IncludeCritical(v, G-edge).
///
/// Labels map to domain-object pairs <v,v> and <v,edge>; with vertices
/// ordered before edges this collapses to the key (v, kind, g). Member
/// order realizes that key.
struct Label {
    VertexId v = 0;
    enum class Kind : std::uint8_t { Exclude = 0, IncludeCritical = 1 } kind = Kind::Exclude;
    EdgeId g = 0;  // meaningful for IncludeCritical only

    static Label exclude(VertexId v) { return Label{v, Kind::Exclude, 0}; }
    static Label include_critical(VertexId v, EdgeId g) {
        return Label{v, Kind::IncludeCritical, g};
    }

    bool operator==(const Label&) const = default;
};

/// Total order over labels: lexicographic on the associated pairs.
int compare_labels(const Label& a, const Label& b);

inline bool operator<(const Label& a, const Label& b) { return compare_labels(a, b) < 0; }

/// An unordered, duplicate-free set of labels (a guess Sigma), held
/// sorted for canonical comparison.
struct LabelSet {
    std::vector<Label> labels;

    LabelSet() = default;
    static LabelSet of(std::vector<Label> ls);

    std::size_t size() const { return labels.size(); }
    bool empty() const { return labels.empty(); }
    bool operator==(const LabelSet&) const = default;
};

/// Order over label sets: cardinality first, then the least differing
/// label. On sorted sequences the latter is plain lexicographic order.
int compare_label_sets(const LabelSet& a, const LabelSet& b);

/// An ordered sequence of labels; each step must be applicable at the
/// node reached so far.
using Path = std::vector<Label>;

/// Eq.-style evaluation of a label set: In = union of included vertices,
/// Ex = excluded vertices plus the witnessing edges minus their critical
/// vertex. Overlap is permitted. Throws on an incongruent set.
LoosePair sigma_of_labels(const Instance& i, const LabelSet& sigma);

/// Walk a path from the root, validating applicability at each step.
/// Throws identifying the offending step. The result is consistent and
/// equals sigma_of_labels of the path's underlying set.
Assignment sigma_of_path(const Instance& i, const Path& pi);

/// In and Ex do not overlap.
bool is_consistent(const LoosePair& p);

/// Every Exclude names a real vertex; every IncludeCritical names a
/// vertex inside its G-edge.
bool is_congruent(const Instance& i, const LabelSet& sigma);

/// All root labels in compare_labels order: Exclude(v) for every vertex,
/// IncludeCritical(v, G) for every G-edge and vertex of it.
std::vector<Label> label_universe(const Instance& i);

/// floor(log2 |H|) + 1, with the |H| = 0 case pinned to 1.
std::size_t default_guess_bound(std::size_t h_edge_count);

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

/// Sum of C(n, j) for j = 0..k, saturating.
std::uint64_t label_set_count(std::uint64_t n, std::uint64_t k);

/// Lexicographic k-combination stream over {0..n-1}, cardinality rising
/// from 0 to max_size. This emission order is exactly the label-set
/// order when indices point into a sorted label universe.
class CombinationEnumerator {
public:
    CombinationEnumerator(std::size_t n, std::size_t max_size)
        : n_(n), max_size_(max_size) {}

    /// Fills `out` with the next combination; false when exhausted.
    bool next(std::vector<std::size_t>& out);

private:
    std::size_t n_;
    std::size_t max_size_;
    std::size_t card_ = 0;
    bool card_started_ = false;
    bool done_ = false;
    std::vector<std::size_t> cur_;
};

/// Ordered stream of every Sigma with |Sigma| <= max_size, emitted
/// exactly once, strictly increasing under compare_label_sets.
class LabelSetStream {
public:
    LabelSetStream(const Instance& i, std::size_t max_size);

    std::optional<LabelSet> next();

    const std::vector<Label>& universe() const { return universe_; }

private:
    std::vector<Label> universe_;
    CombinationEnumerator combos_;
    std::vector<std::size_t> scratch_;
};

} // namespace hgdual

#endif
