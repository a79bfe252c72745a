#ifndef HGDUAL_SOLVER_HPP
#define HGDUAL_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "hgdual/assignment.hpp"
#include "hgdual/hypergraph.hpp"
#include "hgdual/labels.hpp"

namespace hgdual {

enum class DualStatus { Dual, NotDual };

enum class VerdictReason {
    TriviallyDual,
    NoNewTransversal,
    NotSimpleG,
    NotSimpleH,
    NoIntersectionProperty,
    NewTransversalFound,
};

const char* to_string(DualStatus s);
const char* to_string(VerdictReason r);

/// Instrumentation of the recursive search. Compatible-edge counts are
/// recorded per recursion level; each parent-to-child step must halve.
struct SearchStats {
    std::uint64_t calls = 0;
    std::size_t recursion_depth_max = 0;
    std::vector<std::vector<std::size_t>> com_sizes_per_level;
    std::uint64_t label_sets_tried = 0;
    std::uint64_t halving_violations = 0;

    void record_call(std::size_t depth, std::size_t com_size,
                     std::optional<std::size_t> parent_com_size);
};

/// Checkable evidence attached to every NotDual verdict.
struct Certificate {
    std::optional<AugmentedPair> witness;                      // Condition-(3) pair
    std::optional<Bitset> new_transversal;                     // minimized
    std::optional<std::pair<EdgeId, EdgeId>> offending_edges;  // containment or IP pair
};

struct Verdict {
    DualStatus status = DualStatus::Dual;
    VerdictReason reason = VerdictReason::NoNewTransversal;
    Certificate certificate;
    SearchStats stats;
};

struct CheckFailure {
    VerdictReason reason;  // NotSimpleG, NotSimpleH, or NoIntersectionProperty
    std::pair<EdgeId, EdgeId> offending;
};

/// Simplicity of both sides, then the intersection property; the first
/// failure wins.
std::optional<CheckFailure> check_simple_ip(const Instance& i);

/// Search for a new transversal of G wrt H coherent with sigma, by the
/// deterministic decomposition recursion. Requires the caller to have
/// established simplicity and the intersection property. The returned
/// witness is totalized to <T, V\T> and meets the witnessing condition.
std::optional<AugmentedPair> det_new_transversal(const Instance& i, const Assignment& sigma,
                                                 SearchStats& stats);

/// Full duality decision; never throws, all failure modes are reasons.
Verdict check_dual(const Instance& i);

/// Evaluate the guess: sigma(Sigma) by the label-set expansion, augment
/// by the Half threshold, then the witnessing condition on the result.
/// Throws on an incongruent Sigma.
bool check_witness_aug(const Instance& i, const LabelSet& sigma);

struct IntersectionPropertyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeNtResult {
    std::optional<Bitset> transversal;
    std::optional<LabelSet> sigma;  // the least accepted guess
    int branch = 0;                 // 1: In u Freq, 2: V \ (Ex u Infreq)
    std::uint64_t label_sets_tried = 0;
};

/// Scan the guess space in its total order and output the transversal
/// derived from the first accepted guess; null result when none is.
/// Throws IntersectionPropertyError when the precondition fails.
/// max_size defaults to floor(log2 |H|) + 1.
ComputeNtResult compute_new_transversal_serial(const Instance& i,
                                               std::optional<std::size_t> max_size = {});

/// Same contract and same result; the guess space is split into
/// order-contiguous blocks scanned by OpenMP workers, merged by taking
/// the least accepted guess. jobs <= 1 runs the serial reference.
ComputeNtResult compute_new_transversal(const Instance& i,
                                        std::optional<std::size_t> max_size = {},
                                        int jobs = 1);

/// Randomized realization of the guess-and-check scheme: sample guesses
/// uniformly from the bounded guess space and return the first accepted
/// one. If the simplicity/intersection screen already fails, accepts
/// immediately with the empty set. Absence does not certify duality.
std::optional<LabelSet> nd_check_random(const Instance& i, std::uint64_t trials,
                                        std::uint64_t seed);

/// Greedy minimization in ascending vertex order; the result is a
/// minimal transversal. Requires t to be a transversal.
Bitset minimize_transversal(const Hypergraph& g, const Bitset& t);

/// Full dualization by repeated new-transversal extraction; the result
/// equals tr(g), edges in generation order. Requires g simple.
Hypergraph dualize(const Hypergraph& g);

} // namespace hgdual

#endif
