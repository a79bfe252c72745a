#include "hgdual/solver.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hgdual {

const char* to_string(DualStatus s) {
    return s == DualStatus::Dual ? "dual" : "not-dual";
}

const char* to_string(VerdictReason r) {
    switch (r) {
    case VerdictReason::TriviallyDual: return "trivially-dual";
    case VerdictReason::NoNewTransversal: return "no-new-transversal";
    case VerdictReason::NotSimpleG: return "g-not-simple";
    case VerdictReason::NotSimpleH: return "h-not-simple";
    case VerdictReason::NoIntersectionProperty: return "no-intersection-property";
    case VerdictReason::NewTransversalFound: return "new-transversal-found";
    }
    return "?";
}

void SearchStats::record_call(std::size_t depth, std::size_t com_size,
                              std::optional<std::size_t> parent_com_size) {
    ++calls;
    recursion_depth_max = std::max(recursion_depth_max, depth);
    if (com_sizes_per_level.size() <= depth) com_sizes_per_level.resize(depth + 1);
    com_sizes_per_level[depth].push_back(com_size);
    if (parent_com_size && com_size > *parent_com_size / 2) ++halving_violations;
}

namespace {

std::optional<std::pair<EdgeId, EdgeId>> containment_pair(const Hypergraph& g) {
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        for (std::size_t j = 0; j < g.edges.size(); ++j)
            if (i != j && g.edges[i].is_subset_of(g.edges[j])) return std::make_pair(i, j);
    return std::nullopt;
}

} // namespace

std::optional<CheckFailure> check_simple_ip(const Instance& i) {
    if (auto p = containment_pair(i.g)) return CheckFailure{VerdictReason::NotSimpleG, *p};
    if (auto p = containment_pair(i.h)) return CheckFailure{VerdictReason::NotSimpleH, *p};
    if (auto p = intersection_property_violation(i))
        return CheckFailure{VerdictReason::NoIntersectionProperty, *p};
    return std::nullopt;
}

namespace {

/// One frame of the decomposition recursion, by-value state.
struct DetSearch {
    const Instance& inst;
    SearchStats& stats;

    std::optional<AugmentedPair> run(const Bitset& in, const Bitset& ex, const Bitset& free_set,
                                     std::size_t depth, std::optional<std::size_t> parent_com) {
        const Hypergraph& g = inst.g;
        const Hypergraph& h = inst.h;

        std::vector<EdgeId> sep_ids;
        for (std::size_t j = 0; j < g.edges.size(); ++j)
            if (!g.edges[j].intersects(in)) sep_ids.push_back(j);
        std::vector<EdgeId> com_ids;
        for (std::size_t j = 0; j < h.edges.size(); ++j)
            if (!h.edges[j].intersects(ex)) com_ids.push_back(j);

        stats.record_call(depth, com_ids.size(), parent_com);

        // covering assignment: no coherent new transversal here
        for (const Bitset& e : g.edges)
            if (e.is_subset_of(ex)) return std::nullopt;
        for (const Bitset& e : h.edges)
            if (e.is_subset_of(in)) return std::nullopt;

        if (sep_ids.empty()) return AugmentedPair{in, in.complement()};
        if (com_ids.empty()) return AugmentedPair{ex.complement(), ex};

        // U: free vertices in at least half of the compatible edges
        const std::size_t threshold = (com_ids.size() + 1) / 2;
        std::vector<VertexId> u;
        free_set.for_each([&](std::size_t v) {
            std::size_t n = 0;
            for (EdgeId j : com_ids)
                if (h.edges[j].test(v)) ++n;
            if (n >= threshold) u.push_back(v);
        });

        for (VertexId v : u) {
            Bitset ex2 = ex;
            ex2.set(v);
            Bitset free2 = free_set;
            free2.reset(v);
            if (auto w = run(in, ex2, free2, depth + 1, com_ids.size())) return w;
        }

        Bitset in2 = in;
        Bitset free2 = free_set;
        for (VertexId v : u) {
            in2.set(v);
            free2.reset(v);
        }

        for (const Bitset& e : h.edges)
            if (e.is_subset_of(in2)) return std::nullopt;

        std::vector<EdgeId> sep2_ids;
        for (std::size_t j = 0; j < g.edges.size(); ++j)
            if (!g.edges[j].intersects(in2)) sep2_ids.push_back(j);
        if (sep2_ids.empty()) return AugmentedPair{in2, in2.complement()};

        for (EdgeId j : sep2_ids) {
            Bitset candidates = g.edges[j] & free2;
            std::optional<AugmentedPair> found;
            candidates.for_each([&](std::size_t v) {
                if (found) return;
                Bitset in3 = in2;
                in3.set(v);
                Bitset ex3 = ex | g.edges[j];
                ex3.reset(v);
                Bitset free3 = free2 - g.edges[j];
                found = run(in3, ex3, free3, depth + 1, com_ids.size());
            });
            if (found) return found;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<AugmentedPair> det_new_transversal(const Instance& i, const Assignment& sigma,
                                                 SearchStats& stats) {
    DetSearch search{i, stats};
    return search.run(sigma.included, sigma.excluded, sigma.free_vertices(), 0, std::nullopt);
}

Verdict check_dual(const Instance& i) {
    Verdict v;
    if (is_trivially_dual(i)) {
        v.status = DualStatus::Dual;
        v.reason = VerdictReason::TriviallyDual;
        return v;
    }
    if (auto fail = check_simple_ip(i)) {
        v.status = DualStatus::NotDual;
        v.reason = fail->reason;
        v.certificate.offending_edges = fail->offending;
        return v;
    }
    auto witness = det_new_transversal(i, Assignment::empty(i.universe_size()), v.stats);
    if (witness) {
        v.status = DualStatus::NotDual;
        v.reason = VerdictReason::NewTransversalFound;
        v.certificate.witness = *witness;
        v.certificate.new_transversal = minimize_transversal(i.g, witness->a);
    } else {
        v.status = DualStatus::Dual;
        v.reason = VerdictReason::NoNewTransversal;
    }
    return v;
}

bool check_witness_aug(const Instance& i, const LabelSet& sigma) {
    LoosePair p = sigma_of_labels(i, sigma);  // throws on incongruent input
    return is_witness(i, augment(i, p));
}

namespace {

/// Per-label precomputed contributions for fast guess evaluation inside
/// the enumeration loop. Outcome-identical to check_witness_aug.
struct GuessEvaluator {
    const Instance& inst;
    std::vector<Label> universe;
    std::vector<Bitset> contrib_in;
    std::vector<Bitset> contrib_ex;

    explicit GuessEvaluator(const Instance& i) : inst(i), universe(label_universe(i)) {
        contrib_in.reserve(universe.size());
        contrib_ex.reserve(universe.size());
        for (const Label& l : universe) {
            Bitset in(i.universe_size()), ex(i.universe_size());
            if (l.kind == Label::Kind::Exclude) {
                ex.set(l.v);
            } else {
                in.set(l.v);
                ex = i.g.edges[l.g];
                ex.reset(l.v);
            }
            contrib_in.push_back(std::move(in));
            contrib_ex.push_back(std::move(ex));
        }
    }

    /// Tests the witnessing condition on the augmented pair; on success
    /// fills the output transversal and the branch taken.
    bool accepts(const std::vector<std::size_t>& combo, int& branch, Bitset& out) const {
        Bitset in(inst.universe_size()), ex(inst.universe_size());
        for (std::size_t idx : combo) {
            in |= contrib_in[idx];
            ex |= contrib_ex[idx];
        }
        LoosePair p(std::move(in), std::move(ex));
        AugmentedPair ap = augment(inst, p);

        bool sep_empty = true, cov_empty = true;
        for (const Bitset& e : inst.g.edges)
            if (!e.intersects(ap.a)) { sep_empty = false; break; }
        for (const Bitset& e : inst.h.edges)
            if (e.is_subset_of(ap.a)) { cov_empty = false; break; }
        if (sep_empty && cov_empty) {
            branch = 1;
            out = ap.a;
            return true;
        }
        bool com_empty = true, mis_empty = true;
        for (const Bitset& e : inst.h.edges)
            if (!e.intersects(ap.b)) { com_empty = false; break; }
        for (const Bitset& e : inst.g.edges)
            if (e.is_subset_of(ap.b)) { mis_empty = false; break; }
        if (com_empty && mis_empty) {
            branch = 2;
            out = ap.b.complement();
            return true;
        }
        return false;
    }

    LabelSet to_label_set(const std::vector<std::size_t>& combo) const {
        LabelSet s;
        s.labels.reserve(combo.size());
        for (std::size_t idx : combo) s.labels.push_back(universe[idx]);
        return s;
    }
};

void require_ip(const Instance& i) {
    if (auto p = intersection_property_violation(i))
        throw IntersectionPropertyError(
            "intersection property violated: G-edge " + std::to_string(p->first) +
            " and H-edge " + std::to_string(p->second) + " are disjoint");
}

} // namespace

ComputeNtResult compute_new_transversal_serial(const Instance& i,
                                               std::optional<std::size_t> max_size) {
    require_ip(i);
    const std::size_t bound = max_size.value_or(default_guess_bound(i.h.edge_count()));
    GuessEvaluator eval(i);
    CombinationEnumerator combos(eval.universe.size(), bound);

    ComputeNtResult res;
    std::vector<std::size_t> combo;
    Bitset out;
    int branch = 0;
    while (combos.next(combo)) {
        ++res.label_sets_tried;
        if (eval.accepts(combo, branch, out)) {
            res.transversal = out;
            res.sigma = eval.to_label_set(combo);
            res.branch = branch;
            return res;
        }
    }
    return res;
}

ComputeNtResult compute_new_transversal(const Instance& i, std::optional<std::size_t> max_size,
                                        int jobs) {
    if (jobs <= 1) return compute_new_transversal_serial(i, max_size);
    require_ip(i);
    const std::size_t bound = max_size.value_or(default_guess_bound(i.h.edge_count()));
    GuessEvaluator eval(i);
    const std::size_t n = eval.universe.size();

    ComputeNtResult res;

    // cardinality 0: the empty guess
    {
        std::vector<std::size_t> combo;
        Bitset out;
        int branch = 0;
        ++res.label_sets_tried;
        if (eval.accepts(combo, branch, out)) {
            res.transversal = out;
            res.sigma = LabelSet{};
            res.branch = branch;
            return res;
        }
    }

    for (std::size_t k = 1; k <= bound && k <= n; ++k) {
        // Blocks share a cardinality and a first label index; blocks are
        // contiguous in the set order, so the block with the least first
        // index that accepts holds the globally least accepted guess.
        std::atomic<std::size_t> best_first{SIZE_MAX};
        std::vector<std::size_t> best_combo;
        Bitset best_out;
        int best_branch = 0;
        std::uint64_t tried = 0;

        const std::int64_t first_end = static_cast<std::int64_t>(n - k);
#ifdef _OPENMP
        #pragma omp parallel num_threads(jobs)
#endif
        {
            std::vector<std::size_t> combo(k);
            Bitset out;
            int branch = 0;
            std::uint64_t local_tried = 0;
#ifdef _OPENMP
            #pragma omp for schedule(dynamic, 1) nowait
#endif
            for (std::int64_t first = 0; first <= first_end; ++first) {
                if (static_cast<std::size_t>(first) > best_first.load(std::memory_order_relaxed))
                    continue;  // a block before this one already accepted
                // enumerate suffixes {first+1..n-1} choose k-1, lex order
                for (std::size_t j = 0; j < k; ++j) combo[j] = static_cast<std::size_t>(first) + j;
                bool more = true;
                while (more) {
                    ++local_tried;
                    if (eval.accepts(combo, branch, out)) {
#ifdef _OPENMP
                        #pragma omp critical(hgdual_computent_best)
#endif
                        {
                            if (static_cast<std::size_t>(first) <
                                best_first.load(std::memory_order_relaxed)) {
                                best_first.store(static_cast<std::size_t>(first),
                                                 std::memory_order_relaxed);
                                best_combo = combo;
                                best_out = out;
                                best_branch = branch;
                            }
                        }
                        break;  // first hit in a block is the block's least
                    }
                    // next combination with the same fixed first element
                    more = false;
                    for (std::size_t idx = k; idx-- > 1;) {
                        if (combo[idx] + 1 <= n - k + idx) {
                            ++combo[idx];
                            for (std::size_t j = idx + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
                            more = true;
                            break;
                        }
                    }
                }
            }
#ifdef _OPENMP
            #pragma omp atomic
#endif
            tried += local_tried;
        }

        res.label_sets_tried += tried;
        if (best_first.load() != SIZE_MAX) {
            res.transversal = best_out;
            res.sigma = eval.to_label_set(best_combo);
            res.branch = best_branch;
            return res;
        }
    }
    return res;
}

std::optional<LabelSet> nd_check_random(const Instance& i, std::uint64_t trials,
                                        std::uint64_t seed) {
    if (check_simple_ip(i)) return LabelSet{};  // accept before any guess is needed

    const std::vector<Label> universe = label_universe(i);
    const std::size_t n = universe.size();
    const std::size_t bound = std::min(default_guess_bound(i.h.edge_count()), n);

    // cardinality weighted by C(n, j): uniform over the whole guess space
    std::vector<double> weights(bound + 1);
    double c = 1.0;
    weights[0] = 1.0;
    for (std::size_t j = 1; j <= bound; ++j) {
        c = c * static_cast<double>(n - j + 1) / static_cast<double>(j);
        weights[j] = c;
    }

    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> pick_card(weights.begin(), weights.end());
    std::vector<std::size_t> indices(n);

    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t j = pick_card(rng);
        for (std::size_t x = 0; x < n; ++x) indices[x] = x;
        std::vector<Label> labels;
        labels.reserve(j);
        for (std::size_t x = 0; x < j; ++x) {  // partial Fisher-Yates
            std::uniform_int_distribution<std::size_t> pick(x, n - 1);
            std::swap(indices[x], indices[pick(rng)]);
            labels.push_back(universe[indices[x]]);
        }
        LabelSet sigma = LabelSet::of(std::move(labels));
        if (check_witness_aug(i, sigma)) return sigma;
    }
    return std::nullopt;
}

Bitset minimize_transversal(const Hypergraph& g, const Bitset& t) {
    if (!is_transversal(g, t))
        throw std::invalid_argument("minimize_transversal: input is not a transversal");
    Bitset out = t;
    t.for_each([&](std::size_t v) {
        out.reset(v);
        if (!is_transversal(g, out)) out.set(v);
    });
    return out;
}

Hypergraph dualize(const Hypergraph& g) {
    if (!is_simple(g))
        throw std::invalid_argument("dualize: input is not simple; minimize it first");
    Hypergraph acc(g.universe_size);
    acc.names = g.names;
    for (;;) {
        Instance pair(g, acc);
        SearchStats stats;
        auto witness = det_new_transversal(pair, Assignment::empty(g.universe_size), stats);
        if (!witness) break;
        acc.edges.push_back(minimize_transversal(g, witness->a));
    }
    return acc;
}

} // namespace hgdual
