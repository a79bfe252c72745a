#ifndef HGDUAL_ASSIGNMENT_HPP
#define HGDUAL_ASSIGNMENT_HPP

#include <vector>

#include "hgdual/hypergraph.hpp"

namespace hgdual {

/// Included/excluded pair with no disjointness requirement. Label-set
/// guesses evaluate to these; inconsistent guesses never silently become
/// assignments.
struct LoosePair {
    Bitset included;
    Bitset excluded;

    LoosePair() = default;
    LoosePair(Bitset in, Bitset ex)
        : included(std::move(in)), excluded(std::move(ex)) {
        if (included.capacity() != excluded.capacity())
            throw std::invalid_argument("pair sides must share one universe");
    }

    static LoosePair empty(std::size_t universe) {
        return LoosePair(Bitset(universe), Bitset(universe));
    }

    Bitset free_vertices() const {
        return (included | excluded).complement();
    }

    bool operator==(const LoosePair&) const = default;
};

/// Search state: disjoint included/excluded vertex sets.
struct Assignment {
    Bitset included;
    Bitset excluded;

    Assignment() = default;
    Assignment(Bitset in, Bitset ex)
        : included(std::move(in)), excluded(std::move(ex)) {
        if (included.capacity() != excluded.capacity())
            throw std::invalid_argument("assignment sides must share one universe");
        if (included.intersects(excluded))
            throw std::invalid_argument("assignment In and Ex overlap");
    }

    /// The empty assignment over a universe.
    static Assignment empty(std::size_t universe) {
        return Assignment(Bitset(universe), Bitset(universe));
    }

    Bitset free_vertices() const { return (included | excluded).complement(); }
    bool is_free(VertexId v) const { return !included.test(v) && !excluded.test(v); }

    LoosePair as_pair() const { return LoosePair(included, excluded); }
    operator LoosePair() const { return as_pair(); }

    bool operator==(const Assignment&) const = default;
};

/// Augmentation result: a = In u Freq, b = Ex u Infreq. Covers the
/// universe; overlap is confined to the source pair's In n Ex.
struct AugmentedPair {
    Bitset a;
    Bitset b;

    LoosePair as_pair() const { return LoosePair(a, b); }
    operator LoosePair() const { return as_pair(); }
};

enum class ExtensionType {
    Include,           // (i)   <In u {v}, Ex>
    IncludeCritical,   // (ii)  <In u {v}, Ex u (G \ {v})>
    Exclude,           // (iii) <In, Ex u {v}>
    ExcludeCritical,   // (iv)  <In u (H \ {v}), Ex u {v}>
};

/// Apply one extension-type step. Throws on a non-free vertex or an
/// inapplicable edge, naming the violated precondition.
Assignment extend(const Instance& i, const Assignment& sigma, ExtensionType kind,
                  VertexId v, std::optional<EdgeId> edge = std::nullopt);

/// Sep: edges of G disjoint from the included side, input order.
std::vector<EdgeId> sep(const Instance& i, const LoosePair& p);

/// Com: edges of H disjoint from the excluded side.
std::vector<EdgeId> com(const Instance& i, const LoosePair& p);

/// Mis: edges of G entirely inside the excluded side.
std::vector<EdgeId> mis(const Instance& i, const LoosePair& p);

/// Cov: edges of H entirely inside the included side.
std::vector<EdgeId> cov(const Instance& i, const LoosePair& p);

struct FrequencySplit {
    Bitset frequent;
    Bitset infrequent;
};

/// Partition the free vertices by the Half threshold: v is frequent iff
/// it lies in at least ceil(|Com|/2) compatible H-edges. With Com empty
/// every free vertex is frequent.
FrequencySplit frequent_vertices(const Instance& i, const LoosePair& p);

/// sigma+ = <In u Freq, Ex u Infreq>.
AugmentedPair augment(const Instance& i, const LoosePair& p);

/// Witnessing condition, evaluated literally on the pair:
/// (Sep = 0 and Cov = 0) or (Com = 0 and Mis = 0).
bool is_witness(const Instance& i, const LoosePair& p);

/// I_sigma = <(G_{V\In})^{V\(In u Ex)}, (H_{V\Ex})^{V\(In u Ex)}>.
/// Both components are simple by construction.
Instance reduced_instance(const Instance& i, const Assignment& sigma);

/// In subset of t and Ex disjoint from t.
bool coherent_with(const Assignment& sigma, const Bitset& t);

} // namespace hgdual

#endif
