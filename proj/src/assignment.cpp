#include "hgdual/assignment.hpp"

#include <stdexcept>
#include <string>

namespace hgdual {

namespace {

[[noreturn]] void extension_error(const std::string& what) {
    throw std::invalid_argument("extend: " + what);
}

} // namespace

Assignment extend(const Instance& i, const Assignment& sigma, ExtensionType kind,
                  VertexId v, std::optional<EdgeId> edge) {
    if (v >= i.universe_size()) extension_error("vertex outside the universe");
    if (!sigma.is_free(v)) extension_error("vertex is not free in the assignment");

    Bitset in = sigma.included;
    Bitset ex = sigma.excluded;
    switch (kind) {
    case ExtensionType::Include:
        in.set(v);
        break;
    case ExtensionType::Exclude:
        ex.set(v);
        break;
    case ExtensionType::IncludeCritical: {
        if (!edge) extension_error("type (ii) requires a witnessing G-edge");
        if (*edge >= i.g.edge_count()) extension_error("G-edge index out of range");
        const Bitset& e = i.g.edges[*edge];
        if (!e.test(v)) extension_error("vertex does not belong to the witnessing edge");
        if (e.intersects(sigma.included))
            extension_error("witnessing edge is not in Sep of the assignment");
        in.set(v);
        ex |= e;
        ex.reset(v);
        break;
    }
    case ExtensionType::ExcludeCritical: {
        if (!edge) extension_error("type (iv) requires a witnessing H-edge");
        if (*edge >= i.h.edge_count()) extension_error("H-edge index out of range");
        const Bitset& e = i.h.edges[*edge];
        if (!e.test(v)) extension_error("vertex does not belong to the witnessing edge");
        if (e.intersects(sigma.excluded))
            extension_error("witnessing edge is not in Com of the assignment");
        ex.set(v);
        in |= e;
        in.reset(v);
        break;
    }
    }
    return Assignment(std::move(in), std::move(ex));
}

std::vector<EdgeId> sep(const Instance& i, const LoosePair& p) {
    std::vector<EdgeId> out;
    for (std::size_t j = 0; j < i.g.edges.size(); ++j)
        if (!i.g.edges[j].intersects(p.included)) out.push_back(j);
    return out;
}

std::vector<EdgeId> com(const Instance& i, const LoosePair& p) {
    std::vector<EdgeId> out;
    for (std::size_t j = 0; j < i.h.edges.size(); ++j)
        if (!i.h.edges[j].intersects(p.excluded)) out.push_back(j);
    return out;
}

std::vector<EdgeId> mis(const Instance& i, const LoosePair& p) {
    std::vector<EdgeId> out;
    for (std::size_t j = 0; j < i.g.edges.size(); ++j)
        if (i.g.edges[j].is_subset_of(p.excluded)) out.push_back(j);
    return out;
}

std::vector<EdgeId> cov(const Instance& i, const LoosePair& p) {
    std::vector<EdgeId> out;
    for (std::size_t j = 0; j < i.h.edges.size(); ++j)
        if (i.h.edges[j].is_subset_of(p.included)) out.push_back(j);
    return out;
}

FrequencySplit frequent_vertices(const Instance& i, const LoosePair& p) {
    const Bitset free = p.free_vertices();
    std::vector<EdgeId> compatible = com(i, p);
    // Half threshold: count >= ceil(|Com|/2), integers only.
    const std::size_t threshold = (compatible.size() + 1) / 2;

    FrequencySplit split{Bitset(i.universe_size()), Bitset(i.universe_size())};
    free.for_each([&](std::size_t v) {
        std::size_t n = 0;
        for (EdgeId j : compatible)
            if (i.h.edges[j].test(v)) ++n;
        if (n >= threshold)
            split.frequent.set(v);
        else
            split.infrequent.set(v);
    });
    return split;
}

AugmentedPair augment(const Instance& i, const LoosePair& p) {
    FrequencySplit split = frequent_vertices(i, p);
    return AugmentedPair{p.included | split.frequent, p.excluded | split.infrequent};
}

bool is_witness(const Instance& i, const LoosePair& p) {
    auto sep_empty = [&] {
        for (const Bitset& e : i.g.edges)
            if (!e.intersects(p.included)) return false;
        return true;
    };
    auto com_empty = [&] {
        for (const Bitset& e : i.h.edges)
            if (!e.intersects(p.excluded)) return false;
        return true;
    };
    auto cov_empty = [&] {
        for (const Bitset& e : i.h.edges)
            if (e.is_subset_of(p.included)) return false;
        return true;
    };
    auto mis_empty = [&] {
        for (const Bitset& e : i.g.edges)
            if (e.is_subset_of(p.excluded)) return false;
        return true;
    };
    return (sep_empty() && cov_empty()) || (com_empty() && mis_empty());
}

Instance reduced_instance(const Instance& i, const Assignment& sigma) {
    const Bitset free = sigma.free_vertices();
    Hypergraph g_red = project(restrict(i.g, sigma.included.complement()), free);
    Hypergraph h_red = project(restrict(i.h, sigma.excluded.complement()), free);
    return Instance(std::move(g_red), std::move(h_red));
}

bool coherent_with(const Assignment& sigma, const Bitset& t) {
    return sigma.included.is_subset_of(t) && !sigma.excluded.intersects(t);
}

} // namespace hgdual
