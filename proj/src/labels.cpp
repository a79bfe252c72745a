#include "hgdual/labels.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hgdual {

int compare_labels(const Label& a, const Label& b) {
    if (a.v != b.v) return a.v < b.v ? -1 : 1;
    if (a.kind != b.kind) return a.kind == Label::Kind::Exclude ? -1 : 1;
    if (a.kind == Label::Kind::Exclude) return 0;
    if (a.g != b.g) return a.g < b.g ? -1 : 1;
    return 0;
}

LabelSet LabelSet::of(std::vector<Label> ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    LabelSet s;
    s.labels = std::move(ls);
    return s;
}

int compare_label_sets(const LabelSet& a, const LabelSet& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = compare_labels(a.labels[i], b.labels[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool is_consistent(const LoosePair& p) {
    return !p.included.intersects(p.excluded);
}

bool is_congruent(const Instance& i, const LabelSet& sigma) {
    for (const Label& l : sigma.labels) {
        if (l.v >= i.universe_size()) return false;
        if (l.kind == Label::Kind::IncludeCritical) {
            if (l.g >= i.g.edge_count()) return false;
            if (!i.g.edges[l.g].test(l.v)) return false;
        }
    }
    return true;
}

LoosePair sigma_of_labels(const Instance& i, const LabelSet& sigma) {
    if (!is_congruent(i, sigma))
        throw std::invalid_argument("sigma_of_labels: incongruent label set");
    Bitset in(i.universe_size());
    Bitset ex(i.universe_size());
    for (const Label& l : sigma.labels) {
        if (l.kind == Label::Kind::Exclude) {
            ex.set(l.v);
        } else {
            in.set(l.v);
            Bitset rest = i.g.edges[l.g];  // this label contributes G \ {v}
            rest.reset(l.v);
            ex |= rest;
        }
    }
    return LoosePair(std::move(in), std::move(ex));
}

Assignment sigma_of_path(const Instance& i, const Path& pi) {
    Assignment sigma = Assignment::empty(i.universe_size());
    for (std::size_t step = 0; step < pi.size(); ++step) {
        const Label& l = pi[step];
        try {
            if (l.kind == Label::Kind::Exclude)
                sigma = extend(i, sigma, ExtensionType::Exclude, l.v);
            else
                sigma = extend(i, sigma, ExtensionType::IncludeCritical, l.v, l.g);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sigma_of_path: step " + std::to_string(step + 1) +
                                        " is not applicable: " + e.what());
        }
    }
    return sigma;
}

std::vector<Label> label_universe(const Instance& i) {
    std::vector<Label> out;
    for (VertexId v = 0; v < i.universe_size(); ++v) {
        out.push_back(Label::exclude(v));
        for (EdgeId j = 0; j < i.g.edge_count(); ++j)
            if (i.g.edges[j].test(v)) out.push_back(Label::include_critical(v, j));
    }
    return out;
}

std::size_t default_guess_bound(std::size_t h_edge_count) {
    if (h_edge_count == 0) return 1;
    return static_cast<std::size_t>(std::bit_width(h_edge_count));  // floor(log2 m) + 1
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        unsigned __int128 num = static_cast<unsigned __int128>(r) * (n - i);
        unsigned __int128 v = num / (i + 1);
        if (v > UINT64_MAX) return UINT64_MAX;
        r = static_cast<std::uint64_t>(v);
    }
    return r;
}

std::uint64_t label_set_count(std::uint64_t n, std::uint64_t k) {
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j <= k; ++j) {
        std::uint64_t c = binomial_saturating(n, j);
        if (c == UINT64_MAX || total > UINT64_MAX - c) return UINT64_MAX;
        total += c;
    }
    return total;
}

bool CombinationEnumerator::next(std::vector<std::size_t>& out) {
    while (!done_) {
        if (!card_started_) {
            if (card_ > max_size_ || card_ > n_) {
                done_ = true;
                break;
            }
            cur_.resize(card_);
            for (std::size_t i = 0; i < card_; ++i) cur_[i] = i;
            card_started_ = true;
            out = cur_;
            return true;
        }
        // advance within the current cardinality
        std::size_t c = card_;
        std::size_t i = c;
        while (i-- > 0) {
            if (cur_[i] + 1 <= n_ - c + i) {
                ++cur_[i];
                for (std::size_t j = i + 1; j < c; ++j) cur_[j] = cur_[j - 1] + 1;
                out = cur_;
                return true;
            }
            if (i == 0) break;
        }
        ++card_;
        card_started_ = false;
    }
    return false;
}

LabelSetStream::LabelSetStream(const Instance& i, std::size_t max_size)
    : universe_(label_universe(i)), combos_(universe_.size(), max_size) {}

std::optional<LabelSet> LabelSetStream::next() {
    if (!combos_.next(scratch_)) return std::nullopt;
    LabelSet s;
    s.labels.reserve(scratch_.size());
    for (std::size_t idx : scratch_) s.labels.push_back(universe_[idx]);
    return s;
}

} // namespace hgdual
