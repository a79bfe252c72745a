#ifndef HGDUAL_BITSET_HPP
#define HGDUAL_BITSET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hgdual {

/// Fixed-capacity vertex set backed by 64-bit words.
///
/// Capacity equals the universe size of the owning instance and never
/// changes after construction. All set algebra (union, intersection,
/// difference, complement) stays within that capacity.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    Bitset(std::size_t nbits, std::initializer_list<std::size_t> elems)
        : Bitset(nbits) {
        for (std::size_t e : elems) set(e);
    }

    static Bitset full(std::size_t nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t capacity() const { return nbits_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }
    bool empty() const { return none(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    /// Complement within the capacity.
    Bitset complement() const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    /// Numeric order of the bit pattern, vertex 0 being the least
    /// significant bit. Used for canonical edge ordering.
    static int compare(const Bitset& a, const Bitset& b) {
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
        }
        return 0;
    }

    bool operator<(const Bitset& o) const { return compare(*this, o) < 0; }

    /// Visit set indices in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<std::size_t>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> v;
        v.reserve(count());
        for_each([&](std::size_t i) { v.push_back(i); });
        return v;
    }

    /// Lowest set index; capacity() when empty.
    std::size_t first() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return wi * 64 + __builtin_ctzll(words_[wi]);
        return nbits_;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= nbits_) throw std::out_of_range("Bitset: index beyond capacity");
    }

    void trim() {
        if (nbits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hgdual

#endif
