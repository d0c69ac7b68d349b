#ifndef PETRIAL_BITVEC_HPP
#define PETRIAL_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace petrial {

// A set of small nonnegative integers backed by packed 64-bit words.
// Value semantics throughout; equality is set equality, storage width is
// representation only and grows on demand.
class BitVec {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BitVec() = default;
    explicit BitVec(std::size_t bit_capacity) : words_((bit_capacity + 63) / 64, 0) {}

    bool test(std::size_t i) const {
        const std::size_t w = i / 64;
        return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
    }

    void set(std::size_t i) {
        const std::size_t w = i / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (i % 64);
    }

    void reset(std::size_t i) {
        const std::size_t w = i / 64;
        if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (i % 64));
    }

    void clear() { words_.assign(words_.size(), 0); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    BitVec& operator^=(const BitVec& o) {
        grow_to(o.words_.size());
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        grow_to(o.words_.size());
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    bool is_subset_of(const BitVec& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~(i < o.words_.size() ? o.words_[i] : 0)) return false;
        return true;
    }

    bool operator==(const BitVec& o) const {
        const std::size_t n = words_.size() < o.words_.size() ? words_.size() : o.words_.size();
        for (std::size_t i = 0; i < n; ++i)
            if (words_[i] != o.words_[i]) return false;
        for (std::size_t i = n; i < words_.size(); ++i)
            if (words_[i]) return false;
        for (std::size_t i = n; i < o.words_.size(); ++i)
            if (o.words_[i]) return false;
        return true;
    }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    std::size_t find_first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return npos;
    }

    // First member strictly greater than i.
    std::size_t find_next(std::size_t i) const {
        ++i;
        std::size_t w = i / 64;
        if (w >= words_.size()) return npos;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i % 64));
        while (true) {
            if (cur) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w >= words_.size()) return npos;
            cur = words_[w];
        }
    }

    std::vector<std::size_t> ids() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t v = find_first(); v != npos; v = find_next(v)) out.push_back(v);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t v = find_first(); v != npos; v = find_next(v)) f(v);
    }

    // Low word, for hashing/dedup keys of sets known to fit 64 bits.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

private:
    void grow_to(std::size_t nwords) {
        if (words_.size() < nwords) words_.resize(nwords, 0);
    }

    std::vector<std::uint64_t> words_;
};

} // namespace petrial

#endif
