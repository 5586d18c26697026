#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sicrank {

/// Fixed-size dynamic bitset used for adjacency rows and vertex subsets.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

    void set_all()
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        trim();
    }
    void clear()
    {
        for (auto& w : words_)
            w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    /// First set bit at position >= from, or npos.
    std::size_t find_next(std::size_t from) const
    {
        if (from >= size_)
            return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size())
                return npos;
            w = words_[wi];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    /// Last set bit, or npos.
    std::size_t find_last() const
    {
        for (std::size_t wi = words_.size(); wi-- > 0;)
            if (words_[wi])
                return (wi << 6) + 63 - static_cast<std::size_t>(std::countl_zero(words_[wi]));
        return npos;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool is_subset_of(const Bitset& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }
    bool intersects(const Bitset& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset complement() const
    {
        Bitset r = *this;
        for (auto& w : r.words_)
            w = ~w;
        r.trim();
        return r;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Lexicographic order on the sorted element lists.
    friend bool lex_less(const Bitset& a, const Bitset& b)
    {
        std::size_t i = a.find_first(), j = b.find_first();
        while (i != npos && j != npos) {
            if (i != j)
                return i < j;
            i = a.find_next(i + 1);
            j = b.find_next(j + 1);
        }
        return i == npos && j != npos;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim()
    {
        if (size_ & 63)
            words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const
    {
        std::size_t h = b.size();
        for (auto w : b.words())
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace sicrank
