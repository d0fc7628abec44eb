#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace homlat {

/// Dynamically sized bit set over a universe {0..size-1}. Used for element
/// sets, down-sets and search domains.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset full(std::size_t size)
    {
        Bitset b(size);
        for (std::size_t i = 0; i < size; ++i)
            b.set(i);
        return b;
    }

    static Bitset singleton(std::size_t size, std::size_t i)
    {
        Bitset b(size);
        b.set(i);
        return b;
    }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool any() const noexcept { return ! none(); }

    /// Index of the lowest set bit at or after `from`, or size() when none.
    std::size_t find_next(std::size_t from) const noexcept
    {
        if (from >= size_)
            return size_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size())
                return size_;
            w = words_[wi];
        }
    }

    std::size_t find_first() const noexcept { return find_next(0); }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t i = find_first(); i < size_; i = find_next(i + 1))
            f(i);
    }

    std::vector<std::size_t> elements() const
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool is_subset_of(const Bitset & other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    bool intersects(const Bitset & other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    Bitset & operator&=(const Bitset & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    Bitset & operator|=(const Bitset & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset & b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset & b) { return a |= b; }

    friend bool operator==(const Bitset &, const Bitset &) = default;

    /// Lexicographic comparison of the sorted element lists.
    friend bool lex_less(const Bitset & a, const Bitset & b)
    {
        std::size_t i = a.find_first(), j = b.find_first();
        while (i < a.size_ && j < b.size_) {
            if (i != j)
                return i < j;
            i = a.find_next(i + 1);
            j = b.find_next(j + 1);
        }
        return i >= a.size_ && j < b.size_;
    }

    std::size_t hash() const noexcept
    {
        std::size_t h = size_;
        for (auto w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for_each([&](std::size_t i) {
            if (! first)
                s += ",";
            first = false;
            s += std::to_string(i);
        });
        return s + "}";
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset & b) const noexcept { return b.hash(); }
};

} // namespace homlat
