#pragma once

#include <homlat/error.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace homlat {

/// Union-find over {0..n-1}; the working structure for congruence generation.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true when the two classes were distinct.
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
        return true;
    }

    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned> rank_;
};

/// An equivalence relation on {0..n-1} stored as normalized block indices:
/// blocks are numbered in order of their least element.
class Partition {
public:
    Partition() = default;

    /// Accepts arbitrary labels and normalizes them.
    explicit Partition(const std::vector<std::size_t> & labels) : block_id_(labels.size())
    {
        std::vector<std::size_t> seen;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            auto it = std::find(seen.begin(), seen.end(), labels[i]);
            if (it == seen.end()) {
                block_id_[i] = seen.size();
                seen.push_back(labels[i]);
            }
            else
                block_id_[i] = static_cast<std::size_t>(it - seen.begin());
        }
        blocks_ = seen.size();
    }

    static Partition identity(std::size_t n)
    {
        std::vector<std::size_t> l(n);
        std::iota(l.begin(), l.end(), std::size_t{0});
        return Partition(l);
    }

    static Partition total(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

    static Partition from_sets(DisjointSets & ds)
    {
        std::vector<std::size_t> l(ds.size());
        for (std::size_t i = 0; i < l.size(); ++i)
            l[i] = ds.find(i);
        return Partition(l);
    }

    /// Builds from explicit blocks, e.g. {{1},{3},{0,2}}; every element must appear once.
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>> & blocks)
    {
        std::vector<std::size_t> l(n, n);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (auto x : blocks[b]) {
                if (x >= n || l[x] != n)
                    throw Error(ErrorKind::InvalidArgument, "blocks do not partition the universe");
                l[x] = b;
            }
        if (std::find(l.begin(), l.end(), n) != l.end())
            throw Error(ErrorKind::InvalidArgument, "blocks do not cover the universe");
        return Partition(l);
    }

    std::size_t universe_size() const noexcept { return block_id_.size(); }
    std::size_t num_blocks() const noexcept { return blocks_; }
    std::size_t block_of(std::size_t x) const { return block_id_[x]; }
    const std::vector<std::size_t> & block_ids() const noexcept { return block_id_; }
    bool related(std::size_t a, std::size_t b) const { return block_id_[a] == block_id_[b]; }

    bool is_identity() const noexcept { return blocks_ == block_id_.size(); }
    bool is_total() const noexcept { return blocks_ <= 1; }

    std::vector<std::vector<std::size_t>> blocks() const
    {
        std::vector<std::vector<std::size_t>> out(blocks_);
        for (std::size_t i = 0; i < block_id_.size(); ++i)
            out[block_id_[i]].push_back(i);
        return out;
    }

    /// this ⊆ other as relations.
    bool refines(const Partition & other) const
    {
        std::vector<std::size_t> image(blocks_, other.blocks_);
        for (std::size_t i = 0; i < block_id_.size(); ++i) {
            auto & img = image[block_id_[i]];
            if (img == other.blocks_)
                img = other.block_id_[i];
            else if (img != other.block_id_[i])
                return false;
        }
        return true;
    }

    friend Partition meet(const Partition & a, const Partition & b)
    {
        std::vector<std::size_t> l(a.block_id_.size());
        for (std::size_t i = 0; i < l.size(); ++i)
            l[i] = a.block_id_[i] * (b.blocks_ + 1) + b.block_id_[i];
        return Partition(l);
    }

    friend Partition join(const Partition & a, const Partition & b)
    {
        DisjointSets ds(a.block_id_.size());
        std::vector<std::size_t> first_a(a.blocks_, a.block_id_.size()), first_b(b.blocks_, b.block_id_.size());
        for (std::size_t i = 0; i < a.block_id_.size(); ++i) {
            auto & fa = first_a[a.block_id_[i]];
            if (fa == a.block_id_.size())
                fa = i;
            else
                ds.unite(fa, i);
            auto & fb = first_b[b.block_id_[i]];
            if (fb == b.block_id_.size())
                fb = i;
            else
                ds.unite(fb, i);
        }
        return from_sets(ds);
    }

    /// Rendering such as "{0,2 | 1 | 3}".
    std::string to_string() const
    {
        std::string s = "{";
        auto bs = blocks();
        for (std::size_t b = 0; b < bs.size(); ++b) {
            if (b)
                s += " | ";
            for (std::size_t j = 0; j < bs[b].size(); ++j) {
                if (j)
                    s += ",";
                s += std::to_string(bs[b][j]);
            }
        }
        return s + "}";
    }

    friend bool operator==(const Partition & a, const Partition & b) { return a.block_id_ == b.block_id_; }

    /// Canonical order: more blocks first (identity first), then lexicographic block ids.
    friend bool canonical_less(const Partition & a, const Partition & b)
    {
        if (a.blocks_ != b.blocks_)
            return a.blocks_ > b.blocks_;
        return a.block_id_ < b.block_id_;
    }

private:
    std::vector<std::size_t> block_id_;
    std::size_t blocks_ = 0;
};

/// Every partition of {0..n-1} as restricted growth strings; only sensible for small n.
inline std::vector<Partition> all_partitions(std::size_t n)
{
    std::vector<Partition> out;
    std::vector<std::size_t> rgs(n, 0);
    if (n == 0) {
        out.emplace_back(rgs);
        return out;
    }
    auto rec = [&](auto & self, std::size_t i, std::size_t max_block) -> void {
        if (i == n) {
            out.emplace_back(rgs);
            return;
        }
        for (std::size_t b = 0; b <= max_block + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(max_block, b));
        }
    };
    rgs[0] = 0;
    if (n == 1)
        out.emplace_back(rgs);
    else
        rec(rec, 1, 0);
    return out;
}

} // namespace homlat
