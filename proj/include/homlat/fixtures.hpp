#pragma once

#include <homlat/io.hpp>
#include <homlat/poset.hpp>
#include <homlat/synth.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace homlat {

/// Every poset on n elements up to isomorphism. Each class has a naturally
/// labelled member (x < y implies x precedes y), so only relations inside the
/// upper triangle are enumerated; duplicates are removed with poset_iso.
/// Output order is generation order, which is deterministic.
inline std::vector<Poset> posets_of_size(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            slots.push_back({i, j});
    std::vector<Poset> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        std::vector<Bitset> up(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            up[i].set(i);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1)
                up[slots[s].first].set(slots[s].second);
        bool transitive = true;
        for (std::size_t i = 0; i < n && transitive; ++i)
            up[i].for_each([&](std::size_t j) {
                if (! up[j].is_subset_of(up[i]))
                    transitive = false;
            });
        if (! transitive)
            continue;
        auto p = Poset::from_upsets(Poset::numbered(n), std::move(up));
        bool fresh = true;
        for (auto & q : out)
            if (poset_iso(p, q)) {
                fresh = false;
                break;
            }
        if (fresh)
            out.push_back(std::move(p));
    }
    return out;
}

/// All nonempty posets with at most max elements, by size.
inline std::vector<Poset> poset_census(std::size_t max)
{
    std::vector<Poset> out;
    for (std::size_t n = 1; n <= max; ++n)
        for (auto & p : posets_of_size(n))
            out.push_back(std::move(p));
    return out;
}

struct Fixture {
    std::string name;
    std::string description;
    std::optional<Poset> poset;
    std::optional<FiniteAlgebra> algebra;

    /// File contents in the matching format.
    std::string text() const { return poset ? io::write_poset(*poset) : io::write_algebra(*algebra); }
};

inline std::vector<Fixture> fixtures()
{
    std::vector<Fixture> out;
    out.push_back({"fig2-poset", "six-element poset of the covering forest figure", figure2_poset(), std::nullopt});
    out.push_back({"fig4-U", "five-element unary algebra U", std::nullopt, figure4_u()});
    out.push_back({"fig4-G", "G* for the three-vertex digraph", std::nullopt, graph_star(figure4_graph())});
    out.push_back({"fig6-pentagon", "bisemilattice on {0,a,b,1} with all elements named", std::nullopt, pentagon_algebra()});
    out.push_back({"s3-gset", "cosets of <(0 1)> in S3 plus a fixed point, all named", std::nullopt,
        gset_coset_algebra(6, groups::symmetric(3), {0, 2})});
    out.push_back({"klein4", "Klein four-group as <Z2^2; +, 0>", std::nullopt, groups::klein4()});
    return out;
}

inline std::optional<Fixture> find_fixture(const std::string & name)
{
    for (auto & f : fixtures())
        if (f.name == name)
            return f;
    return std::nullopt;
}

} // namespace homlat
