#pragma once

#include <homlat/bitset.hpp>
#include <homlat/error.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace homlat {

using Cover = std::pair<std::size_t, std::size_t>;

enum class CoverMode {
    Strict, ///< redundant (transitively implied) covers are an error
    Reduce, ///< redundant covers are dropped silently
};

/// A finite partial order presented by its cover pairs (a, b) meaning a ≺ b.
/// The reflexive-transitive closure is materialized as per-element up-sets and
/// down-sets, so comparisons are single bit tests.
class Poset {
public:
    Poset() = default;

    static Poset from_covers(std::vector<std::string> names, std::vector<Cover> covers, CoverMode mode = CoverMode::Strict)
    {
        const std::size_t n = names.size();
        for (auto [a, b] : covers) {
            if (a >= n || b >= n)
                throw Error(ErrorKind::InvalidPoset, "cover index out of range: [" + std::to_string(a) + ", " + std::to_string(b) + "]");
            if (a == b)
                throw Error(ErrorKind::CyclicCovers, "element " + names[a] + " covers itself");
        }
        std::sort(covers.begin(), covers.end());
        if (auto dup = std::adjacent_find(covers.begin(), covers.end()); dup != covers.end()) {
            if (mode == CoverMode::Strict)
                throw Error(ErrorKind::RedundantCover, "duplicate cover " + names[dup->first] + " < " + names[dup->second]);
            covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
        }

        Poset p;
        p.names_ = std::move(names);
        p.build_closure(covers);

        std::vector<std::vector<std::size_t>> succ(n);
        for (auto [a, b] : covers)
            succ[a].push_back(b);
        std::vector<Cover> kept;
        for (auto [a, b] : covers) {
            bool redundant = false;
            for (auto d : succ[a])
                if (d != b && p.up_[d].test(b)) {
                    redundant = true;
                    break;
                }
            if (! redundant)
                kept.push_back({a, b});
            else if (mode == CoverMode::Strict)
                throw Error(ErrorKind::RedundantCover, p.names_[a] + " < " + p.names_[b] + " is implied by transitivity");
        }
        p.set_covers(std::move(kept));
        return p;
    }

    /// Builds from a partial order given as up-sets: up[x] = {y : x <= y}.
    /// The relation is validated (reflexive, antisymmetric, transitive).
    static Poset from_upsets(std::vector<std::string> names, std::vector<Bitset> up)
    {
        const std::size_t n = names.size();
        if (up.size() != n)
            throw Error(ErrorKind::InvalidPoset, "relation size mismatch");
        for (std::size_t x = 0; x < n; ++x) {
            if (! up[x].test(x))
                throw Error(ErrorKind::InvalidPoset, "relation not reflexive at " + names[x]);
            for (std::size_t y = up[x].find_first(); y < n; y = up[x].find_next(y + 1)) {
                if (y != x && up[y].test(x))
                    throw Error(ErrorKind::InvalidPoset, "relation not antisymmetric: " + names[x] + ", " + names[y]);
                if (! up[y].is_subset_of(up[x]))
                    throw Error(ErrorKind::InvalidPoset, "relation not transitive at " + names[x]);
            }
        }
        std::vector<Cover> covers;
        for (std::size_t x = 0; x < n; ++x)
            up[x].for_each([&](std::size_t y) {
                if (y == x)
                    return;
                // y covers x iff no z strictly between
                for (std::size_t z = up[x].find_first(); z < n; z = up[x].find_next(z + 1))
                    if (z != x && z != y && up[z].test(y))
                        return;
                covers.push_back({x, y});
            });
        Poset p;
        p.names_ = std::move(names);
        p.build_closure(covers);
        p.set_covers(std::move(covers));
        return p;
    }

    static Poset from_relation(std::vector<std::string> names, const std::function<bool(std::size_t, std::size_t)> & leq)
    {
        const std::size_t n = names.size();
        std::vector<Bitset> up(n, Bitset(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (leq(x, y))
                    up[x].set(y);
        return from_upsets(std::move(names), std::move(up));
    }

    static Poset chain(std::size_t n)
    {
        std::vector<Cover> c;
        for (std::size_t i = 0; i + 1 < n; ++i)
            c.push_back({i, i + 1});
        return from_covers(numbered(n), c);
    }

    static Poset antichain(std::size_t n) { return from_covers(numbered(n), {}); }

    static std::vector<std::string> numbered(std::size_t n)
    {
        std::vector<std::string> names(n);
        for (std::size_t i = 0; i < n; ++i)
            names[i] = std::to_string(i);
        return names;
    }

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::vector<std::string> & names() const noexcept { return names_; }
    const std::string & name(std::size_t x) const { return names_[x]; }
    const std::vector<Cover> & covers() const noexcept { return covers_; }

    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && up_[a].test(b); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
    bool covered_by(std::size_t a, std::size_t b) const
    {
        return std::binary_search(covers_.begin(), covers_.end(), Cover{a, b});
    }

    const Bitset & up(std::size_t x) const { return up_[x]; }
    const Bitset & down(std::size_t x) const { return down_[x]; }
    const std::vector<std::size_t> & lower_covers(std::size_t x) const { return lower_[x]; }
    const std::vector<std::size_t> & upper_covers(std::size_t x) const { return upper_[x]; }

    std::vector<std::size_t> maximal() const
    {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < size(); ++x)
            if (upper_[x].empty())
                out.push_back(x);
        return out;
    }

    std::vector<std::size_t> minimal() const
    {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < size(); ++x)
            if (lower_[x].empty())
                out.push_back(x);
        return out;
    }

    std::optional<std::size_t> top() const
    {
        auto m = maximal();
        if (m.size() == 1 && down_[m[0]].count() == size())
            return m[0];
        return std::nullopt;
    }

    std::optional<std::size_t> bottom() const
    {
        auto m = minimal();
        if (m.size() == 1 && up_[m[0]].count() == size())
            return m[0];
        return std::nullopt;
    }

    /// Elements sorted so that every element follows all of its predecessors
    /// (by height, then index).
    const std::vector<std::size_t> & linear_extension() const noexcept { return linear_; }

    /// Length of the longest chain ending at x (minimal elements have height 0).
    std::size_t height(std::size_t x) const { return height_[x]; }

    /// Length of the longest chain starting at x.
    std::size_t depth(std::size_t x) const { return depth_[x]; }

    Poset induced(const std::vector<std::size_t> & subset) const
    {
        std::vector<std::string> names;
        for (auto x : subset)
            names.push_back(names_[x]);
        return from_relation(std::move(names), [&](std::size_t i, std::size_t j) { return leq(subset[i], subset[j]); });
    }

    Poset dual() const
    {
        std::vector<Cover> c;
        for (auto [a, b] : covers_)
            c.push_back({b, a});
        return from_covers(names_, c);
    }

    bool is_downset(const Bitset & s) const
    {
        for (std::size_t x = s.find_first(); x < size(); x = s.find_next(x + 1))
            if (! down_[x].is_subset_of(s))
                return false;
        return true;
    }

    bool is_upset(const Bitset & s) const
    {
        for (std::size_t x = s.find_first(); x < size(); x = s.find_next(x + 1))
            if (! up_[x].is_subset_of(s))
                return false;
        return true;
    }

    std::string set_label(const Bitset & s) const
    {
        std::string out = "{";
        bool first = true;
        s.for_each([&](std::size_t x) {
            if (! first)
                out += ",";
            first = false;
            out += names_[x];
        });
        return out + "}";
    }

private:
    void build_closure(const std::vector<Cover> & covers)
    {
        const std::size_t n = names_.size();
        std::vector<std::vector<std::size_t>> succ(n);
        std::vector<std::size_t> indeg(n, 0);
        for (auto [a, b] : covers) {
            succ[a].push_back(b);
            ++indeg[b];
        }
        std::vector<std::size_t> order;
        std::vector<std::size_t> ready;
        for (std::size_t x = 0; x < n; ++x)
            if (indeg[x] == 0)
                ready.push_back(x);
        while (! ready.empty()) {
            auto x = ready.back();
            ready.pop_back();
            order.push_back(x);
            for (auto y : succ[x])
                if (--indeg[y] == 0)
                    ready.push_back(y);
        }
        if (order.size() != n)
            throw Error(ErrorKind::CyclicCovers, "covers contain a cycle: " + describe_cycle(succ));

        up_.assign(n, Bitset(n));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            up_[*it].set(*it);
            for (auto y : succ[*it])
                up_[*it] |= up_[y];
        }
        down_.assign(n, Bitset(n));
        for (std::size_t x = 0; x < n; ++x)
            up_[x].for_each([&](std::size_t y) { down_[y].set(x); });
    }

    std::string describe_cycle(const std::vector<std::vector<std::size_t>> & succ) const
    {
        const std::size_t n = succ.size();
        std::vector<int> state(n, 0);
        std::vector<std::size_t> stack;
        std::string found;
        auto dfs = [&](auto & self, std::size_t x) -> bool {
            state[x] = 1;
            stack.push_back(x);
            for (auto y : succ[x]) {
                if (state[y] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), y);
                    for (; it != stack.end(); ++it)
                        found += names_[*it] + " < ";
                    found += names_[y];
                    return true;
                }
                if (state[y] == 0 && self(self, y))
                    return true;
            }
            stack.pop_back();
            state[x] = 2;
            return false;
        };
        for (std::size_t x = 0; x < n; ++x)
            if (state[x] == 0 && dfs(dfs, x))
                break;
        return found;
    }

    void set_covers(std::vector<Cover> covers)
    {
        const std::size_t n = names_.size();
        std::sort(covers.begin(), covers.end());
        covers_ = std::move(covers);
        lower_.assign(n, {});
        upper_.assign(n, {});
        for (auto [a, b] : covers_) {
            upper_[a].push_back(b);
            lower_[b].push_back(a);
        }
        height_.assign(n, 0);
        depth_.assign(n, 0);
        // down_[x].count() grows strictly along <, so it orders a linear extension
        linear_.resize(n);
        std::iota(linear_.begin(), linear_.end(), std::size_t{0});
        std::stable_sort(linear_.begin(), linear_.end(),
            [&](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
        for (auto x : linear_)
            for (auto c : lower_[x])
                height_[x] = std::max(height_[x], height_[c] + 1);
        for (auto it = linear_.rbegin(); it != linear_.rend(); ++it)
            for (auto c : upper_[*it])
                depth_[*it] = std::max(depth_[*it], depth_[c] + 1);
        std::stable_sort(linear_.begin(), linear_.end(),
            [&](std::size_t a, std::size_t b) { return height_[a] < height_[b]; });
    }

    std::vector<std::string> names_;
    std::vector<Cover> covers_;
    std::vector<Bitset> up_, down_;
    std::vector<std::vector<std::size_t>> lower_, upper_;
    std::vector<std::size_t> height_, depth_, linear_;
};

/// A finite lattice: a poset together with its meet and join tables.
class Lattice {
public:
    Lattice() = default;

    /// Computes bounds from the order and fails with NotALattice when some
    /// pair lacks a least upper or greatest lower bound.
    static Lattice from_poset(Poset p)
    {
        const std::size_t n = p.size();
        if (n == 0)
            throw Error(ErrorKind::NotALattice, "a lattice must be nonempty");
        std::vector<std::size_t> meet(n * n), join(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                auto j = least_of(p, p.up(a) & p.up(b), true);
                auto m = least_of(p, p.down(a) & p.down(b), false);
                if (! j || ! m)
                    throw Error(ErrorKind::NotALattice, "no " + std::string(! j ? "join" : "meet") + " for " + p.name(a) + ", " + p.name(b));
                join[a * n + b] = join[b * n + a] = *j;
                meet[a * n + b] = meet[b * n + a] = *m;
            }
        return Lattice(std::move(p), std::move(meet), std::move(join));
    }

    /// For constructions whose tables are known to be correct (down-set
    /// lattices, divisor lattices).
    static Lattice from_tables(Poset p, std::vector<std::size_t> meet, std::vector<std::size_t> join)
    {
        return Lattice(std::move(p), std::move(meet), std::move(join));
    }

    std::size_t size() const noexcept { return poset_.size(); }
    const Poset & poset() const noexcept { return poset_; }
    bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
    std::size_t bottom() const { return *poset_.bottom(); }
    std::size_t top() const { return *poset_.top(); }

private:
    Lattice(Poset p, std::vector<std::size_t> meet, std::vector<std::size_t> join) :
        poset_(std::move(p)), meet_(std::move(meet)), join_(std::move(join))
    {
    }

    static std::optional<std::size_t> least_of(const Poset & p, const Bitset & s, bool least)
    {
        for (std::size_t x = s.find_first(); x < p.size(); x = s.find_next(x + 1))
            if (s.is_subset_of(least ? p.up(x) : p.down(x)))
                return x;
        return std::nullopt;
    }

    Poset poset_;
    std::vector<std::size_t> meet_, join_;
};

/// All down-sets of P, ascending by size then lexicographically.
inline std::vector<Bitset> downsets(const Poset & p, std::size_t budget = 1'000'000)
{
    const std::size_t n = p.size();
    std::vector<Bitset> out;
    const auto & order = p.linear_extension();
    Bitset current(n);
    // Elements are decided along a linear extension, so all lower covers of
    // an element are settled before it is considered.
    auto rec = [&](auto & self, std::size_t i) -> void {
        if (i == order.size()) {
            if (out.size() >= budget)
                throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " down-sets");
            out.push_back(current);
            return;
        }
        auto x = order[i];
        self(self, i + 1);
        for (auto c : p.lower_covers(x))
            if (! current.test(c))
                return;
        current.set(x);
        self(self, i + 1);
        current.reset(x);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Bitset & a, const Bitset & b) {
        auto ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : lex_less(a, b);
    });
    return out;
}

/// Lattice of a family of sets closed under union and intersection, ordered by
/// inclusion (or reverse inclusion).
inline Lattice set_lattice(const Poset & base, const std::vector<Bitset> & sets, bool reverse = false)
{
    const std::size_t m = sets.size();
    std::unordered_map<Bitset, std::size_t, BitsetHash> index;
    for (std::size_t i = 0; i < m; ++i)
        index.emplace(sets[i], i);
    std::vector<std::string> names;
    for (auto & s : sets)
        names.push_back(base.set_label(s));
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < m; ++i) {
        auto sz = sets[i].count();
        // covers in a distributive set lattice differ by one element
        for (std::size_t x = 0; x < base.size(); ++x) {
            if (sets[i].test(x))
                continue;
            Bitset t = sets[i];
            t.set(x);
            auto it = index.find(t);
            if (it != index.end() && it->second != i && t.count() == sz + 1) {
                if (reverse)
                    covers.push_back({it->second, i});
                else
                    covers.push_back({i, it->second});
            }
        }
    }
    Poset p = Poset::from_covers(std::move(names), std::move(covers), CoverMode::Reduce);
    std::vector<std::size_t> meet(m * m), join(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            auto i = index.find(sets[a] & sets[b]);
            auto u = index.find(sets[a] | sets[b]);
            if (i == index.end() || u == index.end())
                throw Error(ErrorKind::NotALattice, "set family not closed under union and intersection");
            meet[a * m + b] = reverse ? u->second : i->second;
            join[a * m + b] = reverse ? i->second : u->second;
        }
    return Lattice::from_tables(std::move(p), std::move(meet), std::move(join));
}

/// Down(P): down-sets ordered by inclusion. Down(∅) is the one-element lattice.
inline Lattice downset_lattice(const Poset & p, std::size_t budget = 1'000'000)
{
    return set_lattice(p, downsets(p, budget));
}

enum class UpsetOrder {
    ReverseInclusion, ///< ⟨Up⁺(P); ⊇⟩
    Inclusion,        ///< ⟨Up⁺(P); ⊆⟩
};

/// Non-empty up-sets of P. The family is a lattice exactly when it is closed
/// under intersection, e.g. when P has a top; otherwise NotALattice.
inline Lattice nonempty_upsets(const Poset & p, UpsetOrder order = UpsetOrder::ReverseInclusion)
{
    if (p.empty())
        throw Error(ErrorKind::EmptyPoset, "Up+ of the empty poset");
    const std::size_t n = p.size();
    std::vector<Bitset> ups;
    for (auto & d : downsets(p)) {
        Bitset u = Bitset::full(n);
        d.for_each([&](std::size_t x) { u.reset(x); });
        if (u.any())
            ups.push_back(u);
    }
    std::sort(ups.begin(), ups.end(), [](const Bitset & a, const Bitset & b) {
        auto ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : lex_less(a, b);
    });
    std::vector<std::string> names;
    for (auto & u : ups)
        names.push_back(p.set_label(u));
    bool reverse = order == UpsetOrder::ReverseInclusion;
    Poset q = Poset::from_relation(std::move(names), [&](std::size_t a, std::size_t b) {
        return reverse ? ups[b].is_subset_of(ups[a]) : ups[a].is_subset_of(ups[b]);
    });
    return Lattice::from_poset(std::move(q));
}

/// Sub-poset of join-irreducible elements (exactly one lower cover).
inline Poset join_irreducibles(const Lattice & l)
{
    std::vector<std::size_t> ji;
    for (std::size_t x = 0; x < l.size(); ++x)
        if (l.poset().lower_covers(x).size() == 1)
            ji.push_back(x);
    return l.poset().induced(ji);
}

inline bool is_distributive(const Lattice & l)
{
    const std::size_t n = l.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
                    return false;
    return true;
}

/// P^⊤: a new element covering exactly the maximal elements.
inline Poset add_top(const Poset & p, const std::string & label = "T")
{
    auto names = p.names();
    names.push_back(label);
    auto covers = p.covers();
    for (auto m : p.maximal())
        covers.push_back({m, p.size()});
    return Poset::from_covers(std::move(names), std::move(covers));
}

/// P^♯: below each minimal element m a new element m' with m its only upper cover.
inline Poset sharp(const Poset & ptop)
{
    if (! ptop.top())
        throw Error(ErrorKind::NoTop, "sharp() needs a poset with a top");
    auto names = ptop.names();
    auto covers = ptop.covers();
    for (auto m : ptop.minimal()) {
        covers.push_back({names.size(), m});
        names.push_back(ptop.name(m) + "'");
    }
    return Poset::from_covers(std::move(names), std::move(covers));
}

struct Condensation {
    Poset poset;
    std::vector<std::size_t> block_of;
};

/// Collapses the strongly connected classes of a quasi-order on k items;
/// classes are numbered by their first member.
inline Condensation condense(std::size_t k, const std::function<bool(std::size_t, std::size_t)> & leq)
{
    std::vector<Bitset> rel(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (leq(i, j))
                rel[i].set(j);
    for (std::size_t i = 0; i < k; ++i) {
        if (! rel[i].test(i))
            throw Error(ErrorKind::NotQuasiOrder, "not reflexive at item " + std::to_string(i));
        for (std::size_t j = rel[i].find_first(); j < k; j = rel[i].find_next(j + 1))
            if (! rel[j].is_subset_of(rel[i]))
                throw Error(ErrorKind::NotQuasiOrder, "not transitive at items " + std::to_string(i) + ", " + std::to_string(j));
    }
    std::vector<std::size_t> block(k, k), rep;
    for (std::size_t i = 0; i < k; ++i) {
        if (block[i] != k)
            continue;
        block[i] = rep.size();
        for (std::size_t j = i + 1; j < k; ++j)
            if (rel[i].test(j) && rel[j].test(i))
                block[j] = rep.size();
        rep.push_back(i);
    }
    Poset p = Poset::from_relation(Poset::numbered(rep.size()),
        [&](std::size_t a, std::size_t b) { return rel[rep[a]].test(rep[b]); });
    return {std::move(p), std::move(block)};
}

/// Divisors of n under divisibility; meet = gcd, join = lcm.
inline Lattice divisor_lattice(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "divisor_lattice needs n >= 1");
    std::vector<std::size_t> divs;
    for (std::size_t d = 1; d <= n; ++d)
        if (n % d == 0)
            divs.push_back(d);
    const std::size_t m = divs.size();
    auto idx = [&](std::size_t d) { return static_cast<std::size_t>(std::lower_bound(divs.begin(), divs.end(), d) - divs.begin()); };
    std::vector<std::string> names;
    std::vector<Cover> covers;
    for (auto d : divs)
        names.push_back(std::to_string(d));
    auto is_prime = [](std::size_t q) {
        if (q < 2)
            return false;
        for (std::size_t r = 2; r * r <= q; ++r)
            if (q % r == 0)
                return false;
        return true;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (divs[j] % divs[i] == 0 && is_prime(divs[j] / divs[i]))
                covers.push_back({i, j});
    std::vector<std::size_t> meet(m * m), join(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto g = std::gcd(divs[i], divs[j]);
            meet[i * m + j] = idx(g);
            join[i * m + j] = idx(divs[i] / g * divs[j]);
        }
    return Lattice::from_tables(Poset::from_covers(std::move(names), std::move(covers)), std::move(meet), std::move(join));
}

/// Order-isomorphism P1 → P2 as an index map, or nothing.
inline std::optional<std::vector<std::size_t>> poset_iso(const Poset & a, const Poset & b)
{
    const std::size_t n = a.size();
    if (b.size() != n || a.covers().size() != b.covers().size())
        return std::nullopt;
    using Profile = std::array<std::size_t, 6>;
    auto profile = [](const Poset & p, std::size_t x) {
        return Profile{p.lower_covers(x).size(), p.upper_covers(x).size(), p.down(x).count(), p.up(x).count(), p.height(x), p.depth(x)};
    };
    std::vector<Profile> pa(n), pb(n);
    for (std::size_t x = 0; x < n; ++x) {
        pa[x] = profile(a, x);
        pb[x] = profile(b, x);
    }
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }
    const auto & order = a.linear_extension();
    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    auto rec = [&](auto & self, std::size_t i) -> bool {
        if (i == n)
            return true;
        auto x = order[i];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || pa[x] != pb[y])
                continue;
            bool ok = true;
            // lower covers precede x in the linear extension
            for (auto c : a.lower_covers(x))
                if (! b.covered_by(map[c], y)) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            map[x] = y;
            used[y] = true;
            if (self(self, i + 1))
                return true;
            used[y] = false;
            map[x] = n;
        }
        return false;
    };
    if (! rec(rec, 0))
        return std::nullopt;
    return map;
}

inline std::optional<std::vector<std::size_t>> lattice_iso(const Lattice & a, const Lattice & b)
{
    return poset_iso(a.poset(), b.poset());
}

namespace lattices {

inline Lattice chain(std::size_t n) { return Lattice::from_poset(Poset::chain(n)); }

/// 2^k as the lattice of subsets of a k-set.
inline Lattice boolean(std::size_t k) { return downset_lattice(Poset::antichain(k)); }

inline Lattice m3()
{
    return Lattice::from_poset(Poset::from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

inline Lattice n5()
{
    return Lattice::from_poset(Poset::from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
}

} // namespace lattices

} // namespace homlat
