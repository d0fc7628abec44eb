#pragma once

#include <homlat/algebra.hpp>
#include <homlat/error.hpp>
#include <homlat/forest.hpp>
#include <homlat/hom.hpp>
#include <homlat/poset.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homlat {

/// Everything built on the way from P to the quasi-primal algebra Q.
///
/// Index layout of P^♯: 0..n-1 are the elements of P, n is ⊤, and n+1.. are
/// the primed copies m' of Min(P) in ascending order of m. P^⊤ uses the
/// same indices for its n+1 elements, so a word of S is literally a word of
/// S^♯.
struct QPBundle {
    Poset p, ptop, psharp;
    CoveringForest s, ssharp;
    /// Q element i is the word ssharp.word(word_of[i]); ⊤ is last.
    std::vector<std::size_t> word_of;
    /// Inverse of word_of.
    std::vector<std::size_t> element_of;
    /// λ on Q indices (λ(⊤) = ⊤ for convenience).
    std::vector<std::size_t> lambda;
    FiniteAlgebra q;
    std::size_t top_index = 0;

    const Word & word(std::size_t element) const { return ssharp.word(word_of[element]); }
    std::string label(std::size_t element) const { return word(element).label(psharp); }

    /// Q element of a word of S (a covering chain of P^⊤).
    std::size_t element_of_s(std::size_t s_index) const
    {
        return element_of[*ssharp.index_of(s.word(s_index))];
    }

    /// ↓u in S^♯ as a set of Q elements.
    Bitset down_set(std::size_t element) const
    {
        Bitset b(q.size());
        for (auto w : ssharp.down(word_of[element]))
            b.set(element_of[w]);
        return b;
    }
};

inline QPBundle synthesize_quasiprimal(const Poset & p, std::size_t budget = 100'000)
{
    if (p.empty())
        throw Error(ErrorKind::EmptyPoset, "synthesis needs a nonempty poset");
    QPBundle out;
    const std::size_t n = p.size();
    out.p = p;
    out.ptop = add_top(p);
    out.psharp = sharp(out.ptop);
    out.s = covering_forest(out.ptop, budget);
    out.ssharp = covering_forest(out.psharp, budget);
    const auto & ss = out.ssharp;
    const std::size_t top = n;
    const std::size_t size = ss.size();

    // forest order is lexicographic already; only ⊤ moves to the end
    const std::size_t top_word = *ss.index_of(Word{{top}});
    for (std::size_t w = 0; w < size; ++w)
        if (w != top_word)
            out.word_of.push_back(w);
    out.word_of.push_back(top_word);
    out.element_of.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i)
        out.element_of[out.word_of[i]] = i;
    out.top_index = size - 1;

    out.lambda.resize(size);
    for (std::size_t i = 0; i + 1 < size; ++i)
        out.lambda[i] = (i + 1) % (size - 1);
    out.lambda[out.top_index] = out.top_index;

    auto phi = [&](std::size_t x) { return ss.phi(out.word_of[x]); };
    auto elem = [&](const Word & w) { return out.element_of[*ss.index_of(w)]; };

    std::vector<OpSymbol> ops;
    std::vector<std::vector<std::size_t>> tables;

    ops.push_back({"join", 2});
    tables.push_back(tabulate(size, 2, [&](std::span<const std::size_t> v) {
        const auto & a = out.word(v[0]).letters;
        const auto & b = out.word(v[1]).letters;
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[b.size() - 1 - k])
            ++k;
        return elem(Word{{a.end() - static_cast<std::ptrdiff_t>(k), a.end()}});
    }));

    std::vector<Cover> fcovers;
    for (auto [a, b] : out.psharp.covers())
        if (b != top)
            fcovers.push_back({a, b});
    std::sort(fcovers.begin(), fcovers.end(), [](const Cover & x, const Cover & y) {
        return std::pair(x.second, x.first) < std::pair(y.second, y.first);
    });
    for (auto [a, b] : fcovers) {
        ops.push_back({"f_" + std::to_string(b) + "_" + std::to_string(a), 1});
        tables.push_back(tabulate(size, 1, [&, a = a, b = b](std::span<const std::size_t> v) {
            return phi(v[0]) == b ? out.element_of[ss.psi(out.word_of[v[0]], a)] : v[0];
        }));
    }

    auto mins = p.minimal();
    for (std::size_t k = 0; k < mins.size(); ++k) {
        const std::size_t prime = n + 1 + k;
        ops.push_back({"g_" + std::to_string(mins[k]), 1});
        tables.push_back(tabulate(size, 1, [&](std::span<const std::size_t> v) {
            return phi(v[0]) == prime ? elem(out.word(v[0]).tail()) : v[0];
        }));
    }

    ops.push_back({"h", 2});
    tables.push_back(tabulate(size, 2, [&](std::span<const std::size_t> v) {
        return v[0] != out.top_index && v[1] == out.top_index ? out.lambda[v[0]] : v[0];
    }));

    ops.push_back({"tau", 3});
    tables.push_back(discriminator_table(size));

    out.q = FiniteAlgebra(size, Signature(std::move(ops)), std::move(tables), "Q");
    return out;
}

/// Least upper bound of x and y, if it exists.
inline std::optional<std::size_t> poset_join(const Poset & p, std::size_t x, std::size_t y)
{
    Bitset ub = p.up(x) & p.up(y);
    for (std::size_t z = ub.find_first(); z < p.size(); z = ub.find_next(z + 1))
        if (ub.is_subset_of(p.up(z)))
            return z;
    return std::nullopt;
}

/// ⟨S; ∨, {f_ts : s ≺ t}⟩ with f_ts(t) = s and identity elsewhere.
/// Op names carry element indices.
inline FiniteAlgebra birkhoff_frink(const Poset & s)
{
    const std::size_t n = s.size();
    if (n == 0)
        throw Error(ErrorKind::EmptyPoset, "birkhoff_frink needs a nonempty semilattice");
    std::vector<std::size_t> join(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto j = poset_join(s, x, y);
            if (! j)
                throw Error(ErrorKind::NotJoinClosed, s.name(x) + " and " + s.name(y) + " have no join");
            join[x * n + y] = *j;
        }
    std::vector<OpSymbol> ops{{"join", 2}};
    std::vector<std::vector<std::size_t>> tables{std::move(join)};
    auto covers = s.covers();
    std::sort(covers.begin(), covers.end(), [](const Cover & x, const Cover & y) {
        return std::pair(x.second, x.first) < std::pair(y.second, y.first);
    });
    for (auto [lo, hi] : covers) {
        ops.push_back({"f_" + std::to_string(hi) + "_" + std::to_string(lo), 1});
        std::vector<std::size_t> t(n);
        std::iota(t.begin(), t.end(), 0);
        t[hi] = lo;
        tables.push_back(std::move(t));
    }
    return FiniteAlgebra(n, Signature(std::move(ops)), std::move(tables), "BF");
}

/// Directed graph on vertices 0..n-1; loops allowed.
struct Digraph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    Digraph() = default;
    Digraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> e) : vertices(n), edges(std::move(e))
    {
        for (auto [x, y] : edges)
            if (x >= n || y >= n)
                throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    bool has_edge(std::size_t x, std::size_t y) const { return std::binary_search(edges.begin(), edges.end(), std::pair(x, y)); }
};

/// Digraph homomorphisms by plain enumeration of all vertex maps.
inline std::uint64_t count_digraph_homs(const Digraph & g, const Digraph & h)
{
    std::vector<std::size_t> map(g.vertices, 0);
    std::uint64_t count = 0;
    if (h.vertices == 0)
        return g.vertices == 0 ? 1 : 0;
    while (true) {
        bool ok = true;
        for (auto [x, y] : g.edges)
            if (! h.has_edge(map[x], map[y])) {
                ok = false;
                break;
            }
        count += ok;
        std::size_t i = 0;
        while (i < g.vertices && ++map[i] == h.vertices)
            map[i++] = 0;
        if (i == g.vertices)
            return count;
    }
}

/// G* on vertices, then edges (sorted), then u, v; signature f0, f1, u, v.
inline FiniteAlgebra graph_star(const Digraph & g)
{
    const std::size_t nv = g.vertices, ne = g.edges.size();
    const std::size_t u = nv + ne, v = u + 1, size = v + 1;
    std::vector<std::size_t> f0(size), f1(size);
    for (std::size_t x = 0; x < nv; ++x) {
        f0[x] = u;
        f1[x] = v;
    }
    for (std::size_t e = 0; e < ne; ++e) {
        f0[nv + e] = g.edges[e].first;
        f1[nv + e] = g.edges[e].second;
    }
    f0[u] = v;
    f0[v] = v;
    f1[u] = u;
    f1[v] = u;
    return FiniteAlgebra(size, Signature({{"f0", 1}, {"f1", 1}, {"u", 0}, {"v", 0}}), {std::move(f0), std::move(f1), {u}, {v}}, "G*");
}

/// Validates a group table on 0..n-1 and returns the identity.
inline std::size_t check_group(std::size_t n, const std::vector<std::size_t> & mul)
{
    if (n == 0 || mul.size() != n * n)
        throw Error(ErrorKind::NotAGroup, "table is not n*n");
    for (auto x : mul)
        if (x >= n)
            throw Error(ErrorKind::NotAGroup, "entry out of range");
    auto m = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (m(m(a, b), c) != m(a, m(b, c)))
                    throw Error(ErrorKind::NotAGroup, "not associative");
    std::optional<std::size_t> e;
    for (std::size_t x = 0; x < n && ! e; ++x) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = m(x, a) == a && m(a, x) == a;
        if (ok)
            e = x;
    }
    if (! e)
        throw Error(ErrorKind::NotAGroup, "no identity");
    for (std::size_t a = 0; a < n; ++a) {
        bool inv = false;
        for (std::size_t b = 0; b < n && ! inv; ++b)
            inv = m(a, b) == *e && m(b, a) == *e;
        if (! inv)
            throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
    }
    return *e;
}

/// The G-set of left cosets of H plus a fixed point ∞, one unary λ_g per
/// group element (named "l<g>"), with every element named (A⁺).
/// Cosets are numbered by their least representative; ∞ is last.
inline FiniteAlgebra gset_coset_algebra(std::size_t n, const std::vector<std::size_t> & mul, const std::vector<std::size_t> & h)
{
    const std::size_t e = check_group(n, mul);
    Bitset hs(n);
    for (auto x : h) {
        if (x >= n)
            throw Error(ErrorKind::NotASubgroup, "subgroup element out of range");
        hs.set(x);
    }
    if (! hs.test(e))
        throw Error(ErrorKind::NotASubgroup, "subgroup misses the identity");
    hs.for_each([&](std::size_t a) {
        hs.for_each([&](std::size_t b) {
            if (! hs.test(mul[a * n + b]))
                throw Error(ErrorKind::NotASubgroup, "subgroup is not closed");
        });
    });
    std::vector<std::size_t> coset_of(n, n);
    std::size_t cosets = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (coset_of[a] != n)
            continue;
        hs.for_each([&](std::size_t x) { coset_of[mul[a * n + x]] = cosets; });
        ++cosets;
    }
    std::vector<std::size_t> rep(cosets);
    for (std::size_t a = n; a-- > 0;)
        rep[coset_of[a]] = a;
    const std::size_t inf = cosets, size = cosets + 1;
    std::vector<OpSymbol> ops;
    std::vector<std::vector<std::size_t>> tables;
    for (std::size_t g = 0; g < n; ++g) {
        ops.push_back({"l" + std::to_string(g), 1});
        std::vector<std::size_t> t(size);
        for (std::size_t c = 0; c < cosets; ++c)
            t[c] = coset_of[mul[g * n + rep[c]]];
        t[inf] = inf;
        tables.push_back(std::move(t));
    }
    return name_all_elements(FiniteAlgebra(size, Signature(std::move(ops)), std::move(tables), "G/H+inf"));
}

/// B₁ × B₂ over the merged signature F₁ ∪ F₂ ∪ {*}: on B₁ the F₂ symbols
/// and * are first projections; on B₂ the F₁ symbols are first projections
/// and * is the second projection.
inline FiniteAlgebra independent_product(const FiniteAlgebra & a1, const FiniteAlgebra & a2)
{
    if (a1.has_nullaries() || a2.has_nullaries())
        throw Error(ErrorKind::NullaryPresent, "independent product needs algebras without nullary operations");
    for (auto & op : a1.signature())
        if (op.name == "*" || a2.signature().find(op.name))
            throw Error(ErrorKind::NameClash, "operation '" + op.name + "' clashes");
    if (a2.signature().find("*"))
        throw Error(ErrorKind::NameClash, "operation '*' is reserved");

    auto proj = [](std::size_t size, std::size_t arity, std::size_t which) {
        return tabulate(size, arity, [which](std::span<const std::size_t> v) { return v[which]; });
    };
    std::vector<OpSymbol> ops;
    std::vector<std::vector<std::size_t>> t1, t2;
    for (std::size_t i = 0; i < a1.num_ops(); ++i) {
        ops.push_back(a1.signature()[i]);
        t1.push_back(a1.table(i));
        t2.push_back(proj(a2.size(), a1.arity(i), 0));
    }
    for (std::size_t i = 0; i < a2.num_ops(); ++i) {
        ops.push_back(a2.signature()[i]);
        t1.push_back(proj(a1.size(), a2.arity(i), 0));
        t2.push_back(a2.table(i));
    }
    ops.push_back({"*", 2});
    t1.push_back(proj(a1.size(), 2, 0));
    t2.push_back(proj(a2.size(), 2, 1));
    Signature sig(std::move(ops));
    return direct_product(FiniteAlgebra(a1.size(), sig, std::move(t1), "B1"), FiniteAlgebra(a2.size(), sig, std::move(t2), "B2"));
}

/// Sizes of the cycles (periodic orbits) of a unary map, ascending.
inline std::vector<std::size_t> cycle_sizes(const std::vector<std::size_t> & f)
{
    const std::size_t n = f.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n; ++x) {
        // f^n(x) lies on a cycle
        std::size_t y = x;
        for (std::size_t i = 0; i < n; ++i)
            y = f[y];
        if (seen[y])
            continue;
        std::size_t len = 0, z = y;
        do {
            seen[z] = true;
            z = f[z];
            ++len;
        } while (z != y);
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Disjoint union of cycles of the given lengths, as ⟨A; f⟩.
inline FiniteAlgebra cycle_union(const std::vector<std::size_t> & lengths)
{
    std::vector<std::size_t> f;
    for (auto len : lengths) {
        if (len == 0)
            throw Error(ErrorKind::InvalidArgument, "cycle length 0");
        const std::size_t base = f.size();
        for (std::size_t i = 0; i < len; ++i)
            f.push_back(base + (i + 1) % len);
    }
    if (f.empty())
        throw Error(ErrorKind::InvalidArgument, "no cycles");
    const std::size_t size = f.size();
    return FiniteAlgebra(size, Signature({{"f", 1}}), {std::move(f)}, "cycles");
}

/// L_A for ⟨A; f⟩: 1 when the cycle lcm n is 1, else Up⁺(D_n) under ⊆.
inline Lattice monounary_hom_lattice(const FiniteAlgebra & a)
{
    if (a.num_ops() != 1 || a.arity(0) != 1)
        throw Error(ErrorKind::NotMonounary, "expected exactly one unary operation");
    std::size_t n = 1;
    for (auto c : cycle_sizes(a.table(0)))
        n = std::lcm(n, c);
    if (n == 1)
        return lattices::chain(1);
    return nonempty_upsets(divisor_lattice(n).poset(), UpsetOrder::Inclusion);
}

/// Meet table of a finite lattice order given by covers.
inline std::vector<std::size_t> meet_table(const Poset & p)
{
    auto l = Lattice::from_poset(p);
    std::vector<std::size_t> t(p.size() * p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            t[x * p.size() + y] = l.meet(x, y);
    return t;
}

/// The bisemilattice S × L on {0, a, b, 1} ↦ {0, 1, 2, 3}: ∧ ("wedge") has
/// 0 at the bottom and 1 at the top, ⊓ ("sqcap") has b at the bottom and a
/// at the top; all four elements are named.
inline FiniteAlgebra pentagon_algebra()
{
    const std::vector<std::string> names{"0", "a", "b", "1"};
    auto wedge = meet_table(Poset::from_covers(names, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    auto sqcap = meet_table(Poset::from_covers(names, {{2, 0}, {2, 3}, {0, 1}, {3, 1}}));
    return FiniteAlgebra(4, Signature({{"wedge", 2}, {"sqcap", 2}, {"0", 0}, {"a", 0}, {"b", 0}, {"1", 0}}),
        {std::move(wedge), std::move(sqcap), {0}, {1}, {2}, {3}}, "pentagon");
}

/// The three subdirectly irreducible algebras of the pentagon variety, built
/// from their pictures: S = {0b < a1} (both ops agree), L = {0a, b1} (ops
/// dual), D = {0b, a, 1} (∧: 0b < a < 1, ⊓: 0b < 1 < a).
inline std::vector<FiniteAlgebra> pentagon_sis()
{
    const Signature sig({{"wedge", 2}, {"sqcap", 2}, {"0", 0}, {"a", 0}, {"b", 0}, {"1", 0}});
    auto chain_meet = [](const std::vector<std::size_t> & rank) {
        const std::size_t n = rank.size();
        return tabulate(n, 2, [&](std::span<const std::size_t> v) { return rank[v[0]] <= rank[v[1]] ? v[0] : v[1]; });
    };
    std::vector<FiniteAlgebra> out;
    // S: 0 = {0,b}, 1 = {a,1}
    out.emplace_back(2, sig, std::vector<std::vector<std::size_t>>{chain_meet({0, 1}), chain_meet({0, 1}), {0}, {1}, {0}, {1}}, "S");
    // L: 0 = {0,a}, 1 = {b,1}
    out.emplace_back(2, sig, std::vector<std::vector<std::size_t>>{chain_meet({0, 1}), chain_meet({1, 0}), {0}, {0}, {1}, {1}}, "L");
    // D: 0 = {0,b}, 1 = a, 2 = 1
    out.emplace_back(3, sig, std::vector<std::vector<std::size_t>>{chain_meet({0, 1, 2}), chain_meet({0, 2, 1}), {0}, {1}, {0}, {2}}, "D");
    return out;
}

/// The Hasse diagram of Fig 2's six-element poset with labels 1..6:
/// 3 ≺ 1, 3 ≺ 2, 4 ≺ 2, 5 ≺ 3, 6 ≺ 3, 6 ≺ 4.
inline Poset figure2_poset()
{
    return Poset::from_covers({"1", "2", "3", "4", "5", "6"}, {{2, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {5, 3}});
}

namespace groups {

/// Z_n under addition.
inline std::vector<std::size_t> cyclic(std::size_t n)
{
    return tabulate(n, 2, [n](std::span<const std::size_t> v) { return (v[0] + v[1]) % n; });
}

/// Permutations of {0..k-1} in lexicographic order; product is composition
/// (p·q)(i) = p(q(i)).
inline std::vector<std::vector<std::size_t>> permutations(std::size_t k)
{
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<std::size_t> symmetric(std::size_t k)
{
    auto perms = permutations(k);
    const std::size_t n = perms.size();
    std::vector<std::size_t> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> c(k);
            for (std::size_t i = 0; i < k; ++i)
                c[i] = perms[a][perms[b][i]];
            mul[a * n + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return mul;
}

/// ⟨Z₂²; +, 0⟩ with elements encoded as two-bit integers.
inline FiniteAlgebra klein4()
{
    return FiniteAlgebra(4, Signature({{"add", 2}, {"zero", 0}}),
        {tabulate(4, 2, [](std::span<const std::size_t> v) { return v[0] ^ v[1]; }), {0}}, "klein4");
}

} // namespace groups

/// Fig 4's unary algebra U on {0, 1, 2, u, v} ↦ {0..4}.
inline FiniteAlgebra figure4_u()
{
    return FiniteAlgebra(5, Signature({{"f0", 1}, {"f1", 1}}), {{3, 3, 0, 4, 4}, {4, 4, 1, 3, 3}}, "U");
}

/// Fig 4's digraph G on a, b, c: loop at a, a → b, b ↔ c.
inline Digraph figure4_graph()
{
    return Digraph(3, {{0, 0}, {0, 1}, {1, 2}, {2, 1}});
}

} // namespace homlat
