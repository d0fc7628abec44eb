#include "oracles.hpp"
#include "test_util.hpp"

#include <homlat/fixtures.hpp>
#include <homlat/hom.hpp>
#include <homlat/homlat.hpp>
#include <homlat/synth.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

using namespace homlat;

namespace {

/// Census posets whose synthesized Q has at most 30 elements, plus Fig 2.
const std::vector<QPBundle> & small_bundles()
{
    static const std::vector<QPBundle> out = [] {
        std::vector<QPBundle> v;
        for (auto & p : poset_census(5)) {
            auto b = synthesize_quasiprimal(p);
            if (b.q.size() <= 30)
                v.push_back(std::move(b));
        }
        v.push_back(synthesize_quasiprimal(figure2_poset()));
        return v;
    }();
    return out;
}

std::set<std::vector<std::size_t>> as_set(const std::vector<Bitset> & v)
{
    std::set<std::vector<std::size_t>> out;
    for (auto & b : v)
        out.insert(b.elements());
    return out;
}

Digraph random_digraph(std::mt19937 & rng, std::size_t n)
{
    std::bernoulli_distribution coin(0.4);
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (coin(rng))
                e.push_back({a, b});
    return Digraph(n, e);
}

FiniteAlgebra tau2(const std::string & name)
{
    return FiniteAlgebra(2, Signature({{name, 3}}), {discriminator_table(2)});
}

} // namespace

TEST(Synth, Examples)
{
    auto one = synthesize_quasiprimal(Poset::chain(1));
    EXPECT_EQ(one.q.size(), 3U);
    EXPECT_TRUE(poset_iso(one.psharp, Poset::chain(3)));
    EXPECT_TRUE(poset_iso(one.ssharp.order(), Poset::chain(3)));

    auto fig2 = synthesize_quasiprimal(figure2_poset());
    EXPECT_EQ(fig2.q.size(), 16U);
    EXPECT_EQ(fig2.s.size(), 11U);
    EXPECT_EQ(fig2.label(fig2.top_index), "T");

    EXPECT_KIND(synthesize_quasiprimal(Poset()), ErrorKind::EmptyPoset);
    EXPECT_KIND(synthesize_quasiprimal(figure2_poset(), 5), ErrorKind::BudgetExceeded);
}

TEST(Synth, SizeIsForestSize)
{
    for (auto & b : small_bundles()) {
        EXPECT_EQ(b.q.size(), covering_forest(sharp(add_top(b.p))).size());
        // λ is a single cycle on the non-⊤ elements
        std::size_t x = 0, steps = 0;
        do {
            x = b.lambda[x];
            ++steps;
        } while (x != 0 && steps <= b.q.size());
        EXPECT_EQ(steps, b.q.size() - 1);
    }
}

TEST(Synth, JoinIsLongestCommonSuffix)
{
    for (auto & b : small_bundles()) {
        auto j = *b.q.signature().find("join");
        const auto & o = b.ssharp.order();
        for (std::size_t x = 0; x < b.q.size(); ++x)
            for (std::size_t y = 0; y < b.q.size(); ++y) {
                auto z = b.q.apply(j, {x, y});
                auto wx = b.word_of[x], wy = b.word_of[y], wz = b.word_of[z];
                EXPECT_TRUE(o.leq(wx, wz) && o.leq(wy, wz));
                for (std::size_t w = 0; w < o.size(); ++w)
                    if (o.leq(wx, w) && o.leq(wy, w)) {
                        EXPECT_TRUE(o.leq(wz, w));
                    }
            }
    }
}

TEST(Synth, Note1)
{
    // f_{φ(t) φ(s)}(t) = s for each cover s ≺ t of S^♯ with t ≠ ⊤
    for (auto & b : small_bundles()) {
        const auto & f = b.ssharp;
        for (auto [s, t] : f.order().covers()) {
            if (b.element_of[t] == b.top_index)
                continue;
            auto name = "f_" + std::to_string(f.phi(t)) + "_" + std::to_string(f.phi(s));
            auto op = b.q.signature().find(name);
            ASSERT_TRUE(op) << name;
            EXPECT_EQ(b.q.apply(*op, {b.element_of[t]}), b.element_of[s]);
        }
    }
}

TEST(Synth, Lemma11SubuniverseClassification)
{
    for (auto & b : small_bundles()) {
        std::set<std::vector<std::size_t>> want{{b.top_index}};
        for (std::size_t u = 0; u < b.s.size(); ++u)
            want.insert(b.down_set(b.element_of_s(u)).elements());
        EXPECT_EQ(as_set(all_subuniverses(b.q)), want) << "|P| = " << b.p.size();
    }
}

TEST(Synth, Lemma11AgainstSubsetOracle)
{
    // independent of the library's closure code, for the smaller instances
    for (auto & b : small_bundles()) {
        if (b.q.size() > 12)
            continue;
        std::set<std::vector<std::size_t>> want{{b.top_index}};
        for (std::size_t u = 0; u < b.s.size(); ++u)
            want.insert(b.down_set(b.element_of_s(u)).elements());
        EXPECT_EQ(oracle::subuniverses(b.q), want);
    }
}

TEST(Synth, Lemma14IsomorphismIffSamePhi)
{
    for (auto & b : small_bundles()) {
        std::vector<FiniteAlgebra> qs;
        for (std::size_t u = 0; u < b.s.size(); ++u)
            qs.push_back(subalgebra(b.q, b.down_set(b.element_of_s(u))).algebra);
        for (std::size_t u = 0; u < b.s.size(); ++u)
            for (std::size_t v = 0; v < b.s.size(); ++v)
                EXPECT_EQ(find_isomorphism(qs[u], qs[v]).has_value(), b.s.phi(u) == b.s.phi(v));
    }
}

TEST(Synth, Lemma17KernelLaw)
{
    for (auto & b : small_bundles()) {
        std::vector<FiniteAlgebra> algs;
        for (std::size_t u = 0; u < b.s.size(); ++u)
            algs.push_back(subalgebra(b.q, b.down_set(b.element_of_s(u))).algebra);
        algs.push_back(subalgebra(b.q, Bitset::singleton(b.q.size(), b.top_index)).algebra);
        const std::size_t k = algs.size();
        std::vector<Bitset> rel(k, Bitset(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (hom_exists(algs[i], algs[j]))
                    rel[i].set(j);
        auto c = condense(k, [&](std::size_t i, std::size_t j) { return rel[i].test(j); });
        for (std::size_t u = 0; u < b.s.size(); ++u)
            for (std::size_t v = 0; v < b.s.size(); ++v)
                EXPECT_EQ(c.block_of[u] == c.block_of[v], b.s.phi(u) == b.s.phi(v));
        EXPECT_TRUE(poset_iso(c.poset, b.ptop));
    }
}

TEST(BirkhoffFrink, Examples)
{
    auto one = birkhoff_frink(Poset::chain(1));
    EXPECT_EQ(all_subuniverses(one).size(), 1U);
    auto two = birkhoff_frink(Poset::chain(2));
    EXPECT_EQ(as_set(all_subuniverses(two)), (std::set<std::vector<std::size_t>>{{0}, {0, 1}}));
    auto sq = birkhoff_frink(lattices::boolean(2).poset());
    EXPECT_EQ(all_subuniverses(sq).size(), 4U);
    EXPECT_KIND(birkhoff_frink(Poset::antichain(2)), ErrorKind::NotJoinClosed);
    EXPECT_KIND(birkhoff_frink(Poset()), ErrorKind::EmptyPoset);
}

TEST(BirkhoffFrink, SubOrderedByInclusionIsS)
{
    std::size_t semilattices = 0;
    for (auto & s : poset_census(5)) {
        bool closed = true;
        for (std::size_t x = 0; x < s.size() && closed; ++x)
            for (std::size_t y = 0; y < s.size() && closed; ++y)
                closed = poset_join(s, x, y).has_value();
        if (! closed)
            continue;
        ++semilattices;
        auto subs = oracle::subuniverses(birkhoff_frink(s));
        std::vector<std::vector<std::size_t>> v(subs.begin(), subs.end());
        auto sub = Poset::from_relation(Poset::numbered(v.size()), [&](std::size_t i, std::size_t j) {
            return std::includes(v[j].begin(), v[j].end(), v[i].begin(), v[i].end());
        });
        EXPECT_TRUE(poset_iso(sub, s));
        EXPECT_TRUE(oracle::order_isomorphic(sub, s));
    }
    // join-semilattices on 1..5 elements: 1, 1, 2, 5, 15
    EXPECT_EQ(semilattices, 24U);
}

TEST(GraphStar, Examples)
{
    auto g = graph_star(figure4_graph());
    EXPECT_EQ(g.size(), 9U);
    auto e = graph_star(Digraph(1, {}));
    EXPECT_EQ(e.size(), 3U);
    EXPECT_EQ(g.signature(), Signature({{"f0", 1}, {"f1", 1}, {"u", 0}, {"v", 0}}));
    // edge a→b (index 4) projects to its ends; u, v swap under f0, f1 as in the picture
    EXPECT_EQ(g.apply(0, {4}), 0U);
    EXPECT_EQ(g.apply(1, {4}), 1U);
    EXPECT_EQ(g.apply(0, {0}), 7U);
    EXPECT_EQ(g.apply(1, {0}), 8U);
}

TEST(GraphStar, HomCountsPreserved)
{
    std::vector<Digraph> graphs;
    for (std::size_t n = 1; n <= 2; ++n) {
        const std::size_t slots = n * n;
        for (std::size_t m = 0; m < (std::size_t{1} << slots); ++m) {
            std::vector<std::pair<std::size_t, std::size_t>> e;
            for (std::size_t s = 0; s < slots; ++s)
                if (m >> s & 1)
                    e.push_back({s / n, s % n});
            graphs.emplace_back(n, e);
        }
    }
    ASSERT_EQ(graphs.size(), 18U);
    for (auto & a : graphs)
        for (auto & b : graphs)
            EXPECT_EQ(count_homs(graph_star(a), graph_star(b)), count_digraph_homs(a, b));

    std::mt19937 rng(2024);
    for (int i = 0; i < 50; ++i) {
        auto a = random_digraph(rng, 3), b = random_digraph(rng, 3);
        EXPECT_EQ(count_homs(graph_star(a), graph_star(b)), count_digraph_homs(a, b)) << "pair " << i;
    }
}

TEST(GraphStar, DigraphCountOracle)
{
    // loop graph receives every map; edgeless target receives none from a graph with edges
    Digraph loop(1, {{0, 0}}), none(2, {}), edge(2, {{0, 1}});
    EXPECT_EQ(count_digraph_homs(edge, loop), 1U);
    EXPECT_EQ(count_digraph_homs(edge, none), 0U);
    EXPECT_EQ(count_digraph_homs(none, edge), 4U);
    EXPECT_EQ(count_digraph_homs(edge, edge), 1U);
}

TEST(GSet, Examples)
{
    auto whole = gset_coset_algebra(3, groups::cyclic(3), {0, 1, 2});
    EXPECT_EQ(whole.size(), 2U);
    for (std::size_t g = 0; g < 3; ++g)
        EXPECT_EQ(whole.table(g), (std::vector<std::size_t>{0, 1}));

    auto s3 = gset_coset_algebra(6, groups::symmetric(3), {0, 2});
    EXPECT_EQ(s3.size(), 4U);
    auto want = oracle::congruences(s3);
    EXPECT_EQ(want.size(), 3U);
    EXPECT_TRUE(lattice_iso(congruence_lattice(s3).lattice, lattices::chain(3)));

    auto z4 = gset_coset_algebra(4, groups::cyclic(4), {0});
    EXPECT_EQ(oracle::congruences(z4).size(), 4U);
    EXPECT_TRUE(lattice_iso(congruence_lattice(z4).lattice, lattices::chain(4)));

    EXPECT_KIND(gset_coset_algebra(4, groups::cyclic(4), {1}), ErrorKind::NotASubgroup);
    EXPECT_KIND(gset_coset_algebra(4, groups::cyclic(4), {0, 1}), ErrorKind::NotASubgroup);
    std::vector<std::size_t> bad(4, 0);
    EXPECT_KIND(gset_coset_algebra(2, bad, {0}), ErrorKind::NotAGroup);
}

TEST(GSet, Groups)
{
    EXPECT_EQ(check_group(6, groups::symmetric(3)), 0U);
    EXPECT_EQ(groups::permutations(3).size(), 6U);
    // (0 1) in lexicographic order is index 2: [1, 0, 2]
    EXPECT_EQ(groups::permutations(3)[2], (std::vector<std::size_t>{1, 0, 2}));
    auto m = groups::symmetric(3);
    EXPECT_EQ(m[2 * 6 + 2], 0U);
}

TEST(IndependentProduct, Examples)
{
    auto p = independent_product(tau2("t1"), tau2("t2"));
    EXPECT_EQ(p.size(), 4U);
    EXPECT_EQ(p.num_ops(), 3U);
    EXPECT_EQ(p.signature()[2].name, "*");
    // * pairs first and second coordinates
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
            EXPECT_EQ(p.apply(2, {x, y}), (x / 2) * 2 + y % 2);
    EXPECT_KIND(independent_product(tau2("t"), tau2("t")), ErrorKind::NameClash);
    EXPECT_KIND(independent_product(tau2("*"), tau2("t")), ErrorKind::NameClash);
    EXPECT_KIND(independent_product(pentagon_algebra(), tau2("t")), ErrorKind::NullaryPresent);
}

TEST(Monounary, Examples)
{
    EXPECT_EQ(monounary_hom_lattice(cycle_union({1})).size(), 1U);
    auto six = monounary_hom_lattice(cycle_union({6}));
    EXPECT_EQ(six.size(), 5U);
    EXPECT_TRUE(lattice_iso(monounary_hom_lattice(cycle_union({2, 3})), six));
    EXPECT_EQ(cycle_sizes(cycle_union({3, 1, 2}).table(0)), (std::vector<std::size_t>{1, 2, 3}));
    // tails feeding into cycles do not count
    EXPECT_EQ(cycle_sizes({1, 2, 1}), (std::vector<std::size_t>{2}));
    EXPECT_KIND(monounary_hom_lattice(pentagon_algebra()), ErrorKind::NotMonounary);
    EXPECT_KIND(cycle_union({}), ErrorKind::InvalidArgument);
}

TEST(Monounary, HomOrderOnCycleUnions)
{
    // B₁ → B₂ iff each cycle length of B₁ is a multiple of one in B₂; the
    // classes, ordered by →, form Up⁺(D_n) under ⊆
    for (std::size_t n : {1, 2, 4, 6, 12}) {
        std::vector<std::size_t> divs;
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0)
                divs.push_back(d);
        std::vector<std::vector<std::size_t>> sets;
        for (std::size_t m = 1; m < (std::size_t{1} << divs.size()); ++m) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < divs.size(); ++i)
                if (m >> i & 1)
                    s.push_back(divs[i]);
            sets.push_back(s);
        }
        std::vector<FiniteAlgebra> algs;
        for (auto & s : sets)
            algs.push_back(cycle_union(s));
        const std::size_t k = algs.size();
        std::vector<Bitset> rel(k, Bitset(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const bool got = hom_exists(algs[i], algs[j]);
                bool want = true;
                for (auto c : sets[i])
                    want = want && std::any_of(sets[j].begin(), sets[j].end(), [c](std::size_t d) { return c % d == 0; });
                EXPECT_EQ(got, want) << "n = " << n;
                if (got)
                    rel[i].set(j);
            }
        auto c = condense(k, [&](std::size_t i, std::size_t j) { return rel[i].test(j); });
        auto want = n == 1 ? lattices::chain(1) : nonempty_upsets(divisor_lattice(n).poset(), UpsetOrder::Inclusion);
        EXPECT_TRUE(poset_iso(c.poset, want.poset())) << "n = " << n;
        // algebras whose cycle lcm is exactly n generate the whole family
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t l = 1;
            for (auto d : sets[i])
                l = std::lcm(l, d);
            if (l == n) {
                EXPECT_TRUE(poset_iso(monounary_hom_lattice(algs[i]).poset(), c.poset)) << "n = " << n;
            }
        }
    }
}

TEST(Pentagon, Reducts)
{
    auto a = pentagon_algebra();
    const auto & w = a.table(0);
    const auto & s = a.table(1);
    auto at = [](const std::vector<std::size_t> & t, std::size_t x, std::size_t y) { return t[x * 4 + y]; };
    // ∧: 0 bottom, 1 top, a and b incomparable
    EXPECT_EQ(at(w, 1, 2), 0U);
    EXPECT_EQ(at(w, 1, 3), 1U);
    // ⊓: b bottom, a top, 0 and 1 incomparable
    EXPECT_EQ(at(s, 0, 3), 2U);
    EXPECT_EQ(at(s, 1, 3), 3U);
    EXPECT_EQ(at(s, 2, 0), 2U);
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
            for (std::size_t z = 0; z < 4; ++z)
                for (auto * t : {&w, &s}) {
                    EXPECT_EQ(at(*t, x, x), x);
                    EXPECT_EQ(at(*t, x, y), at(*t, y, x));
                    EXPECT_EQ(at(*t, at(*t, x, y), z), at(*t, x, at(*t, y, z)));
                    // mutual distributivity
                    const auto & o = t == &w ? s : w;
                    EXPECT_EQ(at(*t, x, at(o, y, z)), at(o, at(*t, x, y), at(*t, x, z)));
                }
}

TEST(Pentagon, SisAreSubdirectlyIrreducible)
{
    auto sis = pentagon_sis();
    ASSERT_EQ(sis.size(), 3U);
    EXPECT_EQ(sis[0].size(), 2U);
    EXPECT_EQ(sis[1].size(), 2U);
    EXPECT_EQ(sis[2].size(), 3U);
    for (auto & s : sis)
        EXPECT_TRUE(is_subdirectly_irreducible(s));
}
