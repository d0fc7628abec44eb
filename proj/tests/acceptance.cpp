// One line per acceptance criterion; exit status 1 if any fails.

#include "oracles.hpp"

#include <homlat/fixtures.hpp>
#include <homlat/forest.hpp>
#include <homlat/hom.hpp>
#include <homlat/homlat.hpp>
#include <homlat/synth.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace homlat;

namespace {

using clock_type = std::chrono::steady_clock;

/// Collects failure messages for one criterion.
struct Ctx {
    std::vector<std::string> failures;

    void check(bool ok, const std::string & what)
    {
        if (! ok && failures.size() < 8)
            failures.push_back(what);
        else if (! ok)
            failures.push_back({});
    }
};

int failed = 0;

void criterion(int id, const std::string & title, double limit_s, const std::function<std::string(Ctx &)> & body)
{
    Ctx ctx;
    std::string detail;
    auto t0 = clock_type::now();
    try {
        detail = body(ctx);
    }
    catch (const std::exception & e) {
        ctx.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s)
        ctx.failures.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_s) + " s");
    const bool ok = ctx.failures.empty();
    failed += ! ok;
    std::printf("%s %2d %-44s %8.3f s  %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs, detail.c_str());
    for (auto & f : ctx.failures)
        if (! f.empty())
            std::printf("       - %s\n", f.c_str());
    std::fflush(stdout);
}

std::set<std::string> word_labels(const CoveringForest & f)
{
    std::set<std::string> out;
    for (auto & w : f.words())
        out.insert(w.label(f.base(), ""));
    return out;
}

std::set<std::vector<std::size_t>> as_set(const std::vector<Bitset> & v)
{
    std::set<std::vector<std::size_t>> out;
    for (auto & b : v)
        out.insert(b.elements());
    return out;
}

/// Poset of partitions under refinement, built without the library's congruence code.
Poset refinement_order(const std::vector<Partition> & ps)
{
    return Poset::from_relation(Poset::numbered(ps.size()), [&](std::size_t i, std::size_t j) { return ps[i].refines(ps[j]); });
}

std::vector<QPBundle> bundles_up_to_30()
{
    std::vector<QPBundle> v;
    for (auto & p : poset_census(5)) {
        auto b = synthesize_quasiprimal(p);
        if (b.q.size() <= 30)
            v.push_back(std::move(b));
    }
    v.push_back(synthesize_quasiprimal(figure2_poset()));
    return v;
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

/// Digraph homs by scanning all n^m vertex maps.
std::uint64_t digraph_hom_oracle(const Digraph & g, const Digraph & h)
{
    std::uint64_t count = 0;
    oracle::for_each_tuple(h.vertices, g.vertices, [&](const std::vector<std::size_t> & m) {
        for (auto [x, y] : g.edges)
            if (! h.has_edge(m[x], m[y]))
                return;
        ++count;
    });
    return count;
}

std::vector<std::size_t> divisors(std::size_t n)
{
    std::vector<std::size_t> d;
    for (std::size_t k = 1; k <= n; ++k)
        if (n % k == 0)
            d.push_back(k);
    return d;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(const std::vector<std::size_t> & xs)
{
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t m = 1; m < (std::size_t{1} << xs.size()); ++m) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (m >> i & 1)
                s.push_back(xs[i]);
        out.push_back(s);
    }
    return out;
}

std::string count_str(std::size_t n, const char * what) { return std::to_string(n) + " " + what; }

} // namespace

int main()
{
    criterion(1, "covering forests of Fig 2 and P#", 1.0, [](Ctx & c) {
        auto f = covering_forest(figure2_poset());
        const std::set<std::string> want{"1", "2", "31", "32", "42", "531", "532", "631", "632", "642"};
        c.check(word_labels(f) == want, "Fig 2 word set differs");
        // order: u ≤ v iff v is a suffix of u
        for (std::size_t x = 0; x < f.size(); ++x)
            for (std::size_t y = 0; y < f.size(); ++y)
                c.check(f.order().leq(x, y) == f.word(y).is_suffix_of(f.word(x)), "Fig 2 forest order");
        auto s = covering_forest(sharp(add_top(figure2_poset())));
        c.check(s.size() == 16, "P# forest has " + std::to_string(s.size()) + " words");
        std::set<std::string> labels;
        for (auto & w : s.words())
            labels.insert(w.label(s.base(), ""));
        c.check(labels.size() == 16, "P# words not distinct");
        return count_str(f.size(), "words") + ", " + count_str(s.size(), "words");
    });

    std::vector<HomLatticeReport> roundtrips;
    criterion(2, "round trip Down(P) for |P| <= 4 and Fig 2", 300.0, [&](Ctx & c) {
        auto ps = poset_census(4);
        ps.push_back(figure2_poset());
        for (auto & p : ps) {
            auto r = verify_roundtrip(p);
            c.check(r.iso.has_value(), "no isomorphism for a " + std::to_string(p.size()) + "-element poset");
            c.check(r.computed.size() == oracle::downsets(p).size(), "lattice size differs from down-set scan");
            roundtrips.push_back(std::move(r));
        }
        const auto & fig = roundtrips.back();
        const auto brute = oracle::downsets(figure2_poset()).size();
        c.check(brute == 12 && fig.computed.size() == 12 && fig.expected.size() == 12, "Fig 2 lattices are not both of size 12");
        return count_str(ps.size() - 1, "posets") + " + Fig 2; Fig 2 lattice " + std::to_string(fig.computed.size()) + " = "
            + std::to_string(brute) + " down-sets";
    });

    const auto small = bundles_up_to_30();
    criterion(3, "subuniverses and isomorphism types of Q", 0, [&](Ctx & c) {
        std::size_t pairs = 0, checked_by_scan = 0;
        for (auto & b : small) {
            std::set<std::vector<std::size_t>> want{{b.top_index}};
            for (std::size_t u = 0; u < b.s.size(); ++u)
                want.insert(b.down_set(b.element_of_s(u)).elements());
            c.check(as_set(all_subuniverses(b.q)) == want, "subuniverses differ for |Q| = " + std::to_string(b.q.size()));
            if (b.q.size() <= 12) {
                c.check(oracle::subuniverses(b.q) == want, "subset scan differs for |Q| = " + std::to_string(b.q.size()));
                ++checked_by_scan;
            }
            std::vector<FiniteAlgebra> qs;
            for (std::size_t u = 0; u < b.s.size(); ++u)
                qs.push_back(subalgebra(b.q, b.down_set(b.element_of_s(u))).algebra);
            for (std::size_t u = 0; u < qs.size(); ++u)
                for (std::size_t v = 0; v < qs.size(); ++v) {
                    const bool iso = find_isomorphism(qs[u], qs[v]).has_value();
                    c.check(iso == (b.s.phi(u) == b.s.phi(v)), "isomorphism disagrees with phi");
                    if (qs[u].size() <= 6 && qs[u].size() == qs[v].size())
                        c.check(iso == oracle::isomorphic(qs[u], qs[v]), "isomorphism disagrees with permutation scan");
                    ++pairs;
                }
        }
        return count_str(small.size(), "instances") + " (" + std::to_string(checked_by_scan) + " by subset scan), "
            + count_str(pairs, "pairs");
    });

    criterion(4, "Sub(Q)/= is P^T for Fig 2", 0, [](Ctx & c) {
        auto b = synthesize_quasiprimal(figure2_poset());
        auto shp = sub_hom_poset(b.q);
        auto ptop = add_top(figure2_poset());
        c.check(shp.order.size() == 7, "class count " + std::to_string(shp.order.size()));
        c.check(poset_iso(shp.order, ptop).has_value(), "not isomorphic to P^T");
        c.check(oracle::order_isomorphic(shp.order, ptop), "permutation scan disagrees");
        return count_str(shp.subuniverses.size(), "subuniverses") + " in " + count_str(shp.order.size(), "classes");
    });

    criterion(5, "hom counts of G* match digraph counts", 120.0, [](Ctx & c) {
        std::vector<Digraph> graphs;
        for (std::size_t n = 1; n <= 2; ++n)
            for (std::size_t m = 0; m < (std::size_t{1} << (n * n)); ++m) {
                std::vector<std::pair<std::size_t, std::size_t>> e;
                for (std::size_t s = 0; s < n * n; ++s)
                    if (m >> s & 1)
                        e.push_back({s / n, s % n});
                graphs.emplace_back(n, e);
            }
        c.check(graphs.size() == 18, "graph count");
        std::vector<FiniteAlgebra> stars;
        for (auto & g : graphs)
            stars.push_back(graph_star(g));
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = 0; j < graphs.size(); ++j, ++pairs)
                c.check(count_homs(stars[i], stars[j]) == digraph_hom_oracle(graphs[i], graphs[j]), "count differs");
        std::mt19937 rng(2024);
        for (int i = 0; i < 50; ++i) {
            auto a = random_digraph(rng, 3), b = random_digraph(rng, 3);
            c.check(count_homs(graph_star(a), graph_star(b)) == digraph_hom_oracle(a, b), "random pair " + std::to_string(i));
        }
        return count_str(pairs, "pairs") + " + 50 random (seed 2024)";
    });

    criterion(6, "monounary hom lattices and divisibility", 0, [](Ctx & c) {
        // Up⁺(D_n) under ⊆: a single 6-cycle gives 2×2 with a new top
        std::size_t algebras = 0;
        for (std::size_t n : {1, 2, 4, 6, 12}) {
            auto want = nonempty_upsets(divisor_lattice(n).poset(), UpsetOrder::Inclusion);
            auto family = nonempty_subsets(divisors(n));
            std::vector<FiniteAlgebra> algs;
            for (auto & s : family)
                algs.push_back(cycle_union(s));
            // independent of the lattice code: condense the find_hom quasi-order on the family
            auto cond = condense(algs.size(), [&](std::size_t i, std::size_t j) { return find_hom(algs[i], algs[j]).has_value(); });
            c.check(oracle::order_isomorphic(cond.poset, want.poset()), "hom order is not Up+(D_n) for n = " + std::to_string(n));
            for (std::size_t i = 0; i < family.size(); ++i) {
                std::size_t l = 1;
                for (auto d : family[i])
                    l = std::lcm(l, d);
                if (l != n)
                    continue;
                ++algebras;
                c.check(lattice_iso(monounary_hom_lattice(algs[i]), want).has_value(), "n = " + std::to_string(n));
            }
        }
        // n = 6: B1 → B2 iff every cycle of B1 lies above some cycle of B2 in divisibility
        auto sets = nonempty_subsets(divisors(6));
        std::vector<FiniteAlgebra> algs;
        for (auto & s : sets)
            algs.push_back(cycle_union(s));
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < algs.size(); ++i)
            for (std::size_t j = 0; j < algs.size(); ++j, ++pairs) {
                bool want = true;
                for (auto a : sets[i])
                    want = want && std::any_of(sets[j].begin(), sets[j].end(), [a](std::size_t d) { return a % d == 0; });
                c.check(find_hom(algs[i], algs[j]).has_value() == want, "n = 6 quasi-order");
                if (algs[i].size() <= 6 && algs[j].size() <= 6)
                    c.check(oracle::homs(algs[i], algs[j]).empty() != want, "n = 6 exhaustive scan");
            }
        return count_str(algebras, "algebras") + ", " + count_str(pairs, "pairs for n = 6");
    });

    criterion(7, "pentagon congruences, quotients, SI check", 0, [](Ctx & c) {
        auto a = pentagon_algebra();
        auto cl = congruence_lattice(a);
        auto scan = oracle::congruences(a);
        c.check(scan.size() == 5 && cl.congruences.size() == 5, "congruence count");
        c.check(lattice_iso(cl.lattice, lattices::n5()).has_value(), "Con is not N5");
        c.check(oracle::order_isomorphic(refinement_order(scan), lattices::n5().poset()), "partition scan is not N5");
        // elements 0, a, b, 1 are 0, 1, 2, 3
        const auto delta = Partition::identity(4), nabla = Partition::total(4);
        const auto gamma = Partition::from_blocks(4, {{1}, {3}, {0, 2}});
        const auto alpha = Partition::from_blocks(4, {{1, 3}, {0, 2}});
        const auto beta = Partition::from_blocks(4, {{0, 1}, {2, 3}});
        for (auto & p : {delta, gamma, alpha, beta, nabla})
            c.check(std::find(scan.begin(), scan.end(), p) != scan.end(), "missing block structure " + p.to_string());
        c.check(gamma.refines(alpha) && ! gamma.refines(beta), "gamma below alpha only");
        c.check(meet(alpha, beta) == delta, "alpha meet beta");
        c.check(join(alpha, beta) == nabla, "alpha join beta");
        auto sis = pentagon_sis();
        std::vector<std::size_t> sizes;
        for (auto & p : {alpha, beta, gamma}) {
            auto q = quotient_algebra(a, p);
            sizes.push_back(q.size());
            c.check(std::any_of(sis.begin(), sis.end(), [&](const FiniteAlgebra & s) { return oracle::isomorphic(q, s); }),
                "quotient by " + p.to_string() + " is not a pictured algebra");
        }
        c.check(sizes == std::vector<std::size_t>{2, 2, 3}, "quotient sizes");
        auto v = lemma13_check(a, sis);
        c.check(v.passes(), "lemma13_check with supplied SIs fails");
        c.check(lemma13_check(a).passes(), "lemma13_check with derived SIs fails");
        return "quotient sizes 2, 2, 3; product and SI checks pass";
    });

    criterion(8, "M3 for the named 3-set and Klein four", 0, [](Ctx & c) {
        auto named = name_all_elements(FiniteAlgebra(3, Signature(), {}));
        auto scan = oracle::congruences(named);
        c.check(scan.size() == 5, "named 3-set has " + std::to_string(scan.size()) + " congruences");
        c.check(lattice_iso(congruence_lattice(named).lattice, lattices::m3()).has_value(), "named 3-set is not M3");
        c.check(oracle::order_isomorphic(refinement_order(scan), lattices::m3().poset()), "partition scan is not M3");
        auto k = groups::klein4();
        auto kscan = oracle::congruences(k);
        c.check(lattice_iso(congruence_lattice(k).lattice, lattices::m3()).has_value(), "Klein four is not M3");
        c.check(oracle::order_isomorphic(refinement_order(kscan), lattices::m3().poset()), "Klein scan is not M3");
        return "5 and " + count_str(kscan.size(), "congruences");
    });

    criterion(9, "S3 coset G-set has Con a 3-chain", 0, [](Ctx & c) {
        auto a = gset_coset_algebra(6, groups::symmetric(3), {0, 2});
        auto scan = oracle::congruences(a);
        c.check(scan.size() == 3, "partition scan found " + std::to_string(scan.size()));
        c.check(oracle::order_isomorphic(refinement_order(scan), Poset::chain(3)), "scan is not a chain");
        c.check(lattice_iso(congruence_lattice(a).lattice, lattices::chain(3)).has_value(), "library Con is not a 3-chain");
        return count_str(a.size(), "elements") + ", " + count_str(scan.size(), "congruences");
    });

    criterion(10, "Birkhoff-Frink for join-semilattices <= 5", 0, [](Ctx & c) {
        std::size_t count = 0;
        for (auto & s : poset_census(5)) {
            bool closed = true;
            for (std::size_t x = 0; x < s.size() && closed; ++x)
                for (std::size_t y = 0; y < s.size() && closed; ++y)
                    closed = poset_join(s, x, y).has_value();
            if (! closed)
                continue;
            ++count;
            auto subs = oracle::subuniverses(birkhoff_frink(s));
            std::vector<std::vector<std::size_t>> v(subs.begin(), subs.end());
            auto sub = Poset::from_relation(Poset::numbered(v.size()), [&](std::size_t i, std::size_t j) {
                return std::includes(v[j].begin(), v[j].end(), v[i].begin(), v[i].end());
            });
            c.check(oracle::order_isomorphic(sub, s), "Sub not isomorphic for |S| = " + std::to_string(s.size()));
        }
        c.check(count == 24, "found " + std::to_string(count) + " semilattices");
        return count_str(count, "semilattices");
    });

    criterion(11, "property suites", 600.0, [&](Ctx & c) {
        std::size_t checks = 0;
        auto census = poset_census(5);
        // covering and quotient maps; μ
        for (auto & p : census) {
            auto f = covering_forest(p);
            c.check(is_covering_map(f.phi_map(), f.order(), p), "phi not a covering map");
            c.check(is_quotient_map(f.phi_map(), f.order(), p), "phi not a quotient map");
            for (std::size_t u = 0; u < f.size(); ++u)
                for (std::size_t v = 0; v < f.size(); ++v) {
                    if (f.phi(u) != f.phi(v))
                        continue;
                    auto mu = f.mu(u, v);
                    c.check(mu.size() == f.down(u).size() && mu.size() == f.down(v).size(), "mu is not a bijection");
                    for (auto [x, y] : mu)
                        c.check(f.phi(x) == f.phi(y) && f.order().leq(y, v), "phi(mu(x)) != phi(x)");
                    for (auto [x1, y1] : mu)
                        for (auto [x2, y2] : mu)
                            c.check(f.order().leq(x1, x2) == f.order().leq(y1, y2), "mu not an order isomorphism");
                    ++checks;
                }
            // Birkhoff round trip
            c.check(oracle::order_isomorphic(join_irreducibles(downset_lattice(p)), p), "J(Down P) is not P");
        }
        // hom engine against the |B|^|A| scan
        std::mt19937 rng(7);
        const std::vector<Signature> sigs{Signature({{"f", 1}}), Signature({{"m", 2}}), Signature({{"f", 1}, {"c", 0}}),
            Signature({{"f", 1}, {"g", 1}})};
        for (int t = 0; t < 400; ++t) {
            auto &sig = sigs[t % sigs.size()];
            auto a = oracle::random_algebra(rng, 1 + t % 4, sig);
            auto b = oracle::random_algebra(rng, 1 + (t / 4) % 4, sig);
            auto all = oracle::homs(a, b);
            c.check(count_homs(a, b) == all.size(), "count_homs differs");
            c.check(find_hom(a, b).has_value() == ! all.empty(), "find_hom differs");
            ++checks;
        }
        // distributive hom lattices for every synthesized Q
        for (auto & r : roundtrips)
            c.check(is_distributive(r.computed), "hom lattice not distributive");
        return count_str(checks, "mu/hom checks") + ", " + count_str(roundtrips.size(), "hom lattices");
    });

    std::printf("%s\n", failed ? "SOME CRITERIA FAILED" : "ALL CRITERIA PASS");
    return failed ? 1 : 0;
}
