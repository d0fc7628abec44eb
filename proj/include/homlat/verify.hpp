#pragma once

#include <homlat/fixtures.hpp>
#include <homlat/forest.hpp>
#include <homlat/hom.hpp>
#include <homlat/homlat.hpp>
#include <homlat/synth.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace homlat::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Report = std::vector<Check>;

inline bool all_pass(const Report & r)
{
    return std::all_of(r.begin(), r.end(), [](const Check & c) { return c.pass; });
}

namespace detail {

inline void add(Report & r, std::string name, const std::function<std::string()> & body)
{
    // body returns "" on success, else a counterexample
    try {
        auto msg = body();
        r.push_back({std::move(name), msg.empty(), msg});
    }
    catch (const std::exception & e) {
        r.push_back({std::move(name), false, e.what()});
    }
}

inline std::set<std::string> word_labels(const CoveringForest & f)
{
    std::set<std::string> out;
    for (auto & w : f.words())
        out.insert(w.label(f.base(), ""));
    return out;
}

inline std::string join_set(const std::set<std::string> & s)
{
    std::string out;
    for (auto & x : s)
        out += (out.empty() ? "" : " ") + x;
    return out;
}

inline std::string expect_words(const CoveringForest & f, const std::set<std::string> & expected)
{
    auto got = word_labels(f);
    return got == expected ? "" : "got {" + join_set(got) + "}";
}

} // namespace detail

/// Figures 2, 3, 7 and 8.
inline Report figures(const Poset & fig2 = figure2_poset())
{
    Report r;
    detail::add(r, "fig2-forest", [&] {
        return detail::expect_words(covering_forest(fig2), {"1", "2", "31", "32", "42", "531", "532", "631", "632", "642"});
    });
    detail::add(r, "fig2-forest-order", [&] {
        auto f = covering_forest(fig2);
        for (std::size_t x = 0; x < f.size(); ++x)
            for (std::size_t y = 0; y < f.size(); ++y)
                if (f.order().leq(x, y) != f.word(y).is_suffix_of(f.word(x)))
                    return f.word(x).label(fig2) + " vs " + f.word(y).label(fig2);
        return std::string();
    });
    detail::add(r, "fig3-tree", [&] {
        return detail::expect_words(covering_forest(sharp(add_top(fig2, "0"))),
            {"0", "10", "20", "310", "320", "420", "5310", "5320", "6310", "6320", "6420", "5'5310", "5'5320", "6'6310", "6'6320", "6'6420"});
    });
    detail::add(r, "fig3-algebra-size", [&] {
        auto n = synthesize_quasiprimal(fig2).q.size();
        return n == 16 ? "" : "|Q| = " + std::to_string(n);
    });
    const auto a = pentagon_algebra();
    detail::add(r, "fig8-congruences", [&] {
        auto con = congruence_lattice(a);
        std::vector<std::string> got;
        for (auto & c : con.congruences)
            got.push_back(c.to_string());
        const std::vector<std::string> want{"{0 | 1 | 2 | 3}", "{0,2 | 1 | 3}", "{0,1 | 2,3}", "{0,2 | 1,3}", "{0,1,2,3}"};
        if (got != want) {
            std::string s;
            for (auto & g : got)
                s += g + " ";
            return "got " + s;
        }
        return lattice_iso_report(con.lattice, lattices::n5()) ? "" : std::string("Con is not N5");
    });
    detail::add(r, "fig7-quotients", [&] {
        // α = {a,1 | 0,b}, β = {0,a | b,1}, γ = {a | 1 | 0,b}
        const std::vector<Partition> thetas{Partition::from_blocks(4, {{1, 3}, {0, 2}}), Partition::from_blocks(4, {{0, 1}, {2, 3}}),
            Partition::from_blocks(4, {{1}, {3}, {0, 2}})};
        auto sis = pentagon_sis();
        const char * names[] = {"alpha", "beta", "gamma"};
        for (std::size_t i = 0; i < 3; ++i)
            if (! find_isomorphism(quotient_algebra(a, thetas[i]), sis[i]))
                return std::string("A/") + names[i] + " differs from the picture";
        return std::string();
    });
    return r;
}

/// Examples 2, 3, 14, 15 and 16.
inline Report examples()
{
    Report r;
    detail::add(r, "example2-hom-counts", [] {
        std::vector<Digraph> graphs;
        graphs.emplace_back(1, std::vector<std::pair<std::size_t, std::size_t>>{});
        graphs.emplace_back(1, std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
        const std::pair<std::size_t, std::size_t> all[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (unsigned m = 0; m < 16; ++m) {
            std::vector<std::pair<std::size_t, std::size_t>> e;
            for (unsigned b = 0; b < 4; ++b)
                if (m >> b & 1)
                    e.push_back(all[b]);
            graphs.emplace_back(2, e);
        }
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = 0; j < graphs.size(); ++j) {
                auto want = count_digraph_homs(graphs[i], graphs[j]);
                auto got = count_homs(graph_star(graphs[i]), graph_star(graphs[j]));
                if (want != got)
                    return "graphs " + std::to_string(i) + ", " + std::to_string(j) + ": " + std::to_string(got) + " != " + std::to_string(want);
            }
        return std::string();
    });
    detail::add(r, "example3-monounary", [] {
        const std::vector<std::vector<std::size_t>> cases{{1}, {1, 1}, {2}, {1, 2}, {4}, {2, 4}, {6}, {2, 3}, {12}, {3, 4}, {4, 6}};
        for (auto & c : cases) {
            std::size_t n = 1;
            for (auto x : c)
                n = std::lcm(n, x);
            auto got = monounary_hom_lattice(cycle_union(c));
            auto want = n == 1 ? lattices::chain(1) : nonempty_upsets(divisor_lattice(n).poset(), UpsetOrder::Inclusion);
            if (! lattice_iso(got, want))
                return "n = " + std::to_string(n);
        }
        return std::string();
    });
    detail::add(r, "example14-equiv3", [] {
        auto a = FiniteAlgebra(3, Signature({{"c0", 0}, {"c1", 0}, {"c2", 0}}), {{0}, {1}, {2}}, "named3");
        auto v = lemma13_check(a);
        if (! v.passes())
            return std::string("product or SI condition fails");
        return lattice_iso(v.con.lattice, lattices::m3()) ? "" : std::string("Con is not M3");
    });
    detail::add(r, "example14-klein4", [] {
        return lattice_iso(congruence_lattice(groups::klein4()).lattice, lattices::m3()) ? "" : std::string("Con is not M3");
    });
    detail::add(r, "example15-s3", [] {
        auto g = gset_coset_algebra(6, groups::symmetric(3), {0, 2});
        if (g.size() != 4)
            return "size " + std::to_string(g.size());
        return lattice_iso(congruence_lattice(g).lattice, lattices::chain(3)) ? "" : std::string("Con is not a 3-chain");
    });
    detail::add(r, "example15-z4", [] {
        auto g = gset_coset_algebra(4, groups::cyclic(4), {0});
        return lattice_iso(congruence_lattice(g).lattice, lattices::chain(4)) ? "" : std::string("Con is not a 4-chain");
    });
    detail::add(r, "example16-pentagon", [] {
        auto v = lemma13_check(pentagon_algebra(), pentagon_sis());
        if (! v.passes())
            return std::string("product or SI condition fails");
        const auto & cs = v.con.congruences;
        auto alpha = Partition::from_blocks(4, {{1, 3}, {0, 2}});
        auto beta = Partition::from_blocks(4, {{0, 1}, {2, 3}});
        if (std::find(cs.begin(), cs.end(), alpha) == cs.end() || std::find(cs.begin(), cs.end(), beta) == cs.end())
            return std::string("alpha or beta missing");
        if (! meet(alpha, beta).is_identity() || ! join(alpha, beta).is_total())
            return std::string("alpha, beta not complementary");
        return lattice_iso(v.con.lattice, lattices::n5()) ? "" : std::string("Con is not N5");
    });
    return r;
}

/// verify_roundtrip over every nonempty poset with at most 4 elements plus Fig 2.
inline Report roundtrip(const Poset & fig2 = figure2_poset(), const EngineOptions & engine = {})
{
    Report r;
    auto census = poset_census(4);
    census.push_back(fig2);
    for (std::size_t i = 0; i < census.size(); ++i) {
        const auto & p = census[i];
        std::string name = i + 1 == census.size() ? "fig2" : "poset-" + std::to_string(i + 1) + " (|P|=" + std::to_string(p.size()) + ")";
        detail::add(r, "roundtrip " + name, [&] {
            RoundtripOptions o;
            o.engine = engine;
            o.fast_path = true;
            auto rep = verify_roundtrip(p, o);
            if (! rep.iso)
                return "L_Q has " + std::to_string(rep.computed.size()) + " elements, Down(P) has " + std::to_string(rep.expected.size());
            if (! *rep.fast_agrees)
                return std::string("fast path disagrees");
            return std::string();
        });
    }
    return r;
}

} // namespace homlat::verify
