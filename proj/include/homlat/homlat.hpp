#pragma once

#include <homlat/algebra.hpp>
#include <homlat/error.hpp>
#include <homlat/hom.hpp>
#include <homlat/poset.hpp>
#include <homlat/synth.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace homlat {

/// Sub(Q)/≡ ordered by →.
struct SubHomPoset {
    /// All subuniverses, sorted by size then lexicographically.
    std::vector<Bitset> subuniverses;
    /// One per class: the first (smallest) subuniverse in it.
    std::vector<Subalgebra> representatives;
    Poset order;
    /// Class index of each subuniverse.
    std::vector<std::size_t> class_of;
    /// hom_exists between subuniverses i and j, row i.
    std::vector<Bitset> quasi_order;
};

struct EngineOptions {
    std::size_t subuniverse_budget = Limits{}.subuniverses;
    /// 0 picks the hardware concurrency; 1 runs inline.
    unsigned threads = 1;
};

namespace detail {

/// Fills rel[i][j] = pred(i, j) for all pairs, spreading rows over threads.
template <class Pred>
std::vector<Bitset> pairwise(std::size_t k, unsigned threads, Pred && pred)
{
    std::vector<std::vector<char>> cells(k, std::vector<char>(k, 0));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < k;)
            for (std::size_t j = 0; j < k; ++j)
                cells[i][j] = pred(i, j) ? 1 : 0;
    };
    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(k, 1)));
    if (threads <= 1)
        worker();
    else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex m;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                try {
                    worker();
                }
                catch (...) {
                    std::lock_guard lock(m);
                    if (! failure)
                        failure = std::current_exception();
                    next = k;
                }
            });
        for (auto & th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
    }
    std::vector<Bitset> rel(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (cells[i][j])
                rel[i].set(j);
    return rel;
}

inline SubHomPoset condense_subalgebras(const FiniteAlgebra & q, std::vector<Bitset> subs, std::vector<Bitset> rel)
{
    SubHomPoset out;
    const std::size_t k = subs.size();
    auto c = condense(k, [&](std::size_t i, std::size_t j) { return rel[i].test(j); });
    out.class_of = std::move(c.block_of);
    std::vector<std::size_t> first(c.poset.size(), k);
    for (std::size_t i = 0; i < k; ++i)
        if (first[out.class_of[i]] == k)
            first[out.class_of[i]] = i;
    std::vector<std::string> names;
    std::vector<Cover> covers = c.poset.covers();
    for (auto i : first) {
        out.representatives.push_back(subalgebra(q, subs[i]));
        names.push_back(subs[i].to_string());
    }
    out.order = Poset::from_covers(std::move(names), std::move(covers));
    out.subuniverses = std::move(subs);
    out.quasi_order = std::move(rel);
    return out;
}

} // namespace detail

/// Enumerates subalgebras, runs find_hom on every ordered pair and condenses.
inline SubHomPoset sub_hom_poset(const FiniteAlgebra & q, const EngineOptions & opts = {})
{
    auto subs = all_subuniverses(q, SubuniverseMethod::Auto, opts.subuniverse_budget);
    std::vector<Subalgebra> algs;
    for (auto & s : subs)
        algs.push_back(subalgebra(q, s));
    auto rel = detail::pairwise(subs.size(), opts.threads, [&](std::size_t i, std::size_t j) {
        return i == j || hom_exists(algs[i].algebra, algs[j].algebra);
    });
    return detail::condense_subalgebras(q, std::move(subs), std::move(rel));
}

/// Some element forming a one-element subuniverse, if any.
inline std::optional<std::size_t> trivial_subalgebra(const FiniteAlgebra & q)
{
    SubuniverseCloser closer(q);
    for (std::size_t x = 0; x < q.size(); ++x)
        if (closer.is_closed(Bitset::singleton(q.size(), x)))
            return x;
    return std::nullopt;
}

inline bool has_trivial_subalgebra(const FiniteAlgebra & q) { return trivial_subalgebra(q).has_value(); }

/// Down(P), or Down(P minus its top) when Q has a trivial subalgebra, for
/// P = Sub(Q)/≡. Quasi-primality of q is the caller's assertion.
inline Lattice hom_lattice_from(const SubHomPoset & shp, bool trivial)
{
    const auto & p = shp.order;
    auto top = p.top();
    if (! top)
        throw Error(ErrorKind::NoTopInP, "Sub(Q)/= has no top; the input is not quasi-primal");
    if (! trivial)
        return downset_lattice(p);
    std::vector<std::size_t> rest;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (x != *top)
            rest.push_back(x);
    return downset_lattice(p.induced(rest));
}

inline Lattice hom_lattice_quasiprimal(const FiniteAlgebra & q, const EngineOptions & opts = {})
{
    return hom_lattice_from(sub_hom_poset(q, opts), has_trivial_subalgebra(q));
}

/// lattice_iso plus a check that the witness carries meets and joins.
inline std::optional<std::vector<std::size_t>> lattice_iso_report(const Lattice & a, const Lattice & b)
{
    auto w = lattice_iso(a, b);
    if (! w)
        return w;
    const auto & m = *w;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (m[a.meet(x, y)] != b.meet(m[x], m[y]) || m[a.join(x, y)] != b.join(m[x], m[y]))
                throw std::logic_error("order isomorphism does not preserve lattice operations");
    return w;
}

/// Sub(Q)/≡ for a synthesized Q taking the subuniverse list from the
/// classification ({⊤} and the ↓u, u ∈ S) and one hom test per pair of
/// φ-classes instead of per pair of subalgebras.
inline SubHomPoset sub_hom_poset_fast(const QPBundle & b, const EngineOptions & opts = {})
{
    std::vector<Bitset> subs{Bitset::singleton(b.q.size(), b.top_index)};
    std::vector<std::size_t> phi{b.ptop.size()};
    for (std::size_t u = 0; u < b.s.size(); ++u) {
        subs.push_back(b.down_set(b.element_of_s(u)));
        phi.push_back(b.s.phi(u));
    }
    std::vector<std::size_t> idx(subs.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        if (subs[x].count() != subs[y].count())
            return subs[x].count() < subs[y].count();
        return lex_less(subs[x], subs[y]);
    });
    std::vector<Bitset> sorted;
    std::vector<std::size_t> sphi;
    for (auto i : idx) {
        sorted.push_back(subs[i]);
        sphi.push_back(phi[i]);
    }
    // one representative subalgebra per φ value
    const std::size_t k = sorted.size();
    std::vector<std::size_t> rep_of(b.ptop.size() + 1, k);
    for (std::size_t i = 0; i < k; ++i)
        if (rep_of[sphi[i]] == k)
            rep_of[sphi[i]] = i;
    std::vector<std::size_t> classes;
    for (std::size_t v = 0; v < rep_of.size(); ++v)
        if (rep_of[v] != k)
            classes.push_back(v);
    std::vector<Subalgebra> algs;
    for (auto v : classes)
        algs.push_back(subalgebra(b.q, sorted[rep_of[v]]));
    auto crel = detail::pairwise(classes.size(), opts.threads, [&](std::size_t i, std::size_t j) {
        return i == j || hom_exists(algs[i].algebra, algs[j].algebra);
    });
    std::vector<std::size_t> class_pos(rep_of.size(), 0);
    for (std::size_t c = 0; c < classes.size(); ++c)
        class_pos[classes[c]] = c;
    std::vector<Bitset> rel(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (crel[class_pos[sphi[i]]].test(class_pos[sphi[j]]))
                rel[i].set(j);
    return detail::condense_subalgebras(b.q, std::move(sorted), std::move(rel));
}

struct Timings {
    double synth_ms = 0, sub_hom_ms = 0, lattice_ms = 0, iso_ms = 0, fast_ms = 0;
};

struct HomLatticeReport {
    Poset input;
    FiniteAlgebra q;
    SubHomPoset sub_hom;
    Lattice computed;
    Lattice expected;
    std::optional<std::vector<std::size_t>> iso;
    /// Set when the fast path ran: whether it produced an isomorphic lattice.
    std::optional<bool> fast_agrees;
    Timings timings;

    bool ok() const { return iso.has_value() && fast_agrees.value_or(true); }
};

struct RoundtripOptions {
    EngineOptions engine;
    bool fast_path = false;
    std::size_t synth_budget = 100'000;
};

/// Synthesize Q from P, compute its hom lattice generically, compare with Down(P).
inline HomLatticeReport verify_roundtrip(const Poset & p, const RoundtripOptions & opts = {})
{
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::time_point a, clock::time_point b) { return std::chrono::duration<double, std::milli>(b - a).count(); };
    HomLatticeReport r;
    r.input = p;
    auto t0 = clock::now();
    auto bundle = synthesize_quasiprimal(p, opts.synth_budget);
    r.q = bundle.q;
    auto t1 = clock::now();
    r.sub_hom = sub_hom_poset(r.q, opts.engine);
    auto t2 = clock::now();
    r.computed = hom_lattice_from(r.sub_hom, has_trivial_subalgebra(r.q));
    r.expected = downset_lattice(p);
    auto t3 = clock::now();
    r.iso = lattice_iso_report(r.computed, r.expected);
    auto t4 = clock::now();
    r.timings = {ms(t0, t1), ms(t1, t2), ms(t2, t3), ms(t3, t4), 0};
    if (opts.fast_path) {
        auto fast = hom_lattice_from(sub_hom_poset_fast(bundle, opts.engine), true);
        r.fast_agrees = lattice_iso(fast, r.computed).has_value();
        r.timings.fast_ms = ms(t4, clock::now());
    }
    return r;
}

enum class SiSource {
    /// No list given; the subdirectly irreducible quotients of A were used.
    Quotients,
    /// Caller-asserted complete list.
    Supplied,
};

struct Lemma13Verdict {
    CongruenceLattice con;
    /// (A/θ₁) × (A/θ₂) → A/(θ₁ ∩ θ₂) for all pairs.
    bool products_ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    /// Every SI B maps into B₀.
    bool sis_ok = true;
    std::optional<std::size_t> failing_si;
    std::size_t si_count = 0;
    SiSource si_source = SiSource::Quotients;
    /// Set when the SI list came from the caller and was not derived.
    bool caveat = false;

    bool passes() const { return products_ok && sis_ok; }
};

inline Lemma13Verdict lemma13_check(const FiniteAlgebra & a, const std::optional<std::vector<FiniteAlgebra>> & sis = std::nullopt,
    std::size_t budget = Limits{}.congruences)
{
    if (! a.has_nullaries() || zero_subalgebra(a).elements.size() != a.size())
        throw Error(ErrorKind::NotAllNamed, "not every element is the value of a nullary operation");
    Lemma13Verdict v;
    v.con = congruence_lattice(a, budget);
    const auto & cs = v.con.congruences;
    std::vector<FiniteAlgebra> quot;
    for (auto & c : cs)
        quot.push_back(quotient_algebra(a, c));
    for (std::size_t i = 0; i < cs.size() && v.products_ok; ++i)
        for (std::size_t j = i; j < cs.size(); ++j) {
            auto target = quotient_algebra(a, meet(cs[i], cs[j]));
            if (! hom_exists(direct_product(quot[i], quot[j]), target)) {
                v.products_ok = false;
                v.failing_pair = {i, j};
                break;
            }
        }
    std::vector<FiniteAlgebra> list;
    if (sis) {
        v.si_source = SiSource::Supplied;
        v.caveat = true;
        list = *sis;
    }
    else {
        for (auto & qa : quot)
            if (qa.size() > 1 && is_subdirectly_irreducible(qa, budget))
                list.push_back(qa);
    }
    v.si_count = list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
        require_same_signature(a, list[i]);
        if (! hom_exists(list[i], zero_subalgebra(list[i]).algebra)) {
            v.sis_ok = false;
            v.failing_si = i;
            break;
        }
    }
    return v;
}

} // namespace homlat
