#pragma once

#include <homlat/algebra.hpp>
#include <homlat/bitset.hpp>
#include <homlat/error.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace homlat {

struct HomWitness {
    std::size_t source_size = 0;
    std::size_t target_size = 0;
    std::vector<std::size_t> map;

    bool injective() const
    {
        std::vector<bool> hit(target_size, false);
        for (auto y : map) {
            if (hit[y])
                return false;
            hit[y] = true;
        }
        return true;
    }
};

/// Direct check of h(f^A(x̄)) = f^B(h(x̄)) over every operation and tuple.
inline bool is_homomorphism(const FiniteAlgebra & a, const FiniteAlgebra & b, std::span<const std::size_t> map)
{
    if (a.signature() != b.signature() || map.size() != a.size())
        return false;
    for (auto y : map)
        if (y >= b.size())
            return false;
    std::vector<std::size_t> args, img;
    for (std::size_t op = 0; op < a.num_ops(); ++op) {
        const auto & t = a.table(op);
        for (std::size_t idx = 0; idx < t.size(); ++idx) {
            a.decode(op, idx, args);
            img.resize(args.size());
            for (std::size_t i = 0; i < args.size(); ++i)
                img[i] = map[args[i]];
            if (map[t[idx]] != b.apply(op, img))
                return false;
        }
    }
    return true;
}

/// Backtracking search for homomorphisms A → B.
///
/// Domains are bit sets of target candidates per source element. Nullaries
/// fix domains up front; unary operations are kept arc consistent; for
/// higher arities, every tuple that becomes fully assigned pins the domain of
/// its image. Branching picks the smallest domain, ties by lowest index, and
/// tries values in ascending order.
struct HomOptions {
    bool injective = false;
    /// Optional per-element restriction, intersected with the defaults.
    std::vector<Bitset> domains;
};

class HomSearch {
public:
    using Options = HomOptions;

    HomSearch(const FiniteAlgebra & a, const FiniteAlgebra & b, Options opts = {}) : a_(a), b_(b), opts_(std::move(opts))
    {
        require_same_signature(a, b);
        const std::size_t n = a.size();
        forward_.resize(n);
        backward_.resize(n);
        for (std::size_t op = 0; op < a.num_ops(); ++op) {
            if (a.arity(op) == 1) {
                for (std::size_t x = 0; x < n; ++x) {
                    auto y = a.table(op)[x];
                    forward_[x].push_back({op, y});
                    backward_[y].push_back({op, x});
                }
            }
            else if (a.arity(op) >= 2)
                higher_.push_back(op);
        }
    }

    /// Calls on_solution(map) for each homomorphism until it returns false.
    /// Returns the number of solutions visited.
    template <typename F>
    std::uint64_t run(F && on_solution)
    {
        const std::size_t n = a_.size(), m = b_.size();
        std::vector<Bitset> dom(n, Bitset::full(m));
        if (! opts_.domains.empty())
            for (std::size_t x = 0; x < n; ++x)
                dom[x] &= opts_.domains[x];
        if (opts_.injective && n > m)
            return 0;
        std::vector<std::size_t> touched;
        for (std::size_t op = 0; op < a_.num_ops(); ++op)
            if (a_.arity(op) == 0) {
                auto x = a_.nullary_value(op), y = b_.nullary_value(op);
                if (! dom[x].test(y))
                    return 0;
                dom[x] = Bitset::singleton(m, y);
                touched.push_back(x);
            }
        for (std::size_t x = 0; x < n; ++x)
            touched.push_back(x);
        if (! propagate_unary(dom, touched))
            return 0;
        assignment_.assign(n, kUnassigned);
        order_.clear();
        count_ = 0;
        stop_ = false;
        search(dom, on_solution);
        return count_;
    }

private:
    static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

    struct Link {
        std::size_t op;
        std::size_t other;
    };

    bool propagate_unary(std::vector<Bitset> & dom, std::vector<std::size_t> & work) const
    {
        const std::size_t m = b_.size();
        while (! work.empty()) {
            auto x = work.back();
            work.pop_back();
            if (dom[x].none())
                return false;
            for (auto [op, y] : forward_[x]) {
                Bitset img(m);
                const auto & t = b_.table(op);
                dom[x].for_each([&](std::size_t v) { img.set(t[v]); });
                Bitset nd = dom[y] & img;
                if (nd != dom[y]) {
                    if (nd.none())
                        return false;
                    dom[y] = std::move(nd);
                    work.push_back(y);
                }
            }
            for (auto [op, z] : backward_[x]) {
                Bitset pre(m);
                const auto & t = b_.table(op);
                dom[z].for_each([&](std::size_t v) {
                    if (dom[x].test(t[v]))
                        pre.set(v);
                });
                if (pre != dom[z]) {
                    if (pre.none())
                        return false;
                    dom[z] = std::move(pre);
                    work.push_back(z);
                }
            }
        }
        return true;
    }

    /// Pins images of newly completed tuples; false on contradiction.
    bool forward_check(std::vector<Bitset> & dom, std::vector<std::size_t> & work) const
    {
        const std::size_t t = order_.size() - 1;
        std::vector<std::size_t> img;
        bool ok = true;
        for (auto op : higher_) {
            const auto k = a_.arity(op);
            img.resize(k);
            detail::for_each_new_tuple(order_, t, t + 1, k, [&](std::span<const std::size_t> args) {
                if (! ok)
                    return;
                for (std::size_t i = 0; i < k; ++i)
                    img[i] = assignment_[args[i]];
                auto r = a_.apply(op, args);
                auto val = b_.apply(op, img);
                if (assignment_[r] != kUnassigned) {
                    if (assignment_[r] != val)
                        ok = false;
                }
                else if (! dom[r].test(val))
                    ok = false;
                else if (dom[r].count() > 1) {
                    dom[r] = Bitset::singleton(b_.size(), val);
                    work.push_back(r);
                }
            });
            if (! ok)
                return false;
        }
        return true;
    }

    template <typename F>
    void search(std::vector<Bitset> & dom, F & on_solution)
    {
        const std::size_t n = a_.size();
        std::size_t best = kUnassigned, best_count = kUnassigned;
        for (std::size_t x = 0; x < n; ++x)
            if (assignment_[x] == kUnassigned) {
                auto c = dom[x].count();
                if (c < best_count) {
                    best = x;
                    best_count = c;
                }
            }
        if (best == kUnassigned) {
            ++count_;
            if (! on_solution(std::span<const std::size_t>(assignment_)))
                stop_ = true;
            return;
        }
        const auto candidates = dom[best].elements();
        for (auto v : candidates) {
            std::vector<Bitset> saved = dom;
            assignment_[best] = v;
            order_.push_back(best);
            dom[best] = Bitset::singleton(b_.size(), v);
            std::vector<std::size_t> work{best};
            bool ok = true;
            if (opts_.injective)
                for (std::size_t x = 0; x < n && ok; ++x)
                    if (x != best && assignment_[x] == kUnassigned && dom[x].test(v)) {
                        dom[x].reset(v);
                        if (dom[x].none())
                            ok = false;
                        work.push_back(x);
                    }
            ok = ok && forward_check(dom, work) && propagate_unary(dom, work);
            if (ok)
                search(dom, on_solution);
            order_.pop_back();
            assignment_[best] = kUnassigned;
            dom = std::move(saved);
            if (stop_)
                return;
        }
    }

    const FiniteAlgebra & a_;
    const FiniteAlgebra & b_;
    Options opts_;
    std::vector<std::vector<Link>> forward_, backward_;
    std::vector<std::size_t> higher_;
    std::vector<std::size_t> assignment_, order_;
    std::uint64_t count_ = 0;
    bool stop_ = false;
};

inline std::optional<HomWitness> find_hom(const FiniteAlgebra & a, const FiniteAlgebra & b, HomSearch::Options opts = {})
{
    HomSearch s(a, b, std::move(opts));
    std::optional<HomWitness> out;
    s.run([&](std::span<const std::size_t> map) {
        out = HomWitness{a.size(), b.size(), {map.begin(), map.end()}};
        return false;
    });
    return out;
}

inline std::uint64_t count_homs(const FiniteAlgebra & a, const FiniteAlgebra & b)
{
    HomSearch s(a, b);
    return s.run([](std::span<const std::size_t>) { return true; });
}

inline bool hom_exists(const FiniteAlgebra & a, const FiniteAlgebra & b) { return find_hom(a, b).has_value(); }

inline bool hom_equivalent(const FiniteAlgebra & a, const FiniteAlgebra & b)
{
    return hom_exists(a, b) && hom_exists(b, a);
}

/// A hom into a product is a tuple of homs into the factors; each factor is
/// searched separately and the map is encoded as in direct_product.
inline std::optional<HomWitness> find_hom_into_product(const FiniteAlgebra & a, std::span<const FiniteAlgebra> factors)
{
    if (factors.empty())
        throw Error(ErrorKind::InvalidArgument, "empty product");
    std::vector<std::size_t> map(a.size(), 0);
    std::size_t total = 1;
    for (auto & f : factors) {
        auto h = find_hom(a, f);
        if (! h)
            return std::nullopt;
        for (std::size_t x = 0; x < a.size(); ++x)
            map[x] = map[x] * f.size() + h->map[x];
        total *= f.size();
    }
    return HomWitness{a.size(), total, std::move(map)};
}

namespace detail {

/// Isomorphism-invariant fingerprint of an element.
inline std::vector<std::size_t> element_profile(const FiniteAlgebra & a, std::size_t x)
{
    std::vector<std::size_t> p;
    std::vector<std::size_t> diag;
    for (std::size_t op = 0; op < a.num_ops(); ++op) {
        const auto k = a.arity(op);
        if (k == 0) {
            p.push_back(a.nullary_value(op) == x);
            continue;
        }
        if (k == 1) {
            const auto & t = a.table(op);
            p.push_back(t[x] == x);
            p.push_back(static_cast<std::size_t>(std::count(t.begin(), t.end(), x)));
            continue;
        }
        diag.assign(k, x);
        p.push_back(a.apply(op, diag) == x);
    }
    return p;
}

} // namespace detail

/// Bijective homomorphism A → B (its inverse is then a homomorphism too).
inline std::optional<HomWitness> find_isomorphism(const FiniteAlgebra & a, const FiniteAlgebra & b)
{
    require_same_signature(a, b);
    const std::size_t n = a.size();
    if (b.size() != n)
        return std::nullopt;
    std::vector<std::vector<std::size_t>> pa(n), pb(n);
    for (std::size_t x = 0; x < n; ++x) {
        pa[x] = detail::element_profile(a, x);
        pb[x] = detail::element_profile(b, x);
    }
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }
    if (n <= 24) {
        try {
            if (all_subuniverses(a, SubuniverseMethod::ClosureOfUnions, 20'000).size() != all_subuniverses(b, SubuniverseMethod::ClosureOfUnions, 20'000).size())
                return std::nullopt;
        }
        catch (const Error & e) {
            if (e.kind() != ErrorKind::BudgetExceeded)
                throw;
        }
    }
    HomSearch::Options opts;
    opts.injective = true;
    opts.domains.assign(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (pa[x] == pb[y])
                opts.domains[x].set(y);
    return find_hom(a, b, std::move(opts));
}

/// A minimal retract: while some endomorphism misses an element, restrict to
/// the image of the first one found (missed elements tried in ascending order).
inline Subalgebra core_of(const FiniteAlgebra & a)
{
    Subalgebra cur{a, {}};
    for (std::size_t x = 0; x < a.size(); ++x)
        cur.elements.push_back(x);
    while (true) {
        const std::size_t n = cur.algebra.size();
        std::optional<HomWitness> shrink;
        for (std::size_t miss = 0; miss < n && ! shrink; ++miss) {
            HomSearch::Options opts;
            opts.domains.assign(n, Bitset::full(n));
            for (auto & d : opts.domains)
                d.reset(miss);
            shrink = find_hom(cur.algebra, cur.algebra, std::move(opts));
        }
        if (! shrink)
            return cur;
        Bitset image(n);
        for (auto y : shrink->map)
            image.set(y);
        auto sub = subalgebra(cur.algebra, image);
        for (auto & e : sub.elements)
            e = cur.elements[e];
        cur = std::move(sub);
    }
}

/// τ(x, y, z) = x if x ≠ y, else z.
inline std::vector<std::size_t> discriminator_table(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "discriminator needs n >= 1");
    return tabulate(n, 3, [](std::span<const std::size_t> v) { return v[0] != v[1] ? v[0] : v[2]; });
}

} // namespace homlat
