#pragma once

#include <homlat/bitset.hpp>
#include <homlat/error.hpp>
#include <homlat/partition.hpp>
#include <homlat/poset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace homlat {

struct OpSymbol {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const OpSymbol &, const OpSymbol &) = default;
};

class Signature {
public:
    Signature() = default;

    explicit Signature(std::vector<OpSymbol> ops) : ops_(std::move(ops))
    {
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            if (ops_[i].name.empty())
                throw Error(ErrorKind::EmptyOpName, "operation " + std::to_string(i) + " has an empty name");
            for (std::size_t j = 0; j < i; ++j)
                if (ops_[j].name == ops_[i].name)
                    throw Error(ErrorKind::DuplicateOpName, "operation name '" + ops_[i].name + "' is used twice");
        }
    }

    std::size_t size() const noexcept { return ops_.size(); }
    const OpSymbol & operator[](std::size_t i) const { return ops_[i]; }
    const std::vector<OpSymbol> & ops() const noexcept { return ops_; }
    auto begin() const { return ops_.begin(); }
    auto end() const { return ops_.end(); }

    std::optional<std::size_t> find(const std::string & name) const
    {
        for (std::size_t i = 0; i < ops_.size(); ++i)
            if (ops_[i].name == name)
                return i;
        return std::nullopt;
    }

    friend bool operator==(const Signature &, const Signature &) = default;

private:
    std::vector<OpSymbol> ops_;
};

inline std::size_t int_pow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r *= base;
    return r;
}

/// Finite algebra on {0..n-1}. Each operation is a flat row-major table: the
/// value of f(x1..xk) sits at index x1*n^(k-1) + ... + xk.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;

    FiniteAlgebra(std::size_t size, Signature sig, std::vector<std::vector<std::size_t>> tables, std::string name = {}) :
        size_(size), sig_(std::move(sig)), tables_(std::move(tables)), name_(std::move(name))
    {
        if (size_ == 0)
            throw Error(ErrorKind::InvalidArgument, "an algebra needs at least one element");
        if (tables_.size() != sig_.size())
            throw Error(ErrorKind::TableLength, "expected " + std::to_string(sig_.size()) + " tables, got " + std::to_string(tables_.size()));
        for (std::size_t i = 0; i < sig_.size(); ++i) {
            auto expected = int_pow(size_, sig_[i].arity);
            if (tables_[i].size() != expected)
                throw Error(ErrorKind::TableLength, "table of '" + sig_[i].name + "' has length " + std::to_string(tables_[i].size()) + ", expected " + std::to_string(expected));
            for (std::size_t j = 0; j < tables_[i].size(); ++j)
                if (tables_[i][j] >= size_)
                    throw Error(ErrorKind::EntryRange, "table of '" + sig_[i].name + "' has entry " + std::to_string(tables_[i][j]) + " at position " + std::to_string(j));
        }
    }

    std::size_t size() const noexcept { return size_; }
    const Signature & signature() const noexcept { return sig_; }
    std::size_t num_ops() const noexcept { return sig_.size(); }
    std::size_t arity(std::size_t op) const { return sig_[op].arity; }
    const std::vector<std::size_t> & table(std::size_t op) const { return tables_[op]; }
    const std::vector<std::vector<std::size_t>> & tables() const noexcept { return tables_; }
    const std::string & name() const noexcept { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    std::size_t apply(std::size_t op, std::span<const std::size_t> args) const
    {
        std::size_t idx = 0;
        for (auto a : args)
            idx = idx * size_ + a;
        return tables_[op][idx];
    }

    std::size_t apply(std::size_t op, std::initializer_list<std::size_t> args) const
    {
        return apply(op, std::span<const std::size_t>(args.begin(), args.size()));
    }

    std::size_t nullary_value(std::size_t op) const { return tables_[op][0]; }

    /// Decodes a row-major table index into its argument tuple.
    void decode(std::size_t op, std::size_t idx, std::vector<std::size_t> & args) const
    {
        const auto k = sig_[op].arity;
        args.resize(k);
        for (std::size_t i = k; i-- > 0;) {
            args[i] = idx % size_;
            idx /= size_;
        }
    }

    bool has_nullaries() const
    {
        return std::any_of(sig_.begin(), sig_.end(), [](const OpSymbol & s) { return s.arity == 0; });
    }

    friend bool operator==(const FiniteAlgebra & a, const FiniteAlgebra & b)
    {
        return a.size_ == b.size_ && a.sig_ == b.sig_ && a.tables_ == b.tables_;
    }

private:
    std::size_t size_ = 0;
    Signature sig_;
    std::vector<std::vector<std::size_t>> tables_;
    std::string name_;
};

inline FiniteAlgebra make_algebra(std::size_t size, Signature sig, std::vector<std::vector<std::size_t>> tables, std::string name = {})
{
    return FiniteAlgebra(size, std::move(sig), std::move(tables), std::move(name));
}

/// Builds an operation table by evaluating fn on every argument tuple.
template <typename F>
std::vector<std::size_t> tabulate(std::size_t n, std::size_t arity, F && fn)
{
    std::vector<std::size_t> t(int_pow(n, arity));
    std::vector<std::size_t> args(arity, 0);
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        std::size_t r = idx;
        for (std::size_t i = arity; i-- > 0;) {
            args[i] = r % n;
            r /= n;
        }
        t[idx] = fn(std::span<const std::size_t>(args));
    }
    return t;
}

inline void require_same_signature(const FiniteAlgebra & a, const FiniteAlgebra & b)
{
    if (a.signature() != b.signature())
        throw Error(ErrorKind::SignatureMismatch, "algebras have different signatures");
}

/// A × B with (a, b) encoded as a*|B| + b; operations act coordinatewise.
inline FiniteAlgebra direct_product(const FiniteAlgebra & a, const FiniteAlgebra & b)
{
    require_same_signature(a, b);
    const std::size_t nb = b.size(), n = a.size() * nb;
    std::vector<std::vector<std::size_t>> tables;
    std::vector<std::size_t> xa, xb;
    for (std::size_t op = 0; op < a.num_ops(); ++op) {
        auto k = a.arity(op);
        xa.resize(k);
        xb.resize(k);
        tables.push_back(tabulate(n, k, [&](std::span<const std::size_t> args) {
            for (std::size_t i = 0; i < k; ++i) {
                xa[i] = args[i] / nb;
                xb[i] = args[i] % nb;
            }
            return a.apply(op, xa) * nb + b.apply(op, xb);
        }));
    }
    return FiniteAlgebra(n, a.signature(), std::move(tables));
}

/// Product of a nonempty list, associated to the left.
inline FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors)
{
    if (factors.empty())
        throw Error(ErrorKind::InvalidArgument, "empty product");
    FiniteAlgebra p = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
        p = direct_product(p, factors[i]);
    return p;
}

/// The one-element algebra of a signature.
inline FiniteAlgebra trivial_algebra(const Signature & sig)
{
    std::vector<std::vector<std::size_t>> tables;
    tables.assign(sig.size(), {0});
    return FiniteAlgebra(1, sig, std::move(tables));
}

inline bool is_compatible(const FiniteAlgebra & a, const Partition & theta)
{
    std::vector<std::size_t> args;
    for (std::size_t op = 0; op < a.num_ops(); ++op) {
        const auto k = a.arity(op);
        if (k == 0)
            continue;
        // block-tuple -> block of the first image seen
        std::map<std::vector<std::size_t>, std::size_t> image;
        std::vector<std::size_t> key(k);
        const auto & t = a.table(op);
        for (std::size_t idx = 0; idx < t.size(); ++idx) {
            a.decode(op, idx, args);
            for (std::size_t i = 0; i < k; ++i)
                key[i] = theta.block_of(args[i]);
            auto [it, inserted] = image.emplace(key, theta.block_of(t[idx]));
            if (! inserted && it->second != theta.block_of(t[idx]))
                return false;
        }
    }
    return true;
}

/// A/θ on block indices.
inline FiniteAlgebra quotient_algebra(const FiniteAlgebra & a, const Partition & theta)
{
    if (theta.universe_size() != a.size())
        throw Error(ErrorKind::InvalidArgument, "partition is over a different universe");
    if (! is_compatible(a, theta))
        throw Error(ErrorKind::NotCompatible, "partition " + theta.to_string() + " is not a congruence");
    const std::size_t m = theta.num_blocks();
    std::vector<std::size_t> rep(m);
    for (std::size_t x = a.size(); x-- > 0;)
        rep[theta.block_of(x)] = x;
    std::vector<std::vector<std::size_t>> tables;
    std::vector<std::size_t> xs;
    for (std::size_t op = 0; op < a.num_ops(); ++op) {
        auto k = a.arity(op);
        xs.resize(k);
        tables.push_back(tabulate(m, k, [&](std::span<const std::size_t> blocks) {
            for (std::size_t i = 0; i < k; ++i)
                xs[i] = rep[blocks[i]];
            return theta.block_of(a.apply(op, xs));
        }));
    }
    return FiniteAlgebra(m, a.signature(), std::move(tables));
}

namespace detail {

/// Ops whose value is always one of the arguments can never enlarge a set.
inline std::vector<bool> conservative_ops(const FiniteAlgebra & a)
{
    std::vector<bool> out(a.num_ops(), false);
    std::vector<std::size_t> args;
    for (std::size_t op = 0; op < a.num_ops(); ++op) {
        if (a.arity(op) == 0)
            continue;
        bool cons = true;
        const auto & t = a.table(op);
        for (std::size_t idx = 0; cons && idx < t.size(); ++idx) {
            a.decode(op, idx, args);
            cons = std::find(args.begin(), args.end(), t[idx]) != args.end();
        }
        out[op] = cons;
    }
    return out;
}

/// Visits every k-tuple over elems[0..end) with at least one coordinate in
/// elems[from..end).
template <typename F>
void for_each_new_tuple(const std::vector<std::size_t> & elems, std::size_t from, std::size_t end, std::size_t k, F && f)
{
    std::vector<std::size_t> args(k);
    // p = first coordinate drawn from the new range
    for (std::size_t p = 0; p < k; ++p) {
        std::vector<std::size_t> pos(k, 0);
        std::vector<std::size_t> lo(k), hi(k);
        for (std::size_t i = 0; i < k; ++i) {
            lo[i] = i < p ? 0 : (i == p ? from : 0);
            hi[i] = i < p ? from : end;
        }
        bool empty = false;
        for (std::size_t i = 0; i < k; ++i)
            if (lo[i] >= hi[i])
                empty = true;
        if (empty)
            continue;
        for (std::size_t i = 0; i < k; ++i)
            pos[i] = lo[i];
        while (true) {
            for (std::size_t i = 0; i < k; ++i)
                args[i] = elems[pos[i]];
            f(std::span<const std::size_t>(args));
            std::size_t i = k;
            while (i-- > 0) {
                if (++pos[i] < hi[i])
                    break;
                pos[i] = lo[i];
            }
            if (i == static_cast<std::size_t>(-1))
                break;
        }
    }
}

} // namespace detail

/// Reusable closure operator for one algebra.
class SubuniverseCloser {
public:
    explicit SubuniverseCloser(const FiniteAlgebra & a) : a_(a), conservative_(detail::conservative_ops(a)) {}

    Bitset close(const Bitset & seed) const
    {
        Bitset in = seed;
        std::vector<std::size_t> elems = seed.elements();
        for (std::size_t op = 0; op < a_.num_ops(); ++op)
            if (a_.arity(op) == 0) {
                auto v = a_.nullary_value(op);
                if (! in.test(v)) {
                    in.set(v);
                    elems.push_back(v);
                }
            }
        std::size_t done = 0;
        while (done < elems.size()) {
            const std::size_t end = elems.size();
            for (std::size_t op = 0; op < a_.num_ops(); ++op) {
                const auto k = a_.arity(op);
                if (k == 0 || conservative_[op])
                    continue;
                detail::for_each_new_tuple(elems, done, end, k, [&](std::span<const std::size_t> args) {
                    auto v = a_.apply(op, args);
                    if (! in.test(v)) {
                        in.set(v);
                        elems.push_back(v);
                    }
                });
            }
            done = end;
        }
        return in;
    }

    bool is_closed(const Bitset & s) const
    {
        auto elems = s.elements();
        for (std::size_t op = 0; op < a_.num_ops(); ++op) {
            const auto k = a_.arity(op);
            if (k == 0) {
                if (! s.test(a_.nullary_value(op)))
                    return false;
                continue;
            }
            if (conservative_[op])
                continue;
            bool ok = true;
            detail::for_each_new_tuple(elems, 0, elems.size(), k, [&](std::span<const std::size_t> args) {
                if (ok && ! s.test(a_.apply(op, args)))
                    ok = false;
            });
            if (! ok)
                return false;
        }
        return true;
    }

private:
    const FiniteAlgebra & a_;
    std::vector<bool> conservative_;
};

/// Least subuniverse containing seed (and every nullary value).
inline Bitset subuniverse_closure(const FiniteAlgebra & a, const Bitset & seed)
{
    return SubuniverseCloser(a).close(seed);
}

inline bool is_subuniverse(const FiniteAlgebra & a, const Bitset & s)
{
    return SubuniverseCloser(a).is_closed(s);
}

enum class SubuniverseMethod {
    Auto,            ///< subset scan for |A| <= 12, closure of unions above
    SubsetScan,      ///< test all 2^n - 1 non-empty subsets
    ClosureOfUnions, ///< close generators, then unions with one more generator
};

struct Limits {
    std::size_t subuniverses = 100'000;
    std::size_t congruences = 100'000;
};

/// All non-empty subuniverses, ordered by size then lexicographically.
inline std::vector<Bitset> all_subuniverses(const FiniteAlgebra & a, SubuniverseMethod method = SubuniverseMethod::Auto, std::size_t budget = Limits{}.subuniverses)
{
    const std::size_t n = a.size();
    SubuniverseCloser closer(a);
    std::vector<Bitset> out;
    auto over_budget = [&] {
        throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " subuniverses");
    };
    if (method == SubuniverseMethod::Auto)
        method = n <= 12 ? SubuniverseMethod::SubsetScan : SubuniverseMethod::ClosureOfUnions;

    if (method == SubuniverseMethod::SubsetScan) {
        if (n > 30)
            throw Error(ErrorKind::BudgetExceeded, "subset scan over 2^" + std::to_string(n) + " subsets");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Bitset s(n);
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1U)
                    s.set(i);
            if (closer.is_closed(s)) {
                if (out.size() >= budget)
                    over_budget();
                out.push_back(std::move(s));
            }
        }
    }
    else {
        std::unordered_set<Bitset, BitsetHash> seen;
        std::vector<Bitset> queue;
        auto add = [&](Bitset s) {
            if (s.none() || seen.contains(s))
                return;
            if (seen.size() >= budget)
                over_budget();
            seen.insert(s);
            queue.push_back(std::move(s));
        };
        add(closer.close(Bitset(n)));
        for (std::size_t x = 0; x < n; ++x)
            add(closer.close(Bitset::singleton(n, x)));
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (std::size_t x = 0; x < n; ++x) {
                if (queue[qi].test(x))
                    continue;
                Bitset s = queue[qi];
                s.set(x);
                add(closer.close(s));
            }
        }
        out = std::move(queue);
    }
    std::sort(out.begin(), out.end(), [](const Bitset & x, const Bitset & y) {
        auto cx = x.count(), cy = y.count();
        return cx != cy ? cx < cy : lex_less(x, y);
    });
    return out;
}

/// A subalgebra together with the original element behind each new index.
struct Subalgebra {
    FiniteAlgebra algebra;
    std::vector<std::size_t> elements;
};

inline Subalgebra subalgebra(const FiniteAlgebra & a, const Bitset & s)
{
    if (s.none())
        throw Error(ErrorKind::InvalidArgument, "empty subalgebra");
    if (! is_subuniverse(a, s))
        throw Error(ErrorKind::NotClosed, s.to_string() + " is not a subuniverse");
    auto elems = s.elements();
    std::vector<std::size_t> index(a.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        index[elems[i]] = i;
    std::vector<std::vector<std::size_t>> tables;
    std::vector<std::size_t> xs;
    for (std::size_t op = 0; op < a.num_ops(); ++op) {
        auto k = a.arity(op);
        xs.resize(k);
        tables.push_back(tabulate(elems.size(), k, [&](std::span<const std::size_t> args) {
            for (std::size_t i = 0; i < k; ++i)
                xs[i] = elems[args[i]];
            return index[a.apply(op, xs)];
        }));
    }
    return {FiniteAlgebra(elems.size(), a.signature(), std::move(tables)), std::move(elems)};
}

/// Cg(a, b) by pair propagation: each effective merge (x, y) is pushed
/// through every basic translation until nothing new is identified.
inline Partition principal_congruence(const FiniteAlgebra & alg, std::size_t a, std::size_t b)
{
    const std::size_t n = alg.size();
    if (a >= n || b >= n)
        throw Error(ErrorKind::InvalidArgument, "element out of range");
    DisjointSets ds(n);
    std::vector<std::pair<std::size_t, std::size_t>> work;
    if (ds.unite(a, b))
        work.push_back({a, b});
    std::vector<std::size_t> ax, ay;
    while (! work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (std::size_t op = 0; op < alg.num_ops(); ++op) {
            const auto k = alg.arity(op);
            if (k == 0)
                continue;
            const std::size_t others = int_pow(n, k - 1);
            ax.resize(k);
            ay.resize(k);
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t r = 0; r < others; ++r) {
                    std::size_t rest = r;
                    for (std::size_t i = k; i-- > 0;) {
                        if (i == p)
                            continue;
                        ax[i] = ay[i] = rest % n;
                        rest /= n;
                    }
                    ax[p] = x;
                    ay[p] = y;
                    auto u = alg.apply(op, ax), v = alg.apply(op, ay);
                    if (ds.unite(u, v))
                        work.push_back({u, v});
                }
        }
    }
    return Partition::from_sets(ds);
}

struct CongruenceLattice {
    std::vector<Partition> congruences; ///< canonical order: identity first
    Lattice lattice;                    ///< element i is congruences[i]
};

/// Con(A): Δ, every principal congruence, closed under joins; ordered by refinement.
inline CongruenceLattice congruence_lattice(const FiniteAlgebra & a, std::size_t budget = Limits{}.congruences)
{
    const std::size_t n = a.size();
    std::vector<Partition> cons;
    std::map<std::vector<std::size_t>, std::size_t> seen;
    auto add = [&](Partition p) {
        if (seen.contains(p.block_ids()))
            return;
        if (cons.size() >= budget)
            throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " congruences");
        seen.emplace(p.block_ids(), cons.size());
        cons.push_back(std::move(p));
    };
    add(Partition::identity(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            add(principal_congruence(a, x, y));
    // joins of congruences are congruences; close the set
    for (std::size_t i = 0; i < cons.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            add(join(cons[i], cons[j]));
    std::sort(cons.begin(), cons.end(), [](const Partition & x, const Partition & y) { return canonical_less(x, y); });
    std::vector<std::string> names;
    for (auto & c : cons)
        names.push_back(c.to_string());
    Poset p = Poset::from_relation(std::move(names), [&](std::size_t i, std::size_t j) { return cons[i].refines(cons[j]); });
    return {cons, Lattice::from_poset(std::move(p))};
}

/// B₀: the subalgebra generated by the nullary values.
inline Subalgebra zero_subalgebra(const FiniteAlgebra & b)
{
    if (! b.has_nullaries())
        throw Error(ErrorKind::NoNullaries, "algebra has no nullary operations");
    return subalgebra(b, subuniverse_closure(b, Bitset(b.size())));
}

/// A⁺: adds nullaries c0..c(n-1) naming every element.
inline FiniteAlgebra name_all_elements(const FiniteAlgebra & a)
{
    auto ops = a.signature().ops();
    auto tables = a.tables();
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto nm = "c" + std::to_string(i);
        if (a.signature().find(nm))
            throw Error(ErrorKind::NameClash, "signature already contains '" + nm + "'");
        ops.push_back({nm, 0});
        tables.push_back({i});
    }
    return FiniteAlgebra(a.size(), Signature(std::move(ops)), std::move(tables), a.name());
}

/// The monolith (least non-identity congruence) when A is subdirectly irreducible.
inline std::optional<Partition> is_subdirectly_irreducible(const FiniteAlgebra & a, std::size_t budget = Limits{}.congruences)
{
    auto con = congruence_lattice(a, budget);
    if (con.congruences.size() < 2)
        return std::nullopt;
    Partition m = Partition::total(a.size());
    for (std::size_t i = 1; i < con.congruences.size(); ++i)
        m = meet(m, con.congruences[i]);
    if (m.is_identity())
        return std::nullopt;
    return m;
}

} // namespace homlat
