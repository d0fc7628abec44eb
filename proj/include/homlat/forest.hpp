#pragma once

#include <homlat/error.hpp>
#include <homlat/poset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homlat {

/// A covering chain a₁ ≺ a₂ ≺ … ≺ a_k of a base poset ending at a maximal
/// element, stored as base indices.
struct Word {
    std::vector<std::size_t> letters;

    std::size_t first() const { return letters.front(); }
    std::size_t length() const noexcept { return letters.size(); }

    /// True when this word is a final segment of w, i.e. w <= this.
    bool is_suffix_of(const Word & w) const
    {
        return letters.size() <= w.letters.size() && std::equal(letters.rbegin(), letters.rend(), w.letters.rbegin());
    }

    Word prepend(std::size_t a) const
    {
        Word w;
        w.letters.reserve(letters.size() + 1);
        w.letters.push_back(a);
        w.letters.insert(w.letters.end(), letters.begin(), letters.end());
        return w;
    }

    /// x^↑: the word without its first letter.
    Word tail() const { return Word{{letters.begin() + 1, letters.end()}}; }

    std::string label(const Poset & base, const std::string & sep = ".") const
    {
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i)
                s += sep;
            s += base.name(letters[i]);
        }
        return s;
    }

    friend auto operator<=>(const Word &, const Word &) = default;
    friend bool operator==(const Word &, const Word &) = default;
};

/// The covering forest of a poset: all covering chains reaching a maximal
/// element, ordered by w <= v iff v is a final segment of w, with
/// φ(a₁…a_k) = a₁.
class CoveringForest {
public:
    const Poset & base() const noexcept { return base_; }
    const std::vector<Word> & words() const noexcept { return words_; }
    const Word & word(std::size_t i) const { return words_[i]; }
    const Poset & order() const noexcept { return order_; }
    std::size_t size() const noexcept { return words_.size(); }
    std::size_t phi(std::size_t i) const { return phi_[i]; }
    const std::vector<std::size_t> & phi_map() const noexcept { return phi_; }

    std::optional<std::size_t> index_of(const Word & w) const
    {
        auto it = index_.find(w);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// ψ_x(a): the unique lower cover of word x whose first letter is a,
    /// defined for a ≺ φ(x) in the base.
    std::size_t psi(std::size_t x, std::size_t a) const
    {
        auto i = index_of(words_[x].prepend(a));
        if (! i)
            throw Error(ErrorKind::InvalidArgument, "psi: " + base_.name(a) + " is not a lower cover of " + base_.name(phi_[x]));
        return *i;
    }

    /// Word indices of ↓x (all words having word x as a final segment).
    std::vector<std::size_t> down(std::size_t x) const { return order_.down(x).elements(); }

    /// μ: ↓u → ↓v, su ↦ sv, for φ(u) = φ(v).
    std::vector<std::pair<std::size_t, std::size_t>> mu(std::size_t u, std::size_t v) const
    {
        if (phi_[u] != phi_[v])
            throw Error(ErrorKind::InvalidArgument, "mu needs phi(u) = phi(v)");
        std::vector<std::pair<std::size_t, std::size_t>> out;
        const auto & wu = words_[u].letters;
        for (auto x : down(u)) {
            const auto & w = words_[x].letters;
            Word image{{w.begin(), w.end() - static_cast<std::ptrdiff_t>(wu.size())}};
            image.letters.insert(image.letters.end(), words_[v].letters.begin(), words_[v].letters.end());
            auto j = index_of(image);
            if (! j)
                throw Error(ErrorKind::InvalidArgument, "mu: image word missing from forest");
            out.push_back({x, *j});
        }
        return out;
    }

    friend CoveringForest covering_forest(const Poset & p, std::size_t budget);

private:
    Poset base_;
    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
    Poset order_;
    std::vector<std::size_t> phi_;
};

/// Words are sorted lexicographically by index sequence.
inline CoveringForest covering_forest(const Poset & p, std::size_t budget = 1'000'000)
{
    CoveringForest f;
    f.base_ = p;
    std::vector<Word> stack;
    for (auto m : p.maximal())
        stack.push_back(Word{{m}});
    while (! stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        for (auto c : p.lower_covers(w.first()))
            stack.push_back(w.prepend(c));
        if (f.words_.size() >= budget)
            throw Error(ErrorKind::BudgetExceeded, "covering forest exceeds " + std::to_string(budget) + " words");
        f.words_.push_back(std::move(w));
    }
    std::sort(f.words_.begin(), f.words_.end());
    for (std::size_t i = 0; i < f.words_.size(); ++i)
        f.index_.emplace(f.words_[i], i);
    std::vector<std::string> names;
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < f.words_.size(); ++i) {
        names.push_back(f.words_[i].label(p));
        f.phi_.push_back(f.words_[i].first());
        if (f.words_[i].length() > 1)
            covers.push_back({i, f.index_.at(f.words_[i].tail())});
    }
    f.order_ = Poset::from_covers(std::move(names), std::move(covers));
    return f;
}

/// γ restricts to a bijection Max(A) → Max(B) and N_a → N_γ(a) for every a.
inline bool is_covering_map(std::span<const std::size_t> gamma, const Poset & a, const Poset & b)
{
    if (gamma.size() != a.size())
        return false;
    for (auto y : gamma)
        if (y >= b.size())
            return false;
    auto bijective_onto = [&](const std::vector<std::size_t> & from, std::vector<std::size_t> to) {
        std::vector<std::size_t> img;
        for (auto x : from)
            img.push_back(gamma[x]);
        std::sort(img.begin(), img.end());
        std::sort(to.begin(), to.end());
        return img == to;
    };
    if (! bijective_onto(a.maximal(), b.maximal()))
        return false;
    for (std::size_t x = 0; x < a.size(); ++x)
        if (! bijective_onto(a.lower_covers(x), b.lower_covers(gamma[x])))
            return false;
    return true;
}

/// Order-preserving α along which every comparability b₁ <= b₂ lifts.
inline bool is_quotient_map(std::span<const std::size_t> alpha, const Poset & a, const Poset & b)
{
    if (alpha.size() != a.size())
        throw Error(ErrorKind::InvalidArgument, "map is not total on the domain");
    for (auto y : alpha)
        if (y >= b.size())
            throw Error(ErrorKind::InvalidArgument, "map leaves the codomain");
    for (auto [x, y] : a.covers())
        if (! b.leq(alpha[x], alpha[y]))
            throw Error(ErrorKind::NotOrderPreserving, a.name(x) + " <= " + a.name(y) + " is not preserved");
    const std::size_t n = b.size();
    std::vector<Bitset> lifted(n, Bitset(n));
    for (std::size_t x = 0; x < a.size(); ++x)
        a.up(x).for_each([&](std::size_t y) { lifted[alpha[x]].set(alpha[y]); });
    for (std::size_t b1 = 0; b1 < n; ++b1)
        if (! b.up(b1).is_subset_of(lifted[b1]))
            return false;
    return true;
}

} // namespace homlat
