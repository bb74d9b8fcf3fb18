#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gjcluster/intpoly.hpp"
#include "gjcluster/words.hpp"

namespace gjc {

// Coefficient-ring hooks shared by the two series instantiations.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<BigInt> {
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
    static bool is_zero(const BigInt& c) { return c == 0; }
    // Units of the exact integers are +1 and -1.
    static std::optional<BigInt> unit_inverse(const BigInt& c) {
        if (c == 1 || c == -1) return c;
        return std::nullopt;
    }
};

template <>
struct CoeffOps<IntPoly> {
    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(1); }
    static bool is_zero(const IntPoly& c) { return c.is_zero(); }
    // Units of Z[t] are the constant polynomials +1 and -1.
    static std::optional<IntPoly> unit_inverse(const IntPoly& c) {
        if (c.degree() == 0 && (c.coeff(0) == 1 || c.coeff(0) == -1)) return c;
        return std::nullopt;
    }
};

// Noncommutative formal power series truncated by word length: a sparse map
// from words of length <= max_len() to nonzero coefficients, iterated in
// canonical word order. Immutable in use: all arithmetic returns new values.
template <class C>
class Series {
public:
    using Ops = CoeffOps<C>;
    using TermMap = std::map<Word, C>;

    Series(AlphabetPtr alphabet, std::size_t max_len)
        : alphabet_(std::move(alphabet)), max_len_(max_len) {
        if (!alphabet_) throw std::invalid_argument("series requires an alphabet");
    }

    static Series constant(AlphabetPtr alphabet, std::size_t max_len, C value) {
        Series s(std::move(alphabet), max_len);
        s.add_to(Word(s.alphabet_), std::move(value));
        return s;
    }

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t max_len() const noexcept { return max_len_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    const C& coeff(const Word& w) const {
        static const C zero = Ops::zero();
        auto it = terms_.find(w);
        return it == terms_.end() ? zero : it->second;
    }

    // Accumulates c onto the coefficient of w, dropping the entry when it
    // cancels. Words longer than the truncation are ignored.
    void add_to(const Word& w, C c) {
        require_same_alphabet(alphabet_, w.alphabet(), "series term");
        if (w.size() > max_len_ || Ops::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(w, std::move(c));
        if (!inserted) {
            it->second += c;
            if (Ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    Series truncated(std::size_t new_len) const {
        Series out(alphabet_, new_len);
        for (const auto& [w, c] : terms_) {
            if (w.size() > new_len) break;  // canonical order is graded
            out.terms_.emplace(w, c);
        }
        return out;
    }

    friend Series operator+(const Series& a, const Series& b) {
        require_same_alphabet(a.alphabet_, b.alphabet_, "series add");
        Series out = a.truncated(std::min(a.max_len_, b.max_len_));
        for (const auto& [w, c] : b.terms_) out.add_to(w, c);
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) { return a + b.scaled(negated_one()); }

    Series scaled(const C& factor) const {
        Series out(alphabet_, max_len_);
        for (const auto& [w, c] : terms_) out.add_to(w, c * factor);
        return out;
    }

    // Cauchy product by word concatenation, truncated to the smaller bound.
    friend Series operator*(const Series& a, const Series& b) {
        require_same_alphabet(a.alphabet_, b.alphabet_, "series mul");
        const std::size_t bound = std::min(a.max_len_, b.max_len_);
        Series out(a.alphabet_, bound);
        for (const auto& [p, cp] : a.terms_) {
            if (p.size() > bound) break;
            for (const auto& [q, cq] : b.terms_) {
                if (p.size() + q.size() > bound) break;
                out.add_to(concat(p, q), cp * cq);
            }
        }
        return out;
    }

    // Two-sided inverse up to truncation. Requires the empty-word coefficient
    // to be a unit of the coefficient ring; throws std::invalid_argument
    // otherwise.
    Series invert() const {
        const Word empty(alphabet_);
        auto inv = Ops::unit_inverse(coeff(empty));
        if (!inv)
            throw std::invalid_argument(
                "series is not invertible: constant term must be +1 or -1");
        const C e = *inv;

        // terms of the inverse bucketed by length, built shortest-first
        std::vector<std::vector<std::pair<Word, C>>> built(max_len_ + 1);
        built[0].emplace_back(empty, e);
        for (std::size_t n = 1; n <= max_len_; ++n) {
            std::map<Word, C> acc;
            for (const auto& [p, cp] : terms_) {
                const std::size_t lp = p.size();
                if (lp == 0) continue;
                if (lp > n) break;
                for (const auto& [q, cq] : built[n - lp]) {
                    C prod = cp * cq;
                    if (Ops::is_zero(prod)) continue;
                    Word w = concat(p, q);
                    auto [it, inserted] = acc.try_emplace(std::move(w), std::move(prod));
                    if (!inserted) it->second += prod;
                }
            }
            for (auto& [w, c] : acc) {
                C value = Ops::zero();
                value -= c * e;
                if (!Ops::is_zero(value)) built[n].emplace_back(w, std::move(value));
            }
        }

        Series out(alphabet_, max_len_);
        for (auto& bucket : built)
            for (auto& [w, c] : bucket) out.terms_.emplace(std::move(w), std::move(c));
        return out;
    }

    // Equality at the common truncation.
    bool operator==(const Series& other) const {
        return same_alphabet(alphabet_, other.alphabet_) && !first_mismatch(other).has_value();
    }

    // First word (canonical order) whose coefficients differ at the common
    // truncation, or nullopt when equal.
    std::optional<Word> first_mismatch(const Series& other) const {
        const std::size_t bound = std::min(max_len_, other.max_len_);
        auto it = terms_.begin();
        auto jt = other.terms_.begin();
        const auto done = [&](auto iter, const auto& map) {
            return iter == map.end() || iter->first.size() > bound;
        };
        while (!done(it, terms_) || !done(jt, other.terms_)) {
            if (done(it, terms_)) return jt->first;
            if (done(jt, other.terms_)) return it->first;
            if (it->first < jt->first) return it->first;
            if (jt->first < it->first) return jt->first;
            if (!(it->second == jt->second)) return it->first;
            ++it;
            ++jt;
        }
        return std::nullopt;
    }

private:
    static C negated_one() {
        C v = Ops::zero();
        v -= Ops::one();
        return v;
    }

    AlphabetPtr alphabet_;
    std::size_t max_len_;
    TermMap terms_;
};

using NcSeries = Series<BigInt>;
using NcPolySeries = Series<IntPoly>;

// Coefficient-wise polynomial evaluation at an exact integer point.
NcSeries eval_t(const NcPolySeries& s, const BigInt& t0);

// 1 - (sum of all letters), the standard inversion base.
NcSeries one_minus_letters(const AlphabetPtr& alphabet, std::size_t max_len);
NcPolySeries one_minus_letters_poly(const AlphabetPtr& alphabet, std::size_t max_len);

// Lifts an integer series into Z[t] coefficients.
NcPolySeries to_poly_series(const NcSeries& s);

}  // namespace gjc
