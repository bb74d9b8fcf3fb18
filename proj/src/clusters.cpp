#include "gjcluster/clusters.hpp"

#include <algorithm>

namespace gjc {

namespace {

constexpr std::size_t kClusterEnumLimit = 1u << 22;

void validate_mark(const Word& w, const ForbiddenSet& f, const Occurrence& m) {
    if (m.pattern_index >= f.size())
        throw std::invalid_argument("mark pattern index out of range");
    const Word& pat = f.word(m.pattern_index);
    if (m.span.pattern_len != pat.size())
        throw std::invalid_argument("mark span length does not match its pattern");
    if (m.span.start < 1 || m.span.end() > w.size())
        throw std::invalid_argument("mark span exceeds the host word");
    for (std::size_t i = 0; i < pat.size(); ++i)
        if (w[m.span.start - 1 + i] != pat[i])
            throw std::invalid_argument("marked subword differs from its pattern");
}

// Blocked-cut table for a word of length n: cuts 1..n-1, index 0 unused.
std::vector<bool> blocked_cuts(std::size_t n, const std::vector<Occurrence>& marks) {
    std::vector<bool> blocked(n == 0 ? 1 : n, false);
    for (const auto& m : marks)
        for (std::uint32_t c = m.span.cut_begin(); c < m.span.cut_end(); ++c)
            blocked[c] = true;
    return blocked;
}

}  // namespace

MarkedWord::MarkedWord(Word word, ForbiddenSet forbidden, std::vector<Occurrence> marks)
    : word_(std::move(word)), forbidden_(std::move(forbidden)), marks_(std::move(marks)) {
    require_same_alphabet(word_.alphabet(), forbidden_.alphabet(), "marked word");
    std::sort(marks_.begin(), marks_.end());
    marks_.erase(std::unique(marks_.begin(), marks_.end()), marks_.end());
    for (const auto& m : marks_) validate_mark(word_, forbidden_, m);
}

MarkedWord concat(const MarkedWord& u, const MarkedWord& v) {
    const auto shift = static_cast<std::uint32_t>(u.word().size());
    std::vector<Occurrence> marks = u.marks();
    for (const auto& m : v.marks())
        marks.push_back(Occurrence{Span{m.span.start + shift, m.span.pattern_len}, m.pattern_index});
    return MarkedWord(concat(u.word(), v.word()), u.forbidden(), std::move(marks));
}

bool is_cluster(const MarkedWord& mw) {
    const std::size_t n = mw.word().size();
    if (n < 2) return false;
    auto blocked = blocked_cuts(n, mw.marks());
    for (std::size_t c = 1; c < n; ++c)
        if (!blocked[c]) return false;
    return true;
}

std::vector<MarkedWord> factor_marked_word(const MarkedWord& mw) {
    const std::size_t n = mw.word().size();
    std::vector<MarkedWord> segments;
    if (n == 0) return segments;
    auto blocked = blocked_cuts(n, mw.marks());
    std::size_t seg_start = 1;  // 1-based positionof the current segment
    for (std::size_t cut = 1; cut <= n; ++cut) {
        const bool split_here = cut == n || !blocked[cut];
        if (!split_here) continue;
        const std::size_t seg_len = cut - seg_start + 1;
        std::vector<Occurrence> seg_marks;
        for (const auto& m : mw.marks())
            if (m.span.start >= seg_start && m.span.end() <= cut)
                seg_marks.push_back(Occurrence{
                    Span{m.span.start - static_cast<std::uint32_t>(seg_start) + 1,
                         m.span.pattern_len},
                    m.pattern_index});
        segments.emplace_back(mw.word().subword(seg_start - 1, seg_len), mw.forbidden(),
                              std::move(seg_marks));
        seg_start = cut + 1;
    }
    return segments;
}

std::vector<std::vector<Occurrence>> enumerate_clusters(const Word& w, const ForbiddenSet& f) {
    std::vector<std::vector<Occurrence>> found;
    const std::size_t n = w.size();
    if (n < 2) return found;
    const auto occ = occurrences(w, f);
    if (occ.empty()) return found;

    // Depth-first over the occurrence list in sorted order. Any cluster's
    // sorted mark set has gapless prefixes, so it suffices to track the
    // blocked-cut frontier: the union of chosen cut ranges is always [1, x).
    std::vector<Occurrence> chosen;
    auto recurse = [&](auto&& self, std::size_t k, std::uint32_t x) -> void {
        if (k == occ.size()) {
            if (!chosen.empty() && x == n) found.push_back(chosen);
            return;
        }
        const auto& o = occ[k];
        // Once an occurrence starts past the frontier, the cut at x can
        // never be blocked (later starts only grow), so the branch is dead.
        if (!chosen.empty() && o.span.cut_begin() > x) return;
        self(self, k + 1, x);  // skip
        if (chosen.empty() ? o.span.cut_begin() == 1 : o.span.cut_begin() <= x) {
            chosen.push_back(o);
            self(self, k + 1, std::max<std::uint32_t>(x, o.span.cut_end()));
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, 0);
    std::sort(found.begin(), found.end());
    return found;
}

bool is_cluster_word(const Word& w, const ForbiddenSet& f) {
    const std::size_t n = w.size();
    if (n < 2) return false;
    const auto occ = occurrences(w, f);
    if (occ.empty()) return false;
    auto blocked = blocked_cuts(n, occ);
    for (std::size_t c = 1; c < n; ++c)
        if (!blocked[c]) return false;
    return true;
}

namespace {

// Chain of occurrences with strictly increasing starts and ends covering all
// cuts of w, or nullopt when some cut is exposed. Requires f reduced.
std::optional<std::vector<Occurrence>> reduced_chain(const Word& w, const ForbiddenSet& f) {
    const auto occ = occurrences(w, f);
    if (occ.empty() || occ.front().span.cut_begin() != 1) return std::nullopt;
    std::uint32_t x = 0;
    for (const auto& o : occ) {
        if (o.span.cut_begin() > x && x != 0) return std::nullopt;
        x = std::max(x, o.span.cut_end());
    }
    if (x != w.size()) return std::nullopt;
    return occ;
}

IntPoly recurrence_polynomial(const std::vector<Occurrence>& occ,
                              std::vector<std::uint32_t>* r_out,
                              std::vector<IntPoly>* p_out) {
    const std::size_t m = occ.size();
    std::vector<IntPoly> p(m);
    p[0] = IntPoly::t();
    std::vector<std::uint32_t> r;
    r.reserve(m > 0 ? m - 1 : 0);
    std::size_t rk = 1;  // 1-based; weakly increasing because ends increase
    for (std::size_t k = 2; k <= m; ++k) {
        while (occ[rk - 1].span.cut_end() < occ[k - 1].span.cut_begin()) ++rk;
        r.push_back(static_cast<std::uint32_t>(rk));
        IntPoly sum;
        for (std::size_t l = rk; l <= k - 1; ++l) sum += p[l - 1];
        p[k - 1] = IntPoly::t() * sum;
    }
    IntPoly result = p[m - 1];
    if (r_out) *r_out = std::move(r);
    if (p_out) *p_out = std::move(p);
    return result;
}

}  // namespace

IntPoly cluster_polynomial(const Word& w, const ForbiddenSet& f, ClusterPolyMethod method) {
    if (method == ClusterPolyMethod::subset) {
        IntPoly sum;
        for (const auto& marks : enumerate_clusters(w, f))
            sum += IntPoly::monomial(1, marks.size());
        return sum;
    }
    if (!f.reduced())
        throw std::invalid_argument(
            "recurrence method requires a reduced forbidden set");
    auto chain = reduced_chain(w, f);
    if (!chain || w.size() < 2) return IntPoly();
    return recurrence_polynomial(*chain, nullptr, nullptr);
}

RecurrenceTrace recurrence_trace(const Word& w, const ForbiddenSet& f) {
    if (!f.reduced())
        throw std::invalid_argument("recurrence trace requires a reduced forbidden set");
    auto chain = reduced_chain(w, f);
    if (!chain || w.size() < 2)
        throw std::invalid_argument("\"" + w.to_string() + "\" is not a cluster word");
    RecurrenceTrace trace;
    trace.spans = *chain;
    recurrence_polynomial(trace.spans, &trace.r, &trace.p);
    return trace;
}

NcPolySeries cluster_gf(const ForbiddenSet& f, std::size_t max_len) {
    NcPolySeries out(f.alphabet(), max_len);
    std::size_t emitted = 0;

    // Each state is itself a cluster: a word equal to the union of its marks'
    // letter ranges, every cut blocked. Extending by the next mark in sorted
    // order generates every cluster exactly once.
    auto extend = [&](auto&& self, const Word& w, const Occurrence& last,
                      std::size_t mark_count) -> void {
        if (++emitted > kClusterEnumLimit)
            throw LimitError("cluster enumeration exceeded the guard of " +
                             std::to_string(kClusterEnumLimit) + " clusters");
        out.add_to(w, IntPoly::monomial(1, mark_count));
        const auto n = static_cast<std::uint32_t>(w.size());
        for (std::uint32_t pi = 0; pi < f.size(); ++pi) {
            const Word& pat = f.word(pi);
            const auto plen = static_cast<std::uint32_t>(pat.size());
            for (std::uint32_t s = last.span.start; s <= n; ++s) {
                Occurrence cand{Span{s, plen}, pi};
                if (!(last < cand)) continue;
                const std::uint32_t new_len = std::max(n, cand.span.end());
                if (new_len > max_len) continue;
                // overlapping letters must agree with the existing word
                bool match = true;
                const std::uint32_t overlap = std::min(n, cand.span.end());
                for (std::uint32_t pos = s; pos <= overlap && match; ++pos)
                    match = w[pos - 1] == pat[pos - s];
                if (!match) continue;
                Word grown = w;
                for (std::uint32_t pos = n + 1; pos <= cand.span.end(); ++pos)
                    grown = grown.append(pat[pos - s]);
                self(self, grown, cand, mark_count + 1);
            }
        }
    };

    for (std::uint32_t pi = 0; pi < f.size(); ++pi) {
        const Word& pat = f.word(pi);
        if (pat.size() > max_len) continue;
        extend(extend, pat, Occurrence{Span{1, static_cast<std::uint32_t>(pat.size())}, pi}, 1);
    }
    return out;
}

NcPolySeries cluster_gf_by_scan(const ForbiddenSet& f, std::size_t max_len) {
    NcPolySeries out(f.alphabet(), max_len);
    const AlphabetPtr& alpha = f.alphabet();
    // iterate all words of each length via an odometer over letter indices
    for (std::size_t n = 2; n <= max_len; ++n) {
        std::vector<Letter> letters(n, 0);
        while (true) {
            Word w(alpha, letters);
            IntPoly p = cluster_polynomial(w, f, ClusterPolyMethod::subset);
            if (!p.is_zero()) out.add_to(w, std::move(p));
            std::size_t pos = n;
            while (pos > 0) {
                if (++letters[pos - 1] < alpha->size()) break;
                letters[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return out;
}

}  // namespace gjc
