#include "gjcluster/avoidance.hpp"

#include <deque>
#include <sstream>

namespace gjc {

namespace {

constexpr std::uint64_t kAllWordsLimit = 10'000'000;

// Classic multi-pattern trie with failure links. emit[v] counts the patterns
// ending at v, accumulated along the failure chain.
struct PatternTrie {
    std::vector<std::vector<std::uint32_t>> next;   // dense goto function
    std::vector<std::uint32_t> fail;
    std::vector<std::uint32_t> emit;

    PatternTrie(const ForbiddenSet& f, std::size_t alphabet_size) {
        next.emplace_back(alphabet_size, 0u);
        fail.push_back(0);
        emit.push_back(0);
        for (const auto& pat : f.words()) {
            std::uint32_t v = 0;
            for (Letter a : pat.letters()) {
                if (next[v][a] == 0) {
                    next[v][a] = static_cast<std::uint32_t>(next.size());
                    next.emplace_back(alphabet_size, 0u);
                    fail.push_back(0);
                    emit.push_back(0);
                }
                v = next[v][a];
            }
            ++emit[v];
        }
        // BFS converts the trie into a complete automaton and resolves fails.
        std::deque<std::uint32_t> queue;
        for (std::size_t a = 0; a < alphabet_size; ++a)
            if (next[0][a] != 0) queue.push_back(next[0][a]);
        while (!queue.empty()) {
            std::uint32_t v = queue.front();
            queue.pop_front();
            emit[v] += emit[fail[v]];
            for (std::size_t a = 0; a < alphabet_size; ++a) {
                std::uint32_t u = next[v][a];
                if (u != 0) {
                    fail[u] = next[fail[v]][a];
                    queue.push_back(u);
                } else {
                    next[v][a] = next[fail[v]][a];
                }
            }
        }
    }
};

}  // namespace

AvoidanceAutomaton::AvoidanceAutomaton(const ForbiddenSet& f) : alphabet_(f.alphabet()) {
    const ForbiddenSet reduced = f.reduced() ? f : f.reduce();
    PatternTrie trie(reduced, alphabet_->size());
    const auto n_states = static_cast<std::uint32_t>(trie.next.size());
    dead_ = n_states;
    transitions_ = std::move(trie.next);
    transitions_.emplace_back(alphabet_->size(), dead_);  // dead state loops
    for (std::uint32_t v = 0; v < n_states; ++v)
        for (std::size_t a = 0; a < alphabet_->size(); ++a)
            if (trie.emit[transitions_[v][a]] > 0) transitions_[v][a] = dead_;
}

bool AvoidanceAutomaton::accepts(const Word& w) const {
    require_same_alphabet(alphabet_, w.alphabet(), "automaton run");
    std::uint32_t state = initial_state();
    for (Letter a : w.letters()) {
        state = next(state, a);
        if (is_dead(state)) return false;
    }
    return true;
}

std::vector<BigInt> count_avoiding(const ForbiddenSet& f, std::size_t max_len) {
    AvoidanceAutomaton m(f);
    std::vector<BigInt> counts;
    counts.reserve(max_len + 1);
    std::vector<BigInt> state_counts(m.state_count(), BigInt(0));
    state_counts[m.initial_state()] = 1;
    for (std::size_t n = 0;; ++n) {
        BigInt total(0);
        for (std::uint32_t s = 0; s < m.state_count(); ++s)
            if (!m.is_dead(s)) total += state_counts[s];
        counts.push_back(std::move(total));
        if (n == max_len) break;
        std::vector<BigInt> next_counts(m.state_count(), BigInt(0));
        for (std::uint32_t s = 0; s < m.state_count(); ++s) {
            if (m.is_dead(s) || state_counts[s] == 0) continue;
            for (Letter a = 0; a < m.alphabet()->size(); ++a)
                next_counts[m.next(s, a)] += state_counts[s];
        }
        state_counts = std::move(next_counts);
    }
    return counts;
}

NcSeries avoiding_series(const ForbiddenSet& f, std::size_t max_len) {
    AvoidanceAutomaton m(f);
    NcSeries out(f.alphabet(), max_len);
    std::uint64_t produced = 0;
    std::vector<Letter> letters;
    auto walk = [&](auto&& self, std::uint32_t state) -> void {
        if (++produced > kAllWordsLimit)
            throw LimitError("avoiding-word enumeration exceeded " +
                             std::to_string(kAllWordsLimit) + " words");
        out.add_to(Word(f.alphabet(), letters), BigInt(1));
        if (letters.size() == max_len) return;
        for (Letter a = 0; a < f.alphabet()->size(); ++a) {
            std::uint32_t s = m.next(state, a);
            if (m.is_dead(s)) continue;
            letters.push_back(a);
            self(self, s);
            letters.pop_back();
        }
    };
    walk(walk, m.initial_state());
    return out;
}

void require_enumerable(const AlphabetPtr& alphabet, std::size_t max_len) {
    std::uint64_t total = 1, power = 1;
    for (std::size_t n = 1; n <= max_len; ++n) {
        power *= alphabet->size();
        total += power;
        if (total > kAllWordsLimit)
            throw LimitError("enumerating all words of length <= " + std::to_string(max_len) +
                             " over " + std::to_string(alphabet->size()) +
                             " letters exceeds the guard of " + std::to_string(kAllWordsLimit));
    }
}

NcPolySeries occurrence_gf(const ForbiddenSet& f, std::size_t max_len) {
    require_enumerable(f.alphabet(), max_len);
    PatternTrie trie(f, f.alphabet()->size());  // full set: every occurrence counts
    NcPolySeries out(f.alphabet(), max_len);
    std::vector<Letter> letters;
    auto walk = [&](auto&& self, std::uint32_t state, std::size_t occ) -> void {
        out.add_to(Word(f.alphabet(), letters), IntPoly::monomial(1, occ));
        if (letters.size() == max_len) return;
        for (Letter a = 0; a < f.alphabet()->size(); ++a) {
            std::uint32_t s = trie.next[state][a];
            letters.push_back(a);
            self(self, s, occ + trie.emit[s]);
            letters.pop_back();
        }
    };
    walk(walk, 0, 0);
    return out;
}

namespace {

IdentityCheck compare_series(std::string name, const auto& lhs, const auto& rhs) {
    IdentityCheck check;
    check.name = std::move(name);
    auto bad = lhs.first_mismatch(rhs);
    check.pass = !bad.has_value();
    if (bad) {
        check.first_mismatch = *bad;
        std::ostringstream detail;
        detail << "first differing word \"" << bad->to_string() << "\"";
        check.detail = detail.str();
    }
    return check;
}

}  // namespace

ClusterTheoremReport verify_cluster_theorem(const ForbiddenSet& f, std::size_t max_len) {
    ClusterTheoremReport report;
    const NcPolySeries cgf = cluster_gf(f, max_len);

    // Identity in t: reweighting each word by (1+t)^occurrences equals the
    // inverse of (1 - letters - cluster gf).
    {
        NcPolySeries lhs(f.alphabet(), max_len);
        const IntPoly t_plus_1 = IntPoly::from_coeffs({BigInt(1), BigInt(1)});
        const NcPolySeries occ_gf = occurrence_gf(f, max_len);
        for (const auto& [w, p] : occ_gf.terms())
            lhs.add_to(w, p.compose(t_plus_1));
        NcPolySeries rhs = (one_minus_letters_poly(f.alphabet(), max_len) -
                            cgf)
                               .invert();
        report.occurrence_weight = compare_series("occurrence-weight identity", lhs, rhs);
    }

    // At t = -1 the same inverse produces exactly the avoiding words.
    {
        NcSeries lhs = avoiding_series(f, max_len);
        NcSeries rhs =
            (one_minus_letters(f.alphabet(), max_len) - eval_t(cgf, BigInt(-1))).invert();
        report.avoiding_words = compare_series("avoiding-words identity", lhs, rhs);
    }
    return report;
}

}  // namespace gjc
