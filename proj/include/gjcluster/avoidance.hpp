#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gjcluster/clusters.hpp"
#include "gjcluster/series.hpp"
#include "gjcluster/words.hpp"

namespace gjc {

// Deterministic complete automaton over the alphabet accepting exactly the
// words with no forbidden subword. Built as a prefix trie of the reduced
// forbidden set with failure links; every transition that would complete a
// forbidden word is redirected into a single absorbing dead state.
class AvoidanceAutomaton {
public:
    explicit AvoidanceAutomaton(const ForbiddenSet& f);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return transitions_.size(); }
    std::uint32_t initial_state() const noexcept { return 0; }
    std::uint32_t dead_state() const noexcept { return dead_; }
    bool is_dead(std::uint32_t state) const noexcept { return state == dead_; }
    std::uint32_t next(std::uint32_t state, Letter a) const {
        return transitions_[state][a];
    }
    bool accepts(const Word& w) const;

private:
    AlphabetPtr alphabet_;
    std::vector<std::vector<std::uint32_t>> transitions_;
    std::uint32_t dead_ = 0;
};

// c_0..c_max_len, where c_n is the number of length-n words avoiding f.
std::vector<BigInt> count_avoiding(const ForbiddenSet& f, std::size_t max_len);

// Sum of all avoiding words of length <= max_len, coefficient 1 each.
NcSeries avoiding_series(const ForbiddenSet& f, std::size_t max_len);

// Sum over all words of t^(number of forbidden occurrences) * word. This
// materializes every word of length <= max_len and is guarded accordingly.
NcPolySeries occurrence_gf(const ForbiddenSet& f, std::size_t max_len);

// Guard shared by the paths that enumerate all |A|^len words.
void require_enumerable(const AlphabetPtr& alphabet, std::size_t max_len);

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::optional<Word> first_mismatch;
    std::string detail;
};

struct ClusterTheoremReport {
    IdentityCheck occurrence_weight;  // occurrence gf at t+1 vs inverted cluster form
    IdentityCheck avoiding_words;     // avoiding series vs inverted form at t = -1
    bool pass() const { return occurrence_weight.pass && avoiding_words.pass; }
};

// Checks both cluster-theorem identities coefficient-by-coefficient (the
// first as polynomials in t) up to max_len. Failures are reported, never
// thrown.
ClusterTheoremReport verify_cluster_theorem(const ForbiddenSet& f, std::size_t max_len);

}  // namespace gjc
