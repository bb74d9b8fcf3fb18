#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gjcluster/base.hpp"

namespace gjc {

using Letter = std::uint32_t;

// Finite ordered alphabet of distinct letter tokens. The declaration order is
// canonical: words compare by length, then lexicographically by letter index.
//
// Tokens are arbitrary nonempty strings except "1" (reserved for printing the
// empty word) and strings containing '.', ',', '^' or whitespace (reserved by
// the word text syntax).
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);
    static std::shared_ptr<const Alphabet> make(std::vector<std::string> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    const std::string& letter(Letter i) const { return letters_.at(i); }
    const std::vector<std::string>& letters() const noexcept { return letters_; }
    std::optional<Letter> index_of(std::string_view token) const;
    // True when every token is a single character, enabling the compact
    // concatenated word syntax ("aaab" instead of "a.a.a.b").
    bool single_char() const noexcept { return single_char_; }

    bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

private:
    std::vector<std::string> letters_;
    bool single_char_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b,
                           const char* context);

// A word over an alphabet; the empty word is the monoid identity and prints
// as "1". Immutable value type.
class Word {
public:
    explicit Word(AlphabetPtr alphabet);
    Word(AlphabetPtr alphabet, std::vector<Letter> letters);

    // Parses the word text syntax: "1" (or "") for the empty word,
    // concatenated characters for single-char alphabets, dot-separated
    // tokens otherwise. Throws std::invalid_argument on unknown letters.
    static Word parse(const AlphabetPtr& alphabet, std::string_view text);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t pos0) const { return letters_[pos0]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    // Consecutive subword starting at 0-based position pos0.
    Word subword(std::size_t pos0, std::size_t len) const;
    // Prefix of the first len letters.
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word append(Letter a) const;

    std::string to_string() const;

    bool operator==(const Word& other) const;
    // Canonical order: length, then lexicographic by letter index. Assumes
    // both operands share an alphabet (every container in this library
    // enforces that on entry).
    bool operator<(const Word& other) const;

private:
    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);

// True when `needle` occurs as a consecutive subword of `hay`.
bool is_subword(const Word& needle, const Word& hay);

// One occurrence site inside a host word; positions are 1-based.
//
// A host word of length n has n-1 internal cut points, cut c lying between
// positions c and c+1. An occurrence covering letters [start, end()] blocks
// the cuts in the half-open range [cut_begin(), cut_end()). Overlapping
// occurrence chains — the cluster condition — are phrased entirely in terms
// of blocked cuts, which keeps every coverage test off-by-one-free.
struct Span {
    std::uint32_t start = 1;        // first letter position, >= 1
    std::uint32_t pattern_len = 2;  // number of letters covered, >= 2 for patterns

    std::uint32_t end() const noexcept { return start + pattern_len - 1; }  // inclusive
    std::uint32_t cut_begin() const noexcept { return start; }
    std::uint32_t cut_end() const noexcept { return start + pattern_len - 1; }

    auto operator<=>(const Span&) const = default;
};

// Span covering letter positions lo..hi inclusive.
Span span_from_letter_range(std::int64_t lo, std::int64_t hi);
// Span whose blocked-cut range is [lo, hi) — i.e. letters lo..hi.
Span span_from_cut_range(std::int64_t lo, std::int64_t hi);

// A set of forbidden words over one alphabet, each of length >= 2.
// Stored deduplicated in canonical order. `reduced()` reports whether no
// member occurs as a subword of another.
class ForbiddenSet {
public:
    ForbiddenSet(AlphabetPtr alphabet, std::vector<Word> words);
    static ForbiddenSet parse(const AlphabetPtr& alphabet,
                              const std::vector<std::string>& texts);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    const std::vector<Word>& words() const noexcept { return words_; }
    const Word& word(std::uint32_t pattern_index) const { return words_.at(pattern_index); }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    bool reduced() const noexcept { return reduced_; }
    bool contains(const Word& w) const;
    std::size_t max_pattern_len() const noexcept { return max_pattern_len_; }

    // Subset whose members contain no other member as a subword. Avoiding
    // the reduced set forbids exactly the same words.
    ForbiddenSet reduce() const;

private:
    AlphabetPtr alphabet_;
    std::vector<Word> words_;
    bool reduced_ = true;
    std::size_t max_pattern_len_ = 0;
};

struct Occurrence {
    Span span;
    std::uint32_t pattern_index = 0;  // into ForbiddenSet::words()

    auto operator<=>(const Occurrence&) const = default;  // (start, end, pattern)
};

// Every occurrence of every member of f inside w, sorted by
// (start, end, pattern index). The list length is s_F(w).
std::vector<Occurrence> occurrences(const Word& w, const ForbiddenSet& f);

// Number of occurrences, counted with multiplicity.
std::size_t occurrence_count(const Word& w, const ForbiddenSet& f);

// True iff no member of f occurs in w; the empty word always avoids.
bool avoids(const Word& w, const ForbiddenSet& f);

}  // namespace gjc
