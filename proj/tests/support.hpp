#pragma once

// Shared helpers for the test suites: independent brute-force oracles and
// seeded generators. Everything here is deliberately naive; the point is to
// be obviously correct rather than fast.

#include <random>
#include <string>
#include <vector>

#include "gjcluster/words.hpp"

namespace gjc::testsupport {

inline AlphabetPtr abc(std::size_t n) {
    std::vector<std::string> letters;
    const char* tokens[] = {"a", "b", "c", "d"};
    for (std::size_t i = 0; i < n; ++i) letters.emplace_back(tokens[i]);
    return Alphabet::make(letters);
}

inline Word wparse(const AlphabetPtr& alpha, const std::string& text) {
    return Word::parse(alpha, text);
}

inline ForbiddenSet fset(const AlphabetPtr& alpha, const std::vector<std::string>& words) {
    return ForbiddenSet::parse(alpha, words);
}

// All words over alpha of length exactly n, in canonical order.
inline std::vector<Word> words_of_length(const AlphabetPtr& alpha, std::size_t n) {
    std::vector<Word> out;
    std::vector<Letter> letters(n, 0);
    while (true) {
        out.emplace_back(alpha, letters);
        std::size_t pos = n;
        while (pos > 0) {
            if (++letters[pos - 1] < alpha->size()) break;
            letters[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

inline std::vector<Word> words_up_to(const AlphabetPtr& alpha, std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t n = 0; n <= max_len; ++n)
        for (auto& w : words_of_length(alpha, n)) out.push_back(std::move(w));
    return out;
}

// Occurrence counting by the plainest possible double loop.
inline std::size_t naive_occurrence_count(const Word& w, const ForbiddenSet& f) {
    std::size_t count = 0;
    for (const auto& pat : f.words()) {
        if (pat.size() > w.size()) continue;
        for (std::size_t s = 0; s + pat.size() <= w.size(); ++s) {
            bool match = true;
            for (std::size_t i = 0; i < pat.size() && match; ++i)
                match = w[s + i] == pat[i];
            if (match) ++count;
        }
    }
    return count;
}

inline bool naive_avoids(const Word& w, const ForbiddenSet& f) {
    return naive_occurrence_count(w, f) == 0;
}

// Seeded random forbidden set: reduced, nonempty, patterns of length 2..4
// over an alphabet of 1..3 letters.
struct RandomProblem {
    AlphabetPtr alphabet;
    std::vector<std::string> forbidden;
};

inline RandomProblem random_reduced_problem(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> alpha_size(1, 3);
    const AlphabetPtr alpha = abc(alpha_size(rng));
    std::uniform_int_distribution<std::size_t> n_words(1, 3), pat_len(2, 4);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alpha->size() - 1));
    std::vector<Word> words;
    const std::size_t target = n_words(rng);
    while (words.size() < target) {
        std::vector<Letter> letters(pat_len(rng));
        for (auto& a : letters) a = letter(rng);
        words.emplace_back(alpha, letters);
    }
    const ForbiddenSet reduced = ForbiddenSet(alpha, std::move(words)).reduce();
    RandomProblem problem;
    problem.alphabet = alpha;
    for (const auto& w : reduced.words()) problem.forbidden.push_back(w.to_string());
    return problem;
}

}  // namespace gjc::testsupport
