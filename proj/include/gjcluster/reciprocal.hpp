#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gjcluster/avoidance.hpp"
#include "gjcluster/series.hpp"
#include "gjcluster/words.hpp"

namespace gjc {

// How an M-table was produced.
enum class MMethod { inversion, cluster_eval, salient };
std::string to_string(MMethod m);

// The coefficients M(w) of the reciprocal of the avoiding-word series, for
// all words of length <= max_len. Only nonzero entries are stored; M is 0
// for absent words. Every stored value is -1 or +1, with M(empty) = +1 and
// M(letter) = -1.
struct MTable {
    AlphabetPtr alphabet;
    std::size_t max_len = 0;
    MMethod provenance = MMethod::inversion;
    std::map<Word, int> values;

    int m(const Word& w) const {
        auto it = values.find(w);
        return it == values.end() ? 0 : it->second;
    }
};

// Path 1: invert the avoiding-word series directly. Throws std::logic_error
// if any coefficient falls outside {-1, 0, 1}: that would disprove the
// theorem this library implements, so it is treated as an internal bug.
MTable m_by_inversion(const ForbiddenSet& f, std::size_t max_len);

// Path 2: M(w) = -(cluster polynomial of w under the reduced set at t = -1)
// for |w| >= 2, with the base cases M(empty) = 1, M(letter) = -1.
MTable m_by_clusters(const ForbiddenSet& f, std::size_t max_len);

// Path 3: the salient-word recursion (below) plus the same base cases.
MTable m_by_salient(const ForbiddenSet& f, std::size_t max_len);

// First word (canonical order) on which two tables disagree.
std::optional<Word> first_mtable_mismatch(const MTable& a, const MTable& b);

// A salient word: length >= 2 with M(w) != 0. `witness` is the unique
// salient proper prefix consuming the recursion step (absent exactly when w
// is itself forbidden). `candidates` lists the prefixes the recursion
// examined: those of length m with j <= m < n, where [j, n) are the cuts of
// the last forbidden occurrence.
struct SalientRecord {
    Word word;
    int sign = 0;
    std::optional<Word> witness;
    std::vector<Word> candidates;
};

// Classifies every cluster word of length <= max_len by the recursion:
// forbidden words are salient with sign +1; otherwise, with [j, n) the cuts
// of the last forbidden occurrence, w is salient iff exactly one prefix of
// length in [j, n-1] is salient, and then w flips that prefix's sign.
// Reduces f first when necessary. Records are in canonical word order.
std::vector<SalientRecord> salient_words(const ForbiddenSet& f, std::size_t max_len);

struct SignSequenceReport {
    bool alternation_ok = false;       // nonzero entries run -1, +1, -1, ...
    bool r_weakly_increasing = false;
    bool two_nonzero_bound_ok = true;  // each defining sum has <= 2 nonzero terms
                                       // (meaningful when r is weakly increasing)
    bool ok() const { return alternation_ok && (!r_weakly_increasing || two_nonzero_bound_ok); }
};

// u has m entries; r has m-1 entries with r[k-2] = r_k, 1 <= r_k <= k-1.
// Validates u_1 = -1 and u_k = -(u_{r_k} + ... + u_{k-1}), throwing
// std::invalid_argument on violation, then reports the sign-sequence
// properties.
SignSequenceReport analyze_sign_sequence(const std::vector<long long>& u,
                                         const std::vector<std::size_t>& r);

bool check_sign_lemma(const std::vector<long long>& u, const std::vector<std::size_t>& r);

struct CsvReport {
    bool pass = false;
    std::optional<Word> first_mismatch;
    std::string detail;
};

// For a forbidden set whose members all have length exactly 2 (throws
// otherwise): checks that the avoiding series of f equals the inverse of the
// length-signed avoiding series of the complement of f in A^2.
CsvReport csv_check(const ForbiddenSet& f, std::size_t max_len);

// All two-letter words over the alphabet that are not in f.
ForbiddenSet complement_in_squares(const ForbiddenSet& f);

}  // namespace gjc
