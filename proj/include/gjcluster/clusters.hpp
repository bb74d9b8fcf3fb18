#pragma once

#include <vector>

#include "gjcluster/series.hpp"
#include "gjcluster/words.hpp"

namespace gjc {

// A word together with a set of marked occurrences of forbidden words.
// Construction validates that every mark is a genuine occurrence; marks are
// kept sorted by (start, end, pattern index) and deduplicated.
class MarkedWord {
public:
    MarkedWord(Word word, ForbiddenSet forbidden, std::vector<Occurrence> marks);

    const Word& word() const noexcept { return word_; }
    const ForbiddenSet& forbidden() const noexcept { return forbidden_; }
    const std::vector<Occurrence>& marks() const noexcept { return marks_; }

    bool operator==(const MarkedWord& other) const {
        return word_ == other.word_ && marks_ == other.marks_;
    }

private:
    Word word_;
    ForbiddenSet forbidden_;
    std::vector<Occurrence> marks_;
};

// Concatenation (uv, I U (J + |u|)).
MarkedWord concat(const MarkedWord& u, const MarkedWord& v);

// A marked word is a cluster when the word has length >= 2 and the marks
// block every internal cut point, i.e. the word cannot be split into two
// nonempty marked words.
bool is_cluster(const MarkedWord& mw);

// The unique maximal factorization of a marked word into single unmarked
// letters and clusters. Concatenating the returned segments in order
// reproduces the input.
std::vector<MarkedWord> factor_marked_word(const MarkedWord& mw);

// All mark subsets I of occurrences(w, f) for which (w, I) is a cluster,
// in canonical (sorted-subset) order. Empty iff w is not a cluster word.
std::vector<std::vector<Occurrence>> enumerate_clusters(const Word& w, const ForbiddenSet& f);

bool is_cluster_word(const Word& w, const ForbiddenSet& f);

enum class ClusterPolyMethod { subset, recurrence };

// Cluster polynomial: sum of t^|I| over all clusters (w, I). The zero
// polynomial when w is not a cluster word. The recurrence method requires a
// reduced forbidden set (throws std::invalid_argument otherwise) but also
// returns the zero polynomial when the occurrence chain has a gap.
IntPoly cluster_polynomial(const Word& w, const ForbiddenSet& f, ClusterPolyMethod method);

// The occurrence chain of a cluster word under a reduced forbidden set,
// together with the back-reference indices r_2..r_m and the prefix cluster
// polynomials p_1..p_m built by
//     p_1 = t,   p_k = t * (p_{r_k} + p_{r_k+1} + ... + p_{k-1}),
// where r_k is the least index whose occurrence still overlaps occurrence k.
// p_m equals the cluster polynomial of w.
struct RecurrenceTrace {
    std::vector<Occurrence> spans;   // sorted; strictly increasing starts and ends
    std::vector<std::uint32_t> r;    // r[k-2] = r_k (1-based), weakly increasing
    std::vector<IntPoly> p;          // p[k-1] = p_k
};

// Throws std::invalid_argument when f is not reduced or w is not a cluster word.
RecurrenceTrace recurrence_trace(const Word& w, const ForbiddenSet& f);

// Cluster generating function: coefficient of each word w with |w| <= max_len
// is its cluster polynomial. Enumerates by extending partial overlap chains,
// so only cluster words are ever touched.
NcPolySeries cluster_gf(const ForbiddenSet& f, std::size_t max_len);

// Reference implementation scanning every word of length <= max_len; kept as
// the independent cross-check for cluster_gf.
NcPolySeries cluster_gf_by_scan(const ForbiddenSet& f, std::size_t max_len);

}  // namespace gjc
