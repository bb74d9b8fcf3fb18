#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gjcluster/avoidance.hpp"
#include "gjcluster/clusters.hpp"
#include "gjcluster/interval_lattice.hpp"
#include "gjcluster/reciprocal.hpp"
#include "gjcluster/series.hpp"
#include "gjcluster/words.hpp"

namespace gjc {

enum class OutputFormat { text, json };

// A complete problem statement as accepted by the CLI and the C API.
struct ProblemSpec {
    std::vector<std::string> alphabet;
    std::vector<std::string> forbidden;
    std::size_t max_len = 10;
    std::optional<long long> t_value;

    // {"alphabet": [...], "forbidden": [...], "max_len": N, "t_value": T?}
    static ProblemSpec from_json(const std::string& text);
    std::string to_json() const;
};

struct Problem {
    AlphabetPtr alphabet;
    ForbiddenSet forbidden;
    std::size_t max_len;
    std::optional<long long> t_value;
};

Problem make_problem(const ProblemSpec& spec);

// Display form of a word: powers of a single letter collapse to "a^n",
// everything else keeps the parse syntax.
std::string word_pretty(const Word& w);

std::string series_to_text(const NcSeries& s);
std::string series_to_text(const NcPolySeries& s);
std::string series_to_json(const NcSeries& s, const std::string& kind);
std::string series_to_json(const NcPolySeries& s, const std::string& kind);

// Word on the first line, one underline row per mark with its pattern.
std::string cluster_diagram(const Word& w, const std::vector<Occurrence>& marks,
                            const ForbiddenSet& f);

std::string counts_render(const ForbiddenSet& f, const std::vector<BigInt>& counts,
                          OutputFormat fmt);
std::string clusters_render(const Word& w, const ForbiddenSet& f, OutputFormat fmt);
std::string m_table_render(const Problem& problem, const std::string& method,
                           bool include_zeros, OutputFormat fmt);
std::string salient_render(const ForbiddenSet& f, std::size_t max_len, OutputFormat fmt);
std::string mobius_render(const IntervalFamily& fam, const std::string& method,
                          bool all_pairs, OutputFormat fmt);

struct VerifySummary {
    std::string rendered;
    bool pass = false;
};

// Runs the full verification battery for a problem: both cluster-theorem
// identities, the three reciprocal paths, the complementation identity when
// every forbidden word has length 2, Mobius checks on the interval families
// of the problem's own cluster words, and seeded random families.
VerifySummary verify_render(const Problem& problem, std::size_t random_families,
                            std::uint64_t seed, OutputFormat fmt);

IntervalFamily interval_family_from_json(const std::string& text);

}  // namespace gjc
