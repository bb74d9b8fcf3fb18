// Acceptance suite: every release criterion runs end-to-end and prints one
// PASS/FAIL line, with its time budget enforced. Exit status is the number
// of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gjcluster/avoidance.hpp"
#include "gjcluster/clusters.hpp"
#include "gjcluster/interval_lattice.hpp"
#include "gjcluster/reciprocal.hpp"
#include "support.hpp"

using namespace gjc;
using namespace gjc::testsupport;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool condition, const std::string& message) {
        if (!condition) failures.push_back(message);
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void(Check&)> body;
};

IntPoly poly(const std::vector<std::pair<long long, std::size_t>>& terms) {
    IntPoly p;
    for (const auto& [c, k] : terms) p += IntPoly::monomial(c, k);
    return p;
}

// The fixed + seeded-random forbidden-set suite shared by criteria 4 and 5.
std::vector<std::pair<AlphabetPtr, ForbiddenSet>> identity_suite() {
    std::vector<std::pair<AlphabetPtr, ForbiddenSet>> suite;
    const auto a3 = abc(3), a2 = abc(2), a1 = abc(1);
    suite.emplace_back(a3, fset(a3, {"abc", "bcc"}));
    suite.emplace_back(a1, fset(a1, {"aaa"}));
    suite.emplace_back(a2, fset(a2, {"aa", "aab"}));
    suite.emplace_back(a2, fset(a2, {"aa"}));
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 20; ++i) {
        const auto problem = random_reduced_problem(rng);
        suite.emplace_back(problem.alphabet, fset(problem.alphabet, problem.forbidden));
    }
    return suite;
}

void criterion_cluster_gf_exactness(Check& check) {
    const auto alpha = abc(3);
    const auto c = cluster_gf(fset(alpha, {"abc", "bcc"}), 8);
    check.expect(c.term_count() == 3, "expected exactly three cluster words up to length 8");
    check.expect(c.coeff(wparse(alpha, "abc")) == IntPoly::t(), "coefficient of abc must be t");
    check.expect(c.coeff(wparse(alpha, "bcc")) == IntPoly::t(), "coefficient of bcc must be t");
    check.expect(c.coeff(wparse(alpha, "abcc")) == IntPoly::monomial(1, 2),
                 "coefficient of abcc must be t^2");
}

void criterion_cluster_polynomials(Check& check) {
    const auto a2 = abc(2);
    check.expect(cluster_polynomial(wparse(a2, "aaab"), fset(a2, {"aa", "aab"}),
                                    ClusterPolyMethod::subset) == poly({{1, 2}, {1, 3}}),
                 "P(aaab; {aa, aab}) must be t^2 + t^3");
    const auto a1 = abc(1);
    const auto f = fset(a1, {"aaa"});
    const Word w6 = wparse(a1, "aaaaaa");
    const auto expected = poly({{2, 3}, {1, 4}});
    check.expect(cluster_polynomial(w6, f, ClusterPolyMethod::subset) == expected,
                 "P(a^6; {aaa}) by subsets must be 2t^3 + t^4");
    check.expect(cluster_polynomial(w6, f, ClusterPolyMethod::recurrence) == expected,
                 "P(a^6; {aaa}) by the recurrence must be 2t^3 + t^4");
}

void criterion_reciprocal_pattern(Check& check) {
    const auto a1 = abc(1);
    NcSeries s(a1, 10);
    s.add_to(Word(a1), BigInt(1));
    s.add_to(wparse(a1, "a"), BigInt(1));
    s.add_to(wparse(a1, "aa"), BigInt(1));
    const auto inv = s.invert();
    const int expected[] = {1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1};
    for (std::size_t n = 0; n <= 10; ++n)
        check.expect(inv.coeff(Word(a1, std::vector<Letter>(n, 0))) == expected[n],
                     "coefficient of a^" + std::to_string(n) + " must be " +
                         std::to_string(expected[n]));
    check.expect(inv == avoiding_series(fset(a1, {"aaa"}), 10).invert(),
                 "1 + a + a^2 must equal the avoiding series of {aaa}");
}

void criterion_cluster_theorem_suite(Check& check) {
    for (const auto& [alpha, f] : identity_suite()) {
        const auto report = verify_cluster_theorem(f, 8);
        std::string label = "{";
        for (const auto& w : f.words()) label += w.to_string() + " ";
        label += "}";
        check.expect(report.occurrence_weight.pass,
                     "occurrence-weight identity failed for " + label + ": " +
                         report.occurrence_weight.detail);
        check.expect(report.avoiding_words.pass,
                     "avoiding-words identity failed for " + label + ": " +
                         report.avoiding_words.detail);
    }
}

void criterion_path_agreement(Check& check) {
    for (const auto& [alpha, f] : identity_suite()) {
        const auto inversion = m_by_inversion(f, 8);
        const auto clusters = m_by_clusters(f, 8);
        const auto salient = m_by_salient(f, 8);
        std::string label = "{";
        for (const auto& w : f.words()) label += w.to_string() + " ";
        label += "}";
        if (auto bad = first_mtable_mismatch(inversion, clusters))
            check.expect(false, "inversion vs clusters differ at \"" + bad->to_string() +
                                    "\" for " + label);
        if (auto bad = first_mtable_mismatch(inversion, salient))
            check.expect(false, "inversion vs salient differ at \"" + bad->to_string() +
                                    "\" for " + label);
        for (const auto& [w, v] : inversion.values)
            check.expect(v == 1 || v == -1, "value out of range at \"" + w.to_string() + "\"");
    }
}

void criterion_salient_classification(Check& check) {
    const auto a1 = abc(1);
    const auto records = salient_words(fset(a1, {"aaa"}), 12);
    std::map<std::size_t, int> got;
    for (const auto& rec : records) got.emplace(rec.word.size(), rec.sign);
    std::map<std::size_t, int> expected;
    for (std::size_t n = 3; n <= 12; ++n)
        if (n % 3 != 2) expected.emplace(n, n % 3 == 0 ? 1 : -1);
    check.expect(got == expected,
                 "salient words must be a^n for n >= 3, n != 2 mod 3, alternating from +1");
}

void criterion_csv_all_subsets(Check& check) {
    const auto alpha = abc(2);
    const std::vector<std::string> square = {"aa", "ab", "ba", "bb"};
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::string> words;
        for (unsigned i = 0; i < 4; ++i)
            if (mask & (1u << i)) words.push_back(square[i]);
        const auto report = csv_check(fset(alpha, words), 10);
        check.expect(report.pass,
                     "complementation identity failed for subset mask " + std::to_string(mask) +
                         ": " + report.detail);
    }
}

void criterion_greene(Check& check) {
    // exhaustive: every family of at most 5 distinct intervals inside [1, 8]
    std::vector<std::pair<std::int64_t, std::int64_t>> all;
    for (std::int64_t lo = 1; lo <= 8; ++lo)
        for (std::int64_t hi = lo; hi <= 8; ++hi) all.emplace_back(lo, hi);

    std::size_t families = 0, bridge_hits = 0;
    std::vector<std::size_t> pick;
    auto run_family = [&](const std::vector<std::size_t>& indices) {
        std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
        intervals.reserve(indices.size());
        for (auto i : indices) intervals.push_back(all[i]);
        const auto fam = IntervalFamily::from_intervals(std::move(intervals));
        const auto lat = UnionLattice::build(fam);
        const auto bottom_row = mobius_row(lat, lat.bottom());
        const auto crosscut = mobius_crosscut_all(lat);
        for (std::size_t x = 0; x < lat.size(); ++x) {
            if (crosscut[x] != bottom_row[x]) {
                check.expect(false, "cross-cut mismatch in exhaustive family #" +
                                        std::to_string(families));
                return;
            }
        }
        for (std::size_t x = 0; x < lat.size(); ++x) {
            const auto row = x == 0 ? bottom_row : mobius_row(lat, x);
            for (std::size_t y = x; y < lat.size(); ++y)
                if (lat.leq(x, y) && (row[y] < -1 || row[y] > 1)) {
                    check.expect(false, "mu out of range in exhaustive family #" +
                                            std::to_string(families));
                    return;
                }
        }
        const auto bridge = mobius_via_cluster(fam);
        if (bridge.applicable) {
            ++bridge_hits;
            if (bridge.value != bottom_row[lat.top()])
                check.expect(false, "cluster bridge mismatch in exhaustive family #" +
                                        std::to_string(families));
        }
        ++families;
    };

    auto choose = [&](auto&& self, std::size_t next, std::size_t remaining) -> void {
        if (!pick.empty()) run_family(pick);
        if (remaining == 0) return;
        for (std::size_t i = next; i < all.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1, remaining - 1);
            pick.pop_back();
        }
    };
    choose(choose, 0, 5);
    check.expect(families == 443703, "expected 443703 exhaustive families, saw " +
                                         std::to_string(families));
    check.expect(bridge_hits > 0, "the cluster bridge never applied");

    // seeded random families with up to 8 intervals
    std::mt19937_64 rng(0x5EED);
    std::uniform_int_distribution<std::size_t> m_dist(1, 8);
    std::uniform_int_distribution<std::int64_t> lo_dist(1, 12), len_dist(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
        const std::size_t m = m_dist(rng);
        for (std::size_t i = 0; i < m; ++i) {
            const auto lo = lo_dist(rng);
            intervals.emplace_back(lo, lo + len_dist(rng));
        }
        const auto fam = IntervalFamily::from_intervals(std::move(intervals));
        const auto report = greene_check(fam, true);
        check.expect(report.pass(), "random family " + std::to_string(trial) +
                                        " failed: " + report.detail);
    }
}

void criterion_counting_oracle(Check& check) {
    const auto alpha = abc(2);
    const auto f = fset(alpha, {"aa"});
    const auto counts = count_avoiding(f, 12);
    check.expect(counts.size() == 13, "expected 13 counts");
    for (std::size_t n = 0; n <= 12; ++n) {
        BigInt brute(0);
        for (const auto& w : words_of_length(alpha, n))
            if (naive_avoids(w, f)) ++brute;
        check.expect(counts[n] == brute,
                     "count mismatch at length " + std::to_string(n));
    }
    check.expect(counts[1] == 2 && counts[2] == 3 && counts[3] == 5 && counts[4] == 8 &&
                     counts[5] == 13,
                 "counts must start 1, 2, 3, 5, 8, 13, ...");
}

void criterion_sign_lemma(Check& check) {
    std::mt19937_64 rng(0xABCDEF);
    std::size_t weakly_increasing_seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<std::size_t> m_dist(1, 15);
        const std::size_t m = m_dist(rng);
        std::vector<long long> u{-1};
        std::vector<std::size_t> r;
        for (std::size_t k = 2; k <= m; ++k) {
            std::uniform_int_distribution<std::size_t> r_dist(1, k - 1);
            const std::size_t rk = r_dist(rng);
            long long sum = 0;
            for (std::size_t l = rk; l <= k - 1; ++l) sum += u[l - 1];
            u.push_back(-sum);
            r.push_back(rk);
        }
        const auto report = analyze_sign_sequence(u, r);
        check.expect(report.alternation_ok,
                     "alternation failed on instance " + std::to_string(trial));
        if (report.r_weakly_increasing) {
            ++weakly_increasing_seen;
            check.expect(report.two_nonzero_bound_ok,
                         "two-nonzero-term bound failed on instance " + std::to_string(trial));
        }
    }
    check.expect(weakly_increasing_seen > 0, "no weakly increasing instances were generated");
}

}  // namespace

int main(int argc, char** argv) {
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    std::vector<Criterion> criteria = {
        {1, "cluster generating function of {abc, bcc} is exactly t abc + t bcc + t^2 abcc",
         1.0, criterion_cluster_gf_exactness},
        {2, "cluster polynomials: P(aaab) = t^2 + t^3 and P(a^6) = 2t^3 + t^4 (both methods)",
         1.0, criterion_cluster_polynomials},
        {3, "reciprocal of 1 + a + a^2 follows the signed period-3 pattern to a^10", 1.0,
         criterion_reciprocal_pattern},
        {4, "both cluster-theorem identities hold on the fixed + random suite at length 8",
         30.0, criterion_cluster_theorem_suite},
        {5, "the three reciprocal paths agree with all values in {-1, 0, 1} on the suite",
         30.0, criterion_path_agreement},
        {6, "salient words of {aaa} up to length 12 are a^n, n != 2 mod 3, alternating", 1.0,
         criterion_salient_classification},
        {7, "the complementation identity holds for all 16 subsets of {a,b}^2 to length 10",
         10.0, criterion_csv_all_subsets},
        {8, "Mobius range/agreement on all small families (exhaustive) plus 100 random ones",
         60.0, criterion_greene},
        {9, "avoiding-word counts for {aa} over {a,b} match the brute-force filter to length 12",
         5.0, criterion_counting_oracle},
        {10, "500 random sign sequences alternate and respect the two-nonzero-term bound", 5.0,
         criterion_sign_lemma},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        if (only != 0 && only != criterion.id) continue;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const auto elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.budget_seconds)
            check.expect(false, "time budget exceeded: " + std::to_string(elapsed) + "s > " +
                                    std::to_string(criterion.budget_seconds) + "s");
        const bool pass = check.failures.empty();
        std::printf("%s  criterion %2d: %s (%.0f ms)\n", pass ? "PASS" : "FAIL", criterion.id,
                    criterion.title.c_str(), elapsed * 1000.0);
        for (const auto& msg : check.failures) std::printf("      - %s\n", msg.c_str());
        if (!pass) ++failures;
    }
    return failures;
}
