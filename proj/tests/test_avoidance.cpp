#include <doctest.h>

#include <random>

#include "gjcluster/avoidance.hpp"
#include "support.hpp"

using namespace gjc;
using namespace gjc::testsupport;

namespace {

std::vector<BigInt> brute_count(const ForbiddenSet& f, std::size_t max_len) {
    std::vector<BigInt> counts;
    for (std::size_t n = 0; n <= max_len; ++n) {
        BigInt c(0);
        for (const auto& w : words_of_length(f.alphabet(), n))
            if (naive_avoids(w, f)) ++c;
        counts.push_back(c);
    }
    return counts;
}

}  // namespace

TEST_CASE("count_avoiding examples") {
    SUBCASE("no aa over two letters counts like Fibonacci") {
        const auto alpha = abc(2);
        const auto counts = count_avoiding(fset(alpha, {"aa"}), 5);
        CHECK(counts == std::vector<BigInt>{1, 2, 3, 5, 8, 13});
        CHECK(counts == brute_count(fset(alpha, {"aa"}), 5));
    }
    SUBCASE("empty forbidden set counts all words") {
        const auto alpha = abc(3);
        const auto counts = count_avoiding(fset(alpha, {}), 4);
        CHECK(counts == std::vector<BigInt>{1, 3, 9, 27, 81});
    }
    SUBCASE("single letter with aaa dies at length 3") {
        const auto single = abc(1);
        CHECK(count_avoiding(fset(single, {"aaa"}), 4) ==
              std::vector<BigInt>{1, 1, 1, 0, 0});
    }
}

TEST_CASE("automaton accepts exactly the avoiding words") {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> cases = {
        {2, {"aa"}}, {2, {"aa", "aab"}}, {3, {"abc", "bcc"}}, {2, {"aba"}}, {1, {"aaa"}},
        {3, {"ab", "ca"}}};
    for (const auto& [alpha_size, words] : cases) {
        const auto alpha = abc(alpha_size);
        const auto f = fset(alpha, words);
        const AvoidanceAutomaton m(f);
        const std::size_t cap = alpha_size >= 3 ? 6 : 8;
        for (const auto& w : words_up_to(alpha, cap)) CHECK(m.accepts(w) == naive_avoids(w, f));
    }
}

TEST_CASE("counts satisfy the automaton's linear recurrence") {
    const auto alpha = abc(2);
    const auto f = fset(alpha, {"aa", "bab"});
    const AvoidanceAutomaton m(f);
    // independent path: dense transition-matrix powers
    const std::size_t s = m.state_count();
    std::vector<std::vector<BigInt>> matrix(s, std::vector<BigInt>(s, BigInt(0)));
    for (std::uint32_t i = 0; i < s; ++i)
        for (Letter a = 0; a < alpha->size(); ++a) ++matrix[i][m.next(i, a)];
    std::vector<BigInt> vec(s, BigInt(0));
    vec[m.initial_state()] = 1;
    const auto counts = count_avoiding(f, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        BigInt alive(0);
        for (std::uint32_t i = 0; i < s; ++i)
            if (!m.is_dead(i)) alive += vec[i];
        CHECK(alive == counts[n]);
        std::vector<BigInt> next(s, BigInt(0));
        for (std::uint32_t i = 0; i < s; ++i)
            for (std::uint32_t j = 0; j < s; ++j) next[j] += vec[i] * matrix[i][j];
        vec = std::move(next);
    }
}

TEST_CASE("avoiding series") {
    SUBCASE("single letter with aaa") {
        const auto single = abc(1);
        const auto s = avoiding_series(fset(single, {"aaa"}), 5);
        CHECK(s.term_count() == 3);  // 1, a, aa
        CHECK(s.coeff(wparse(single, "aa")) == 1);
        CHECK(s.coeff(wparse(single, "aaa")) == 0);
    }
    SUBCASE("empty forbidden set lists every word") {
        const auto alpha = abc(2);
        const auto s = avoiding_series(fset(alpha, {}), 2);
        CHECK(s.term_count() == 7);  // 1 + a + b + aa + ab + ba + bb
    }
    SUBCASE("length slices match the counts") {
        const auto alpha = abc(2);
        const auto f = fset(alpha, {"aa", "bab"});
        const auto s = avoiding_series(f, 7);
        const auto counts = count_avoiding(f, 7);
        std::vector<BigInt> sums(8, BigInt(0));
        for (const auto& [w, c] : s.terms()) sums[w.size()] += c;
        for (std::size_t n = 0; n <= 7; ++n) CHECK(sums[n] == counts[n]);
    }
}

TEST_CASE("occurrence generating function") {
    SUBCASE("single letter with aaa weights a^n by t^(n-2)") {
        const auto single = abc(1);
        const auto g = occurrence_gf(fset(single, {"aaa"}), 6);
        CHECK(g.coeff(Word(single)) == IntPoly(1));
        CHECK(g.coeff(wparse(single, "a")) == IntPoly(1));
        CHECK(g.coeff(wparse(single, "aa")) == IntPoly(1));
        CHECK(g.coeff(wparse(single, "aaa")) == IntPoly::t());
        CHECK(g.coeff(wparse(single, "aaaa")) == IntPoly::monomial(1, 2));
        CHECK(g.coeff(wparse(single, "aaaaaa")) == IntPoly::monomial(1, 4));
    }
    SUBCASE("coefficient of aaaa under {aa} is t^3") {
        const auto alpha = abc(2);
        const auto g = occurrence_gf(fset(alpha, {"aa"}), 4);
        CHECK(g.coeff(wparse(alpha, "aaaa")) == IntPoly::monomial(1, 3));
    }
    SUBCASE("every weight is the naive count, and t = 0 keeps avoiders") {
        const auto alpha = abc(2);
        const auto f = fset(alpha, {"aa", "aab"});  // non-reduced: all members count
        const auto g = occurrence_gf(f, 6);
        for (const auto& w : words_up_to(alpha, 6))
            CHECK(g.coeff(w) == IntPoly::monomial(1, naive_occurrence_count(w, f)));
        CHECK(eval_t(g, BigInt(0)) == avoiding_series(f, 6));
    }
}

TEST_CASE("cluster theorem verification") {
    SUBCASE("{abc, bcc} passes both identities") {
        const auto alpha = abc(3);
        const auto report = verify_cluster_theorem(fset(alpha, {"abc", "bcc"}), 6);
        CHECK(report.occurrence_weight.pass);
        CHECK(report.avoiding_words.pass);
        CHECK(report.pass());
    }
    SUBCASE("{aaa} passes to length 10 and matches the closed form") {
        const auto single = abc(1);
        const auto f = fset(single, {"aaa"});
        CHECK(verify_cluster_theorem(f, 10).pass());
        // closed form: t a^3 (1 - t(a + a^2))^-1
        const std::size_t L = 10;
        NcPolySeries denom = NcPolySeries::constant(single, L, IntPoly(1));
        denom.add_to(wparse(single, "a"), -IntPoly::t());
        denom.add_to(wparse(single, "aa"), -IntPoly::t());
        NcPolySeries prefix(single, L);
        prefix.add_to(wparse(single, "aaa"), IntPoly::t());
        CHECK(cluster_gf(f, L) == prefix * denom.invert());
    }
    SUBCASE("empty forbidden set reduces to the all-words inverse") {
        const auto alpha = abc(2);
        const auto report = verify_cluster_theorem(fset(alpha, {}), 4);
        CHECK(report.pass());
        const auto all = one_minus_letters(alpha, 4).invert();
        for (const auto& [w, c] : all.terms()) CHECK(c == 1);
        CHECK(all.term_count() == 31);
    }
    SUBCASE("non-reduced sets satisfy the identities as well") {
        const auto alpha = abc(2);
        CHECK(verify_cluster_theorem(fset(alpha, {"aa", "aab"}), 7).pass());
    }
}

TEST_CASE("random reduced sets pass the identities") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        const auto problem = random_reduced_problem(rng);
        const auto f = fset(problem.alphabet, problem.forbidden);
        CHECK(verify_cluster_theorem(f, 6).pass());
    }
}

TEST_CASE("enumeration guard") {
    const auto alpha = abc(3);
    CHECK_THROWS_AS(occurrence_gf(fset(alpha, {"aa"}), 20), LimitError);
}
