#include "gjcluster/reciprocal.hpp"

#include <algorithm>
#include <sstream>

namespace gjc {

std::string to_string(MMethod m) {
    switch (m) {
        case MMethod::inversion: return "inversion";
        case MMethod::cluster_eval: return "cluster_eval";
        case MMethod::salient: return "salient";
    }
    return "?";
}

MTable m_by_inversion(const ForbiddenSet& f, std::size_t max_len) {
    MTable table{f.alphabet(), max_len, MMethod::inversion, {}};
    const NcSeries reciprocal = avoiding_series(f, max_len).invert();
    for (const auto& [w, c] : reciprocal.terms()) {
        if (c != 1 && c != -1)
            throw std::logic_error("reciprocal coefficient " + c.str() + " of \"" +
                                   w.to_string() +
                                   "\" is outside {-1,0,1}; this is a library bug");
        table.values.emplace(w, c == 1 ? 1 : -1);
    }
    return table;
}

namespace {

void insert_base_cases(MTable& table) {
    table.values.emplace(Word(table.alphabet), 1);
    if (table.max_len >= 1)
        for (Letter a = 0; a < table.alphabet->size(); ++a)
            table.values.emplace(Word(table.alphabet, {a}), -1);
}

}  // namespace

MTable m_by_clusters(const ForbiddenSet& f, std::size_t max_len) {
    MTable table{f.alphabet(), max_len, MMethod::cluster_eval, {}};
    insert_base_cases(table);
    const ForbiddenSet reduced = f.reduced() ? f : f.reduce();
    const NcPolySeries cgf = cluster_gf(reduced, max_len);
    for (const auto& [w, p] : cgf.terms()) {
        BigInt value = -p.eval(BigInt(-1));
        if (value == 0) continue;
        if (value != 1 && value != -1)
            throw std::logic_error("cluster evaluation gave M(\"" + w.to_string() + "\") = " +
                                   value.str() + ", outside {-1,0,1}; this is a library bug");
        table.values.emplace(w, value == 1 ? 1 : -1);
    }
    return table;
}

MTable m_by_salient(const ForbiddenSet& f, std::size_t max_len) {
    MTable table{f.alphabet(), max_len, MMethod::salient, {}};
    insert_base_cases(table);
    for (const auto& rec : salient_words(f, max_len)) table.values.emplace(rec.word, rec.sign);
    return table;
}

std::optional<Word> first_mtable_mismatch(const MTable& a, const MTable& b) {
    auto it = a.values.begin();
    auto jt = b.values.begin();
    while (it != a.values.end() || jt != b.values.end()) {
        if (it == a.values.end()) return jt->first;
        if (jt == b.values.end()) return it->first;
        if (it->first < jt->first) return it->first;
        if (jt->first < it->first) return jt->first;
        if (it->second != jt->second) return it->first;
        ++it;
        ++jt;
    }
    return std::nullopt;
}

std::vector<SalientRecord> salient_words(const ForbiddenSet& f, std::size_t max_len) {
    const ForbiddenSet reduced = f.reduced() ? f : f.reduce();
    std::vector<SalientRecord> records;
    std::map<Word, int> sign_of;  // salient words seen so far

    // cluster_gf support enumerates exactly the cluster words; the map is
    // graded, so prefixes are always classified before their extensions.
    const NcPolySeries cgf = cluster_gf(reduced, max_len);
    for (const auto& [w, poly] : cgf.terms()) {
        (void)poly;
        if (reduced.contains(w)) {
            records.push_back(SalientRecord{w, 1, std::nullopt, {}});
            sign_of.emplace(w, 1);
            continue;
        }
        const auto occ = occurrences(w, reduced);
        const Occurrence& last = occ.back();
        // w is a cluster word, so its last occurrence reaches the final letter.
        const std::size_t n = w.size();
        const std::size_t j = last.span.cut_begin();
        std::optional<Word> unique_witness;
        std::vector<Word> candidates;
        int witness_count = 0;
        for (std::size_t m = j; m < n; ++m) {
            Word prefix = w.prefix(m);
            if (sign_of.contains(prefix)) {
                ++witness_count;
                unique_witness = prefix;
            }
            candidates.push_back(std::move(prefix));
        }
        if (witness_count == 1) {
            const int sign = -sign_of.at(*unique_witness);
            records.push_back(SalientRecord{w, sign, unique_witness, std::move(candidates)});
            sign_of.emplace(w, sign);
        }
    }
    return records;
}

SignSequenceReport analyze_sign_sequence(const std::vector<long long>& u,
                                         const std::vector<std::size_t>& r) {
    const std::size_t m = u.size();
    if (m == 0) throw std::invalid_argument("sign sequence must be nonempty");
    if (r.size() + 1 != m)
        throw std::invalid_argument("expected one back-reference per entry after the first");
    if (u[0] != -1) throw std::invalid_argument("sign sequence must start at -1");

    SignSequenceReport report;
    report.r_weakly_increasing =
        std::is_sorted(r.begin(), r.end());

    for (std::size_t k = 2; k <= m; ++k) {
        const std::size_t rk = r[k - 2];
        if (rk < 1 || rk > k - 1)
            throw std::invalid_argument("back-reference r_" + std::to_string(k) +
                                        " out of range");
        long long sum = 0;
        int nonzero_terms = 0;
        for (std::size_t l = rk; l <= k - 1; ++l) {
            sum += u[l - 1];
            if (u[l - 1] != 0) ++nonzero_terms;
        }
        if (u[k - 1] != -sum)
            throw std::invalid_argument("entry u_" + std::to_string(k) +
                                        " violates the defining recurrence");
        if (nonzero_terms > 2) report.two_nonzero_bound_ok = false;
    }

    report.alternation_ok = true;
    long long expected = -1;
    for (long long v : u) {
        if (v == 0) continue;
        if (v != expected) {
            report.alternation_ok = false;
            break;
        }
        expected = -expected;
    }
    return report;
}

bool check_sign_lemma(const std::vector<long long>& u, const std::vector<std::size_t>& r) {
    return analyze_sign_sequence(u, r).ok();
}

ForbiddenSet complement_in_squares(const ForbiddenSet& f) {
    const AlphabetPtr& alpha = f.alphabet();
    std::vector<Word> complement;
    for (Letter a = 0; a < alpha->size(); ++a)
        for (Letter b = 0; b < alpha->size(); ++b) {
            Word w(alpha, {a, b});
            if (!f.contains(w)) complement.push_back(std::move(w));
        }
    return ForbiddenSet(alpha, std::move(complement));
}

CsvReport csv_check(const ForbiddenSet& f, std::size_t max_len) {
    for (const auto& w : f.words())
        if (w.size() != 2)
            throw std::invalid_argument("csv check requires every forbidden word to have "
                                        "length exactly 2; got \"" +
                                        w.to_string() + "\"");

    const NcSeries lhs = avoiding_series(f, max_len);
    NcSeries signed_complement(f.alphabet(), max_len);
    const NcSeries complement_avoiding = avoiding_series(complement_in_squares(f), max_len);
    for (const auto& [w, c] : complement_avoiding.terms())
        signed_complement.add_to(w, w.size() % 2 == 0 ? c : -c);

    CsvReport report;
    auto bad = lhs.first_mismatch(signed_complement.invert());
    report.pass = !bad.has_value();
    if (bad) {
        report.first_mismatch = *bad;
        report.detail = "first differing word \"" + bad->to_string() + "\"";
    }
    return report;
}

}  // namespace gjc
