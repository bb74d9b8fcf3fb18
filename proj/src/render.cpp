#include "gjcluster/render.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

namespace gjc {

using nlohmann::json;

ProblemSpec ProblemSpec::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("problem spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("problem spec must be a JSON object");
    ProblemSpec spec;
    if (!j.contains("alphabet") || !j["alphabet"].is_array())
        throw std::invalid_argument("problem spec needs an \"alphabet\" array");
    for (const auto& tok : j["alphabet"]) {
        if (!tok.is_string()) throw std::invalid_argument("alphabet entries must be strings");
        spec.alphabet.push_back(tok.get<std::string>());
    }
    if (j.contains("forbidden")) {
        if (!j["forbidden"].is_array())
            throw std::invalid_argument("\"forbidden\" must be an array of word strings");
        for (const auto& w : j["forbidden"]) {
            if (!w.is_string()) throw std::invalid_argument("forbidden entries must be strings");
            spec.forbidden.push_back(w.get<std::string>());
        }
    }
    if (j.contains("max_len")) {
        if (!j["max_len"].is_number_unsigned() && !j["max_len"].is_number_integer())
            throw std::invalid_argument("\"max_len\" must be a nonnegative integer");
        const auto v = j["max_len"].get<long long>();
        if (v < 0) throw std::invalid_argument("\"max_len\" must be nonnegative");
        spec.max_len = static_cast<std::size_t>(v);
    }
    if (j.contains("t_value") && !j["t_value"].is_null())
        spec.t_value = j["t_value"].get<long long>();
    return spec;
}

std::string ProblemSpec::to_json() const {
    json j;
    j["alphabet"] = alphabet;
    j["forbidden"] = forbidden;
    j["max_len"] = max_len;
    if (t_value) j["t_value"] = *t_value;
    return j.dump();
}

Problem make_problem(const ProblemSpec& spec) {
    AlphabetPtr alpha = Alphabet::make(spec.alphabet);
    ForbiddenSet forbidden = ForbiddenSet::parse(alpha, spec.forbidden);
    return Problem{alpha, std::move(forbidden), spec.max_len, spec.t_value};
}

std::string word_pretty(const Word& w) {
    if (w.empty()) return "1";
    bool single_letter = true;
    for (std::size_t i = 1; i < w.size() && single_letter; ++i)
        single_letter = w[i] == w[0];
    if (!single_letter || w.size() < 2) return w.to_string();
    return w.alphabet()->letter(w[0]) + "^" + std::to_string(w.size());
}

namespace {

struct RenderedTerm {
    int sign = 1;          // +1 or -1; multi-term polynomial coefficients are +1
    std::string body;
};

RenderedTerm render_term(const Word& w, const BigInt& coeff) {
    RenderedTerm term;
    term.sign = coeff < 0 ? -1 : 1;
    BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
    std::string word_text = word_pretty(w);
    if (w.empty())
        term.body = mag.str();
    else if (mag == 1)
        term.body = word_text;
    else
        term.body = mag.str() + " " + word_text;
    return term;
}

RenderedTerm render_term(const Word& w, const IntPoly& coeff) {
    RenderedTerm term;
    std::size_t nonzero = 0, power = 0;
    for (std::size_t k = 0; k <= coeff.degree(); ++k)
        if (coeff.coeff(k) != 0) {
            ++nonzero;
            power = k;
        }
    if (nonzero == 1) {
        const BigInt& c = coeff.coeff(power);
        term.sign = c < 0 ? -1 : 1;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        std::ostringstream body;
        if (power == 0) {
            return render_term(w, c);
        }
        if (mag != 1) body << mag.str();
        body << "t";
        if (power > 1) body << "^" << power;
        if (!w.empty()) body << " " << word_pretty(w);
        term.body = body.str();
        return term;
    }
    term.sign = 1;
    term.body = "(" + coeff.to_string() + ")";
    if (!w.empty()) term.body += " " + word_pretty(w);
    return term;
}

template <class C>
std::string series_text_impl(const Series<C>& s) {
    if (s.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : s.terms()) {
        RenderedTerm term = render_term(w, c);
        if (first) {
            if (term.sign < 0) out << "-";
            first = false;
        } else {
            out << (term.sign < 0 ? " - " : " + ");
        }
        out << term.body;
    }
    return out.str();
}

json poly_coeffs_json(const IntPoly& p) {
    json coeffs = json::array();
    if (!p.is_zero())
        for (std::size_t k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k).str());
    return coeffs;
}

json series_json_impl(const NcSeries& s, const std::string& kind) {
    json j;
    j["kind"] = kind;
    j["coefficients"] = "integer";
    j["alphabet"] = s.alphabet()->letters();
    j["max_len"] = s.max_len();
    json terms = json::array();
    for (const auto& [w, c] : s.terms())
        terms.push_back(json{{"word", w.to_string()}, {"coeff", c.str()}});
    j["terms"] = std::move(terms);
    return j;
}

json series_json_impl(const NcPolySeries& s, const std::string& kind) {
    json j;
    j["kind"] = kind;
    j["coefficients"] = "poly_t";
    j["alphabet"] = s.alphabet()->letters();
    j["max_len"] = s.max_len();
    json terms = json::array();
    for (const auto& [w, p] : s.terms())
        terms.push_back(json{{"word", w.to_string()}, {"poly", poly_coeffs_json(p)}});
    j["terms"] = std::move(terms);
    return j;
}

json forbidden_json(const ForbiddenSet& f) {
    json arr = json::array();
    for (const auto& w : f.words()) arr.push_back(w.to_string());
    return arr;
}

}  // namespace

std::string series_to_text(const NcSeries& s) { return series_text_impl(s); }
std::string series_to_text(const NcPolySeries& s) { return series_text_impl(s); }
std::string series_to_json(const NcSeries& s, const std::string& kind) {
    return series_json_impl(s, kind).dump(2);
}
std::string series_to_json(const NcPolySeries& s, const std::string& kind) {
    return series_json_impl(s, kind).dump(2);
}

std::string cluster_diagram(const Word& w, const std::vector<Occurrence>& marks,
                            const ForbiddenSet& f) {
    const AlphabetPtr& alpha = w.alphabet();
    const bool compact = alpha->single_char();
    std::vector<std::size_t> col(w.size() + 1, 0);
    std::ostringstream first_line;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !compact) first_line << ".";
        col[i] = first_line.str().size();
        first_line << alpha->letter(w[i]);
    }
    col[w.size()] = first_line.str().size();

    std::ostringstream out;
    out << first_line.str();
    for (const auto& m : marks) {
        const std::size_t from = col[m.span.start - 1];
        const std::size_t to = col[m.span.end() - 1] + alpha->letter(w[m.span.end() - 1]).size();
        out << "\n"
            << std::string(from, ' ') << std::string(to - from, '-') << "  "
            << f.word(m.pattern_index).to_string();
    }
    return out.str();
}

std::string counts_render(const ForbiddenSet& f, const std::vector<BigInt>& counts,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json j;
        j["alphabet"] = f.alphabet()->letters();
        j["forbidden"] = forbidden_json(f);
        json arr = json::array();
        for (const auto& c : counts) arr.push_back(c.str());
        j["counts"] = std::move(arr);
        return j.dump(2);
    }
    std::ostringstream out;
    out << "n\tcount\n";
    for (std::size_t n = 0; n < counts.size(); ++n) out << n << "\t" << counts[n].str() << "\n";
    return out.str();
}

std::string clusters_render(const Word& w, const ForbiddenSet& f, OutputFormat fmt) {
    const auto occ = occurrences(w, f);
    const auto clusters = enumerate_clusters(w, f);
    const IntPoly subset_poly = cluster_polynomial(w, f, ClusterPolyMethod::subset);
    std::optional<RecurrenceTrace> trace;
    std::optional<IntPoly> recurrence_poly;
    if (f.reduced()) {
        recurrence_poly = cluster_polynomial(w, f, ClusterPolyMethod::recurrence);
        if (is_cluster_word(w, f)) trace = recurrence_trace(w, f);
    }

    if (fmt == OutputFormat::json) {
        json j;
        j["word"] = w.to_string();
        j["forbidden"] = forbidden_json(f);
        json occs = json::array();
        for (const auto& o : occ)
            occs.push_back(json{{"start", o.span.start},
                                {"len", o.span.pattern_len},
                                {"pattern", f.word(o.pattern_index).to_string()}});
        j["occurrences"] = std::move(occs);
        json cl = json::array();
        for (const auto& marks : clusters) {
            json ms = json::array();
            for (const auto& m : marks)
                ms.push_back(json{{"start", m.span.start},
                                  {"len", m.span.pattern_len},
                                  {"pattern", f.word(m.pattern_index).to_string()}});
            cl.push_back(json{{"marks", std::move(ms)}});
        }
        j["clusters"] = std::move(cl);
        j["polynomial_subset"] = subset_poly.to_string();
        j["polynomial_subset_coeffs"] = poly_coeffs_json(subset_poly);
        if (recurrence_poly) {
            j["polynomial_recurrence"] = recurrence_poly->to_string();
            if (trace) {
                json tr;
                tr["r"] = trace->r;
                json ps = json::array();
                for (const auto& p : trace->p) ps.push_back(p.to_string());
                tr["p"] = std::move(ps);
                j["recurrence_trace"] = std::move(tr);
            }
        } else {
            j["polynomial_recurrence"] = nullptr;
        }
        return j.dump(2);
    }

    std::ostringstream out;
    out << "word: " << w.to_string() << "\n";
    out << "occurrences (" << occ.size() << "):\n";
    for (const auto& o : occ)
        out << "  " << f.word(o.pattern_index).to_string() << " at " << o.span.start << ".."
            << o.span.end() << "\n";
    out << "clusters (" << clusters.size() << "):\n";
    for (const auto& marks : clusters) {
        std::istringstream diagram(cluster_diagram(w, marks, f));
        std::string line;
        while (std::getline(diagram, line)) out << "  " << line << "\n";
        out << "\n";
    }
    out << "cluster polynomial (subset enumeration): " << subset_poly.to_string() << "\n";
    if (recurrence_poly) {
        out << "cluster polynomial (recurrence):         " << recurrence_poly->to_string()
            << "\n";
        if (trace) {
            out << "  r: ";
            for (std::size_t i = 0; i < trace->r.size(); ++i)
                out << (i ? ", " : "") << trace->r[i];
            out << "\n";
            for (std::size_t i = 0; i < trace->p.size(); ++i)
                out << "  p_" << (i + 1) << " = " << trace->p[i].to_string() << "\n";
        }
    } else {
        out << "cluster polynomial (recurrence):         n/a (forbidden set is not reduced)\n";
    }
    return out.str();
}

namespace {

std::vector<Word> all_words_up_to(const AlphabetPtr& alpha, std::size_t max_len) {
    require_enumerable(alpha, max_len);
    std::vector<Word> words;
    words.emplace_back(alpha);
    std::size_t begin = 0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        const std::size_t end = words.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Letter a = 0; a < alpha->size(); ++a) words.push_back(words[i].append(a));
        begin = end;
    }
    return words;
}

MTable compute_m_table(const Problem& problem, const std::string& method) {
    if (method == "inversion") return m_by_inversion(problem.forbidden, problem.max_len);
    if (method == "clusters") return m_by_clusters(problem.forbidden, problem.max_len);
    if (method == "salient") return m_by_salient(problem.forbidden, problem.max_len);
    throw std::invalid_argument("unknown m-table method \"" + method + "\"");
}

}  // namespace

std::string m_table_render(const Problem& problem, const std::string& method,
                           bool include_zeros, OutputFormat fmt) {
    MTable table;
    std::string provenance;
    if (method == "all") {
        table = m_by_inversion(problem.forbidden, problem.max_len);
        const MTable clusters = m_by_clusters(problem.forbidden, problem.max_len);
        const MTable salient = m_by_salient(problem.forbidden, problem.max_len);
        if (auto bad = first_mtable_mismatch(table, clusters))
            throw std::logic_error("reciprocal paths disagree at \"" + bad->to_string() +
                                   "\" (inversion vs cluster evaluation)");
        if (auto bad = first_mtable_mismatch(table, salient))
            throw std::logic_error("reciprocal paths disagree at \"" + bad->to_string() +
                                   "\" (inversion vs salient recursion)");
        provenance = "all";
    } else {
        table = compute_m_table(problem, method);
        provenance = to_string(table.provenance);
    }

    std::vector<std::pair<Word, int>> rows;
    if (include_zeros) {
        for (const auto& w : all_words_up_to(problem.alphabet, problem.max_len))
            rows.emplace_back(w, table.m(w));
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    } else {
        rows.assign(table.values.begin(), table.values.end());
    }

    if (fmt == OutputFormat::json) {
        json j;
        j["alphabet"] = problem.alphabet->letters();
        j["forbidden"] = forbidden_json(problem.forbidden);
        j["max_len"] = problem.max_len;
        j["method"] = method;
        json entries = json::array();
        for (const auto& [w, value] : rows)
            entries.push_back(
                json{{"word", w.to_string()}, {"M", value}, {"provenance", provenance}});
        j["entries"] = std::move(entries);
        j["zero_words_omitted"] = !include_zeros;
        return j.dump(2);
    }
    std::ostringstream out;
    out << "word\tM\tprovenance\n";
    for (const auto& [w, value] : rows)
        out << w.to_string() << "\t" << value << "\t" << provenance << "\n";
    return out.str();
}

std::string salient_render(const ForbiddenSet& f, std::size_t max_len, OutputFormat fmt) {
    const auto records = salient_words(f, max_len);
    std::map<Word, const SalientRecord*> by_word;
    for (const auto& rec : records) by_word.emplace(rec.word, &rec);
    const auto chain_of = [&](const SalientRecord& rec) {
        std::vector<std::string> chain{rec.word.to_string()};
        const SalientRecord* cur = &rec;
        while (cur->witness) {
            chain.push_back(cur->witness->to_string());
            cur = by_word.at(*cur->witness);
        }
        return chain;
    };

    if (fmt == OutputFormat::json) {
        json j;
        j["forbidden"] = forbidden_json(f);
        j["max_len"] = max_len;
        json arr = json::array();
        for (const auto& rec : records) {
            json r;
            r["word"] = rec.word.to_string();
            r["sign"] = rec.sign;
            r["witness"] = rec.witness ? json(rec.witness->to_string()) : json(nullptr);
            json candidates = json::array();
            for (const auto& c : rec.candidates) candidates.push_back(c.to_string());
            r["candidates"] = std::move(candidates);
            r["chain"] = chain_of(rec);
            arr.push_back(std::move(r));
        }
        j["records"] = std::move(arr);
        return j.dump(2);
    }
    std::ostringstream out;
    out << "salient words (" << records.size() << "):\n";
    for (const auto& rec : records) {
        out << "  " << word_pretty(rec.word) << "\tM=" << (rec.sign > 0 ? "+1" : "-1");
        const auto chain = chain_of(rec);
        out << "\tchain: ";
        for (std::size_t i = 0; i < chain.size(); ++i) out << (i ? " <- " : "") << chain[i];
        out << "\n";
    }
    return out.str();
}

namespace {

json greene_json(const GreeneReport& report) {
    json g;
    g["element_count"] = report.element_count;
    g["pairs_checked"] = report.pairs_checked;
    g["range_ok"] = report.range_ok;
    g["crosscut_ok"] = report.crosscut_ok;
    g["bridge_ok"] = report.bridge_ok;
    g["mu_top_recursive"] = report.mu_top_recursive;
    g["mu_top_crosscut"] = report.mu_top_crosscut;
    g["bridge"] = json{{"applicable", report.bridge.applicable},
                       {"value", report.bridge.value},
                       {"note", report.bridge.note}};
    g["pass"] = report.pass();
    if (!report.detail.empty()) g["detail"] = report.detail;
    return g;
}

}  // namespace

std::string mobius_render(const IntervalFamily& fam, const std::string& method,
                          bool all_pairs, OutputFormat fmt) {
    const UnionLattice lat = UnionLattice::build(fam);
    json values;
    std::ostringstream text;
    text << "family:";
    for (const auto& [lo, hi] : fam.intervals) text << " [" << lo << "," << hi << "]";
    text << " (normalized)\nelements: " << lat.size() << ", atoms: " << lat.atoms().size()
         << "\n";

    const bool want_all = method == "all";
    if (want_all || method == "recursive") {
        const long long v = mobius_row(lat, lat.bottom())[lat.top()];
        values["recursive"] = v;
        text << "mu(bottom, top) by recursion: " << v << "\n";
    }
    if (want_all || method == "crosscut") {
        const long long v = mobius_crosscut(lat, lat.top());
        values["crosscut"] = v;
        text << "mu(bottom, top) by atom cross-cut: " << v << "\n";
    }
    if (want_all || method == "cluster") {
        const ClusterBridgeResult bridge = mobius_via_cluster(fam);
        values["cluster"] = bridge.applicable ? json(bridge.value) : json(nullptr);
        if (bridge.applicable)
            text << "mu(bottom, top) by cluster bridge: " << bridge.value << "\n";
        else
            text << "cluster bridge not applicable: " << bridge.note << "\n";
    }
    if (!values.size())
        throw std::invalid_argument("unknown mobius method \"" + method + "\"");

    std::optional<GreeneReport> greene;
    if (want_all) {
        greene = greene_check(fam, all_pairs);
        text << "consistency: " << (greene->pass() ? "pass" : "FAIL");
        if (!greene->detail.empty()) text << " (" << greene->detail << ")";
        text << " over " << greene->pairs_checked << " pairs\n";
    }

    if (fmt == OutputFormat::json) {
        json j;
        json intervals = json::array();
        for (const auto& [lo, hi] : fam.intervals) intervals.push_back(json::array({lo, hi}));
        j["family"] = std::move(intervals);
        j["element_count"] = lat.size();
        j["atom_count"] = lat.atoms().size();
        j["mu_top"] = std::move(values);
        if (greene) j["greene"] = greene_json(*greene);
        return j.dump(2);
    }
    return text.str();
}

VerifySummary verify_render(const Problem& problem, std::size_t random_families,
                            std::uint64_t seed, OutputFormat fmt) {
    struct CheckLine {
        std::string name;
        bool pass = false;
        std::string detail;
        std::optional<std::string> first_mismatch;
    };
    std::vector<CheckLine> checks;
    const auto run = [&checks](const std::string& name, auto&& body) {
        CheckLine line;
        line.name = name;
        try {
            auto outcome = body();
            line.pass = outcome.pass;
            line.detail = std::move(outcome.detail);
            line.first_mismatch = std::move(outcome.first_mismatch);
        } catch (const std::exception& e) {
            line.pass = false;
            line.detail = std::string("exception: ") + e.what();
        }
        checks.push_back(std::move(line));
    };
    struct Outcome {
        bool pass = false;
        std::string detail;
        std::optional<std::string> first_mismatch;
    };
    const auto from_identity = [](const IdentityCheck& check) {
        Outcome outcome{check.pass, check.detail, std::nullopt};
        if (check.first_mismatch) outcome.first_mismatch = check.first_mismatch->to_string();
        return outcome;
    };

    std::optional<ClusterTheoremReport> theorem_report;
    const auto get_theorem_report = [&]() -> const ClusterTheoremReport& {
        if (!theorem_report)
            theorem_report = verify_cluster_theorem(problem.forbidden, problem.max_len);
        return *theorem_report;
    };
    std::optional<MTable> inversion_table;
    const auto get_inversion_table = [&]() -> const MTable& {
        if (!inversion_table)
            inversion_table = m_by_inversion(problem.forbidden, problem.max_len);
        return *inversion_table;
    };

    run("occurrence-weight identity",
        [&] { return from_identity(get_theorem_report().occurrence_weight); });
    run("avoiding-words identity",
        [&] { return from_identity(get_theorem_report().avoiding_words); });

    run("reciprocal path agreement", [&]() -> Outcome {
        const MTable& inversion = get_inversion_table();
        const MTable clusters = m_by_clusters(problem.forbidden, problem.max_len);
        const MTable salient = m_by_salient(problem.forbidden, problem.max_len);
        if (auto bad = first_mtable_mismatch(inversion, clusters))
            return {false, "inversion vs clusters differ", bad->to_string()};
        if (auto bad = first_mtable_mismatch(inversion, salient))
            return {false, "inversion vs salient differ", bad->to_string()};
        return {true, "", std::nullopt};
    });

    bool csv_applicable = true;
    for (const auto& w : problem.forbidden.words())
        if (w.size() != 2) csv_applicable = false;
    run("complementation identity", [&]() -> Outcome {
        if (!csv_applicable)
            return {true, "skipped (forbidden words are not all of length 2)", std::nullopt};
        const auto report = csv_check(problem.forbidden, problem.max_len);
        Outcome outcome{report.pass, report.detail, std::nullopt};
        if (report.first_mismatch) outcome.first_mismatch = report.first_mismatch->to_string();
        return outcome;
    });

    run("mobius checks on derived interval families", [&]() -> Outcome {
        const ForbiddenSet reduced =
            problem.forbidden.reduced() ? problem.forbidden : problem.forbidden.reduce();
        std::size_t families = 0;
        const std::size_t cap = std::min<std::size_t>(problem.max_len, 8);
        const NcPolySeries cgf = cluster_gf(reduced, cap);
        for (const auto& [w, poly] : cgf.terms()) {
            (void)poly;
            const auto occ = occurrences(w, reduced);
            if (occ.size() > 12) continue;
            std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
            intervals.reserve(occ.size());
            for (const auto& o : occ)
                intervals.emplace_back(o.span.cut_begin(), o.span.cut_end() - 1);
            const auto fam = IntervalFamily::from_intervals(std::move(intervals));
            const auto report = greene_check(fam, occ.size() <= 8);
            if (!report.pass())
                return {false, "family of \"" + w.to_string() + "\": " + report.detail,
                        w.to_string()};
            // For a reduced set the occurrences are the lattice atoms, so
            // mu(bottom, top) must be the negated reciprocal coefficient.
            if (report.mu_top_recursive != -get_inversion_table().m(w))
                return {false,
                        "mu(bottom, top) of the derived family does not match the "
                        "reciprocal coefficient",
                        w.to_string()};
            ++families;
        }
        return {true, std::to_string(families) + " families checked", std::nullopt};
    });

    run("mobius checks on random interval families", [&]() -> Outcome {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < random_families; ++i) {
            std::uniform_int_distribution<int> m_dist(1, 6), lo_dist(1, 10), len_dist(1, 4);
            const int m = m_dist(rng);
            std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
            for (int k = 0; k < m; ++k) {
                const int lo = lo_dist(rng);
                intervals.emplace_back(lo, lo + len_dist(rng) - 1);
            }
            const auto fam = IntervalFamily::from_intervals(std::move(intervals));
            const auto report = greene_check(fam, true);
            if (!report.pass())
                return {false,
                        "random family " + std::to_string(i) + " (seed " +
                            std::to_string(seed) + "): " + report.detail,
                        std::nullopt};
        }
        return {true, std::to_string(random_families) + " families checked", std::nullopt};
    });

    bool all_pass = true;
    for (const auto& line : checks) all_pass = all_pass && line.pass;

    VerifySummary summary;
    summary.pass = all_pass;
    if (fmt == OutputFormat::json) {
        json j;
        j["alphabet"] = problem.alphabet->letters();
        j["forbidden"] = forbidden_json(problem.forbidden);
        j["max_len"] = problem.max_len;
        j["seed"] = seed;
        json arr = json::array();
        for (const auto& line : checks) {
            json c{{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}};
            c["first_mismatch"] =
                line.first_mismatch ? json(*line.first_mismatch) : json(nullptr);
            arr.push_back(std::move(c));
        }
        j["checks"] = std::move(arr);
        j["pass"] = all_pass;
        summary.rendered = j.dump(2);
    } else {
        std::ostringstream out;
        for (const auto& line : checks) {
            out << (line.pass ? "PASS" : "FAIL") << "  " << line.name;
            if (!line.detail.empty()) out << "  (" << line.detail << ")";
            out << "\n";
        }
        out << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
        summary.rendered = out.str();
    }
    return summary;
}

IntervalFamily interval_family_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("interval family is not valid JSON: ") +
                                    e.what());
    }
    if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
        throw std::invalid_argument(
            "interval family JSON must look like {\"intervals\": [[lo, hi], ...]}");
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
    for (const auto& pair : j["intervals"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw std::invalid_argument("each interval must be a [lo, hi] integer pair");
        intervals.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
    }
    return IntervalFamily::from_intervals(std::move(intervals));
}

}  // namespace gjc
