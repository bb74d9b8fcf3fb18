#include "gjcluster.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gjcluster/render.hpp"

using namespace gjc;

struct gjc_problem {
    Problem problem;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

OutputFormat to_format(gjc_format fmt) {
    return fmt == GJC_FORMAT_JSON ? OutputFormat::json : OutputFormat::text;
}

// Runs body(), routing its string result to *out and exceptions to statuses.
template <class Fn>
gjc_status guarded(char** out, Fn&& body) {
    if (out) *out = nullptr;
    try {
        g_last_error.clear();
        std::string result = body();
        if (out && !(*out = dup_string(result))) {
            g_last_error = "out of memory";
            return GJC_ERR_INTERNAL;
        }
        return GJC_OK;
    } catch (const LimitError& e) {
        g_last_error = e.what();
        return GJC_ERR_LIMIT;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return GJC_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return GJC_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GJC_ERR_INTERNAL;
    }
}

gjc_status require_problem(const gjc_problem* p) {
    if (!p) {
        g_last_error = "null problem handle";
        return GJC_ERR_INVALID_ARGUMENT;
    }
    return GJC_OK;
}

}  // namespace

extern "C" {

const char* gjc_version(void) { return "0.1.0"; }

const char* gjc_status_name(gjc_status status) {
    switch (status) {
        case GJC_OK: return "ok";
        case GJC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case GJC_ERR_LIMIT: return "limit exceeded";
        case GJC_VERIFY_FAILED: return "verification failed";
        case GJC_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* gjc_last_error(void) { return g_last_error.c_str(); }

void gjc_string_free(char* s) { std::free(s); }

gjc_status gjc_problem_new(const char* const* letters, size_t n_letters,
                           const char* const* forbidden, size_t n_forbidden,
                           size_t max_len, gjc_problem** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return GJC_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    char* unused = nullptr;
    gjc_status status = guarded(&unused, [&]() -> std::string {
        ProblemSpec spec;
        for (size_t i = 0; i < n_letters; ++i) {
            if (!letters || !letters[i]) throw std::invalid_argument("null letter token");
            spec.alphabet.emplace_back(letters[i]);
        }
        for (size_t i = 0; i < n_forbidden; ++i) {
            if (!forbidden || !forbidden[i]) throw std::invalid_argument("null forbidden word");
            spec.forbidden.emplace_back(forbidden[i]);
        }
        spec.max_len = max_len;
        *out = new gjc_problem{make_problem(spec)};
        return {};
    });
    gjc_string_free(unused);
    return status;
}

gjc_status gjc_problem_from_json(const char* spec_json, gjc_problem** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return GJC_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    char* unused = nullptr;
    gjc_status status = guarded(&unused, [&]() -> std::string {
        if (!spec_json) throw std::invalid_argument("null problem spec");
        *out = new gjc_problem{make_problem(ProblemSpec::from_json(spec_json))};
        return {};
    });
    gjc_string_free(unused);
    return status;
}

void gjc_problem_free(gjc_problem* p) { delete p; }

gjc_status gjc_count_avoiding(const gjc_problem* p, gjc_format fmt, char** out) {
    if (gjc_status s = require_problem(p); s != GJC_OK) return s;
    return guarded(out, [&] {
        const auto counts = count_avoiding(p->problem.forbidden, p->problem.max_len);
        return counts_render(p->problem.forbidden, counts, to_format(fmt));
    });
}

gjc_status gjc_series(const gjc_problem* p, const char* which, int has_t, long long t_value,
                      gjc_format fmt, char** out) {
    if (gjc_status s = require_problem(p); s != GJC_OK) return s;
    return guarded(out, [&]() -> std::string {
        if (!which) throw std::invalid_argument("null series selector");
        const std::string kind = which;
        const auto& problem = p->problem;
        const OutputFormat format = to_format(fmt);

        if (kind == "avoiding" || kind == "reciprocal") {
            if (has_t)
                throw std::invalid_argument("series \"" + kind +
                                            "\" has integer coefficients; -t does not apply");
            NcSeries series = avoiding_series(problem.forbidden, problem.max_len);
            if (kind == "reciprocal") series = series.invert();
            return format == OutputFormat::json ? series_to_json(series, kind)
                                                : series_to_text(series);
        }
        if (kind == "cluster-gf" || kind == "occurrence-gf") {
            NcPolySeries series = kind == "cluster-gf"
                                      ? cluster_gf(problem.forbidden, problem.max_len)
                                      : occurrence_gf(problem.forbidden, problem.max_len);
            // explicit -t wins; otherwise a t_value from the problem spec applies
            std::optional<long long> at;
            if (has_t)
                at = t_value;
            else if (problem.t_value)
                at = *problem.t_value;
            if (at) {
                NcSeries value = eval_t(series, BigInt(*at));
                return format == OutputFormat::json ? series_to_json(value, kind)
                                                    : series_to_text(value);
            }
            return format == OutputFormat::json ? series_to_json(series, kind)
                                                : series_to_text(series);
        }
        throw std::invalid_argument("unknown series \"" + kind +
                                    "\" (expected avoiding, reciprocal, cluster-gf or "
                                    "occurrence-gf)");
    });
}

gjc_status gjc_clusters(const gjc_problem* p, const char* word, gjc_format fmt, char** out) {
    if (gjc_status s = require_problem(p); s != GJC_OK) return s;
    return guarded(out, [&] {
        if (!word) throw std::invalid_argument("null word");
        const Word w = Word::parse(p->problem.alphabet, word);
        return clusters_render(w, p->problem.forbidden, to_format(fmt));
    });
}

gjc_status gjc_m_table(const gjc_problem* p, const char* method, int include_zeros,
                       gjc_format fmt, char** out) {
    if (gjc_status s = require_problem(p); s != GJC_OK) return s;
    return guarded(out, [&] {
        return m_table_render(p->problem, method ? method : "all", include_zeros != 0,
                              to_format(fmt));
    });
}

gjc_status gjc_salient(const gjc_problem* p, gjc_format fmt, char** out) {
    if (gjc_status s = require_problem(p); s != GJC_OK) return s;
    return guarded(out, [&] {
        return salient_render(p->problem.forbidden, p->problem.max_len, to_format(fmt));
    });
}

gjc_status gjc_mobius(const char* intervals_json, const char* method, int all_pairs,
                      gjc_format fmt, char** out) {
    return guarded(out, [&] {
        if (!intervals_json) throw std::invalid_argument("null interval family");
        const IntervalFamily fam = interval_family_from_json(intervals_json);
        return mobius_render(fam, method ? method : "all", all_pairs != 0, to_format(fmt));
    });
}

gjc_status gjc_verify(const gjc_problem* p, size_t random_families, unsigned long long seed,
                      gjc_format fmt, char** out) {
    if (gjc_status s = require_problem(p); s != GJC_OK) return s;
    bool pass = false;
    gjc_status status = guarded(out, [&] {
        VerifySummary summary =
            verify_render(p->problem, random_families, seed, to_format(fmt));
        pass = summary.pass;
        return summary.rendered;
    });
    if (status == GJC_OK && !pass) {
        g_last_error = "verification found failing checks";
        return GJC_VERIFY_FAILED;
    }
    return status;
}

}  // extern "C"
