// Command-line front end for the gjcluster shared library. Everything goes
// through the C API in gjcluster.h; this file only parses arguments, reads
// files and prints the returned strings.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gjcluster.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::string> parse_alphabet_flag(const std::string& text) {
    if (text.find(',') != std::string::npos) return split_commas(text);
    if (text.size() <= 1) return text.empty() ? std::vector<std::string>{} : std::vector{text};
    // a plain run of characters is shorthand for single-char letters
    std::vector<std::string> out;
    out.reserve(text.size());
    for (char c : text) out.emplace_back(1, c);
    return out;
}

struct ProblemOptions {
    std::string alphabet;
    std::string forbidden;
    std::size_t max_len = 10;
    bool max_len_given = false;
    std::string spec_file;
};

class ProblemHandle {
public:
    explicit ProblemHandle(gjc_problem* p) : p_(p) {}
    ~ProblemHandle() { gjc_problem_free(p_); }
    ProblemHandle(const ProblemHandle&) = delete;
    ProblemHandle& operator=(const ProblemHandle&) = delete;
    gjc_problem* get() const { return p_; }

private:
    gjc_problem* p_;
};

class ResultString {
public:
    ~ResultString() { gjc_string_free(s_); }
    char** slot() { return &s_; }
    const char* get() const { return s_ ? s_ : ""; }

private:
    char* s_ = nullptr;
};

int fail(gjc_status status) {
    std::cerr << "error (" << gjc_status_name(status) << "): " << gjc_last_error() << "\n";
    return status == GJC_VERIFY_FAILED ? kExitVerifyFailed : kExitUsage;
}

std::unique_ptr<ProblemHandle> open_problem(const ProblemOptions& opts, int& exit_code) {
    gjc_problem* raw = nullptr;
    gjc_status status = GJC_OK;
    if (!opts.spec_file.empty()) {
        if (!opts.alphabet.empty() || !opts.forbidden.empty() || opts.max_len_given) {
            std::cerr << "error: --spec cannot be combined with --alphabet/--forbidden/"
                         "--max-len\n";
            exit_code = kExitUsage;
            return nullptr;
        }
        std::ifstream in(opts.spec_file);
        if (!in) {
            std::cerr << "error: cannot read spec file \"" << opts.spec_file << "\"\n";
            exit_code = kExitUsage;
            return nullptr;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        status = gjc_problem_from_json(buffer.str().c_str(), &raw);
    } else {
        if (opts.alphabet.empty()) {
            std::cerr << "error: an alphabet is required (--alphabet or --spec)\n";
            exit_code = kExitUsage;
            return nullptr;
        }
        const auto letters = parse_alphabet_flag(opts.alphabet);
        const auto forbidden = split_commas(opts.forbidden);
        std::vector<const char*> letter_ptrs, forbidden_ptrs;
        for (const auto& s : letters) letter_ptrs.push_back(s.c_str());
        for (const auto& s : forbidden) forbidden_ptrs.push_back(s.c_str());
        status = gjc_problem_new(letter_ptrs.data(), letter_ptrs.size(), forbidden_ptrs.data(),
                                 forbidden_ptrs.size(), opts.max_len, &raw);
    }
    if (status != GJC_OK) {
        exit_code = fail(status);
        return nullptr;
    }
    return std::make_unique<ProblemHandle>(raw);
}

gjc_format detect_format(bool json_flag) {
    if (json_flag) return GJC_FORMAT_JSON;
    if (const char* env = std::getenv("GJCLUSTER_FORMAT"))
        if (std::string(env) == "json") return GJC_FORMAT_JSON;
    return GJC_FORMAT_TEXT;
}

int emit(gjc_status status, const ResultString& result) {
    if (status == GJC_OK || status == GJC_VERIFY_FAILED) {
        std::cout << result.get();
        if (*result.get() && result.get()[std::strlen(result.get()) - 1] != '\n')
            std::cout << "\n";
    }
    if (status != GJC_OK) return status == GJC_VERIFY_FAILED ? kExitVerifyFailed : fail(status);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of words avoiding forbidden subwords"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json appear after the subcommand

    ProblemOptions opts;
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit JSON instead of text (or set GJCLUSTER_FORMAT=json)");

    const auto add_problem_flags = [&](CLI::App* cmd) {
        cmd->add_option("--alphabet", opts.alphabet,
                        "letters, comma-separated tokens (a plain string means single chars)");
        cmd->add_option("--forbidden", opts.forbidden, "forbidden words, comma-separated");
        cmd->add_option("--max-len", opts.max_len, "truncation length (default 10)")
            ->check(CLI::NonNegativeNumber)
            ->each([&](const std::string&) { opts.max_len_given = true; });
        cmd->add_option("--spec", opts.spec_file, "problem spec JSON file");
    };

    auto* count_cmd = app.add_subcommand("count", "count avoiding words per length");
    add_problem_flags(count_cmd);

    auto* series_cmd = app.add_subcommand("series", "print a generating series");
    add_problem_flags(series_cmd);
    std::string which;
    long long t_value = 0;
    bool has_t = false;
    series_cmd->add_option("--which", which, "avoiding | reciprocal | cluster-gf | occurrence-gf")
        ->required();
    series_cmd->add_option("--t", t_value, "evaluate polynomial coefficients at this integer")
        ->each([&](const std::string&) { has_t = true; });

    auto* clusters_cmd = app.add_subcommand("clusters", "clusters and cluster polynomial of a word");
    add_problem_flags(clusters_cmd);
    std::string word;
    clusters_cmd->add_option("--word", word, "the word to analyze")->required();

    auto* mtable_cmd = app.add_subcommand("m-table", "reciprocal coefficients M(w)");
    add_problem_flags(mtable_cmd);
    std::string m_method = "all";
    bool zeros = false;
    mtable_cmd->add_option("--method", m_method, "inversion | clusters | salient | all");
    mtable_cmd->add_flag("--zeros", zeros, "include words with M(w) = 0");

    auto* salient_cmd = app.add_subcommand("salient", "salient words with witness chains");
    add_problem_flags(salient_cmd);

    auto* mobius_cmd = app.add_subcommand("mobius", "Mobius function of an interval-union lattice");
    std::string intervals_file;
    std::string mobius_method = "all";
    bool all_pairs = false;
    mobius_cmd->add_option("--intervals", intervals_file, "JSON file {\"intervals\": [[lo,hi],...]}")
        ->required();
    mobius_cmd->add_option("--method", mobius_method, "recursive | crosscut | cluster | all");
    mobius_cmd->add_flag("--all-pairs", all_pairs, "check every comparable pair, not just bottom rows");

    auto* verify_cmd = app.add_subcommand("verify", "run the full verification battery");
    add_problem_flags(verify_cmd);
    std::size_t random_families = 20;
    std::uint64_t seed = 24681012;
    verify_cmd->add_option("--random-families", random_families,
                           "number of seeded random interval families");
    verify_cmd->add_option("--seed", seed, "seed for the random sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const gjc_format fmt = detect_format(json_flag);

    if (mobius_cmd->parsed()) {
        std::ifstream in(intervals_file);
        if (!in) {
            std::cerr << "error: cannot read intervals file \"" << intervals_file << "\"\n";
            return kExitUsage;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        ResultString result;
        return emit(gjc_mobius(buffer.str().c_str(), mobius_method.c_str(), all_pairs ? 1 : 0,
                               fmt, result.slot()),
                    result);
    }

    int exit_code = kExitOk;
    auto problem = open_problem(opts, exit_code);
    if (!problem) return exit_code;

    ResultString result;
    gjc_status status = GJC_OK;
    if (count_cmd->parsed()) {
        status = gjc_count_avoiding(problem->get(), fmt, result.slot());
    } else if (series_cmd->parsed()) {
        status = gjc_series(problem->get(), which.c_str(), has_t ? 1 : 0, t_value, fmt,
                            result.slot());
    } else if (clusters_cmd->parsed()) {
        status = gjc_clusters(problem->get(), word.c_str(), fmt, result.slot());
    } else if (mtable_cmd->parsed()) {
        status = gjc_m_table(problem->get(), m_method.c_str(), zeros ? 1 : 0, fmt, result.slot());
    } else if (salient_cmd->parsed()) {
        status = gjc_salient(problem->get(), fmt, result.slot());
    } else if (verify_cmd->parsed()) {
        status = gjc_verify(problem->get(), random_families, seed, fmt, result.slot());
    } else {
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    }
    return emit(status, result);
}
