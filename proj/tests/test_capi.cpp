#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "gjcluster.h"

using nlohmann::json;

namespace {

struct Result {
    char* s = nullptr;
    ~Result() { gjc_string_free(s); }
    std::string str() const { return s ? s : ""; }
    json parsed() const { return json::parse(str()); }
};

struct Handle {
    gjc_problem* p = nullptr;
    ~Handle() { gjc_problem_free(p); }
};

Handle make_single_letter_problem() {
    Handle h;
    const char* letters[] = {"a"};
    const char* forbidden[] = {"aaa"};
    REQUIRE(gjc_problem_new(letters, 1, forbidden, 1, 10, &h.p) == GJC_OK);
    return h;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::strlen(gjc_version()) > 0);
    CHECK(std::string(gjc_status_name(GJC_OK)) == "ok");
    CHECK(std::string(gjc_status_name(GJC_VERIFY_FAILED)) == "verification failed");
}

TEST_CASE("problem construction and errors") {
    SUBCASE("valid problem") {
        auto h = make_single_letter_problem();
        CHECK(h.p != nullptr);
    }
    SUBCASE("bad letters are rejected with a message") {
        gjc_problem* p = nullptr;
        const char* letters[] = {"a", "a"};
        CHECK(gjc_problem_new(letters, 2, nullptr, 0, 5, &p) == GJC_ERR_INVALID_ARGUMENT);
        CHECK(p == nullptr);
        CHECK(std::strlen(gjc_last_error()) > 0);
    }
    SUBCASE("short forbidden words are rejected") {
        gjc_problem* p = nullptr;
        const char* letters[] = {"a", "b"};
        const char* forbidden[] = {"a"};
        CHECK(gjc_problem_new(letters, 2, forbidden, 1, 5, &p) == GJC_ERR_INVALID_ARGUMENT);
    }
    SUBCASE("json spec round trip") {
        gjc_problem* p = nullptr;
        REQUIRE(gjc_problem_from_json(
                    R"({"alphabet": ["a","b"], "forbidden": ["aa"], "max_len": 6})", &p) ==
                GJC_OK);
        Result out;
        CHECK(gjc_count_avoiding(p, GJC_FORMAT_JSON, &out.s) == GJC_OK);
        const json j = out.parsed();
        CHECK(j["counts"].size() == 7);
        CHECK(j["counts"][6] == "21");
        gjc_problem_free(p);
    }
    SUBCASE("malformed json is an invalid argument") {
        gjc_problem* p = nullptr;
        CHECK(gjc_problem_from_json("{nope", &p) == GJC_ERR_INVALID_ARGUMENT);
    }
}

TEST_CASE("count endpoint") {
    auto h = make_single_letter_problem();
    Result out;
    REQUIRE(gjc_count_avoiding(h.p, GJC_FORMAT_JSON, &out.s) == GJC_OK);
    const json j = out.parsed();
    CHECK(j["counts"][0] == "1");
    CHECK(j["counts"][2] == "1");
    CHECK(j["counts"][3] == "0");
}

TEST_CASE("series endpoint") {
    auto h = make_single_letter_problem();
    SUBCASE("reciprocal text") {
        Result out;
        REQUIRE(gjc_series(h.p, "reciprocal", 0, 0, GJC_FORMAT_TEXT, &out.s) == GJC_OK);
        CHECK(out.str() == "1 - a + a^3 - a^4 + a^6 - a^7 + a^9 - a^10");
    }
    SUBCASE("cluster gf with and without t") {
        Result symbolic, at_minus_1;
        REQUIRE(gjc_series(h.p, "cluster-gf", 0, 0, GJC_FORMAT_JSON, &symbolic.s) == GJC_OK);
        REQUIRE(gjc_series(h.p, "cluster-gf", 1, -1, GJC_FORMAT_JSON, &at_minus_1.s) == GJC_OK);
        CHECK(symbolic.parsed()["coefficients"] == "poly_t");
        CHECK(at_minus_1.parsed()["coefficients"] == "integer");
    }
    SUBCASE("t on an integer series is an error") {
        Result out;
        CHECK(gjc_series(h.p, "avoiding", 1, -1, GJC_FORMAT_TEXT, &out.s) ==
              GJC_ERR_INVALID_ARGUMENT);
    }
    SUBCASE("unknown selector") {
        Result out;
        CHECK(gjc_series(h.p, "bogus", 0, 0, GJC_FORMAT_TEXT, &out.s) ==
              GJC_ERR_INVALID_ARGUMENT);
    }
}

TEST_CASE("clusters endpoint") {
    Handle h;
    const char* letters[] = {"a", "b"};
    const char* forbidden[] = {"aa", "aab"};
    REQUIRE(gjc_problem_new(letters, 2, forbidden, 2, 8, &h.p) == GJC_OK);
    Result out;
    REQUIRE(gjc_clusters(h.p, "aaab", GJC_FORMAT_JSON, &out.s) == GJC_OK);
    const json j = out.parsed();
    CHECK(j["occurrences"].size() == 3);
    CHECK(j["clusters"].size() == 2);
    CHECK(j["polynomial_subset"] == "t^2 + t^3");
    CHECK(j["polynomial_recurrence"].is_null());  // the set is not reduced

    Result bad;
    CHECK(gjc_clusters(h.p, "axb", GJC_FORMAT_TEXT, &bad.s) == GJC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("m-table endpoint") {
    auto h = make_single_letter_problem();
    Result out;
    REQUIRE(gjc_m_table(h.p, "all", 1, GJC_FORMAT_JSON, &out.s) == GJC_OK);
    const json j = out.parsed();
    REQUIRE(j["entries"].size() == 11);
    CHECK(j["entries"][0]["word"] == "1");
    CHECK(j["entries"][0]["M"] == 1);
    CHECK(j["entries"][2]["M"] == 0);
    CHECK(j["entries"][3]["M"] == 1);
    CHECK(j["entries"][10]["M"] == -1);
}

TEST_CASE("salient endpoint") {
    auto h = make_single_letter_problem();
    Result out;
    REQUIRE(gjc_salient(h.p, GJC_FORMAT_JSON, &out.s) == GJC_OK);
    const json j = out.parsed();
    REQUIRE(j["records"].size() == 6);
    CHECK(j["records"][0]["word"] == "aaa");
    CHECK(j["records"][0]["sign"] == 1);
    CHECK(j["records"][0]["witness"].is_null());
    CHECK(j["records"][1]["word"] == "aaaa");
    CHECK(j["records"][1]["chain"].size() == 2);
}

TEST_CASE("mobius endpoint") {
    Result out;
    REQUIRE(gjc_mobius(R"({"intervals": [[1,2],[2,3],[3,4],[4,5]]})", "all", 1,
                       GJC_FORMAT_JSON, &out.s) == GJC_OK);
    const json j = out.parsed();
    CHECK(j["mu_top"]["recursive"] == -1);
    CHECK(j["mu_top"]["crosscut"] == -1);
    CHECK(j["mu_top"]["cluster"] == -1);
    CHECK(j["greene"]["pass"] == true);

    Result bad;
    CHECK(gjc_mobius("{\"intervals\": []}", "all", 0, GJC_FORMAT_TEXT, &bad.s) ==
          GJC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify endpoint") {
    auto h = make_single_letter_problem();
    Result out;
    const gjc_status status = gjc_verify(h.p, 5, 42, GJC_FORMAT_JSON, &out.s);
    CHECK(status == GJC_OK);
    const json j = out.parsed();
    CHECK(j["pass"] == true);
    for (const auto& check : j["checks"]) CHECK(check["pass"] == true);
}
