#include <doctest.h>

#include "torgr/error.hpp"
#include "torgr/verify.hpp"

using namespace torgr;

TEST_CASE("check ids are stable") {
    auto ids = check_ids();
    CHECK(ids.size() == 13);
    CHECK(ids.front() == "h24-line");
    CHECK_THROWS_AS(run_check("nope"), InvalidParameter);
}

TEST_CASE("results come back in selection order and serialize") {
    SuiteOptions o;
    o.parallelism = 2;
    auto rs = run_suite({"degenerate-locus", "h24-line", "h-quotient-31"}, o);
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].id == "degenerate-locus");
    CHECK(rs[1].id == "h24-line");
    for (const auto& r : rs) {
        CHECK(r.status == CheckStatus::pass);
        auto back = check_result_from_json(to_json(r));
        CHECK(back.id == r.id);
        CHECK(back.status == r.status);
        CHECK_FALSE(to_json(r).contains("elapsed"));
    }
    auto doc = report_document(rs, o);
    CHECK(doc["kind"] == "verify-report");
}

TEST_CASE("reports are reproducible for a fixed seed") {
    SuiteOptions o;
    o.seed = 42;
    auto a = report_document(run_suite({"orbit-gb-buchberger", "engine-properties"}, o), o);
    auto b = report_document(run_suite({"orbit-gb-buchberger", "engine-properties"}, o), o);
    CHECK(a == b);
}

TEST_CASE("a tight budget yields resource-exceeded, not a failure") {
    SuiteOptions o;
    o.engine.budget.max_spairs = 3;
    auto r = run_check("orbit-gb-oracle", o);
    CHECK(r.status == CheckStatus::resource_exceeded);
}
