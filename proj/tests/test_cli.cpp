#include <doctest.h>

#include "examples.hpp"
#include "runner.hpp"

using namespace pstrata;
using namespace pstrata::cli;

TEST_CASE("example registry is populated and passes") {
    CHECK(example_registry().size() >= 10);
    for (const auto& e : example_registry()) {
        CHECK_FALSE(e.about.empty());
        Json r = run_example(e.name);
        INFO(e.name, ": ", r["mismatches"].dump());
        CHECK(r["pass"] == true);
    }
}

TEST_CASE("reports are deterministic across thread counts") {
    Json input{{"field", "Q"},
               {"dimension", 2},
               {"generators",
                Json::array({Json::array({Json::array({-1, 0}), Json::array({0, -1})})})}};
    auto r1 = run_tool({"vgamma", "verify", "--samples", "3", "--seed", "5", "--threads", "1"},
                       input);
    auto r4 = run_tool({"vgamma", "verify", "--samples", "3", "--seed", "5", "--threads", "4"},
                       input);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r4.exit_code == 0);
    CHECK(r1.report["result"] == r4.report["result"]);
    CHECK(r1.report["result"]["all_ok"] == true);
}

TEST_CASE("exit codes and error objects") {
    SUBCASE("usage error") {
        auto r = run_tool({"no-such-command"});
        CHECK(r.exit_code == 2);
    }
    SUBCASE("unknown flag") {
        auto r = run_tool({"weyl", "census", "--type", "A", "--rank", "2", "--bogus"});
        CHECK(r.exit_code == 2);
    }
    SUBCASE("domain error carries a machine-readable code") {
        auto r = run_tool({"poisson", "core", "--point", "1"},
                          Json{{"field", "Q"},
                               {"variables", {"x", "y"}},
                               {"bracket", Json::array({Json::array({"1"}), Json::array()})}});
        CHECK(r.exit_code == 1);
        CHECK(r.report["error"]["code"] == "dimension_mismatch");
    }
    SUBCASE("budget exhaustion surfaces as code=budget") {
        Json input{{"field", "Q"},
                   {"variables", {"x", "y", "z"}},
                   {"bracket", Json::array({Json::array({"0", "x"}), Json::array({"y"}),
                                            Json::array()})}};
        auto r = run_tool(
            {"poisson", "core", "--point", "1,1,0", "--budget-degree", "3"}, input);
        CHECK(r.exit_code == 1);
        CHECK(r.report["error"]["code"] == "budget");
    }
}

TEST_CASE("report envelope") {
    auto r = run_tool({"weyl", "census", "--type", "A", "--rank", "1"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.report["schema"] == "poisson-strata/1");
    CHECK(r.report.contains("version"));
    CHECK(r.report.contains("timing"));
    CHECK(r.report["result"]["agree"] == true);
    // md and csv renderings exist for tabular results
    CHECK_FALSE(render_report(r.report, "md").empty());
    CHECK(render_report(r.report, "csv").find("p_k") != std::string::npos);
}

TEST_CASE("census command output") {
    auto r = run_tool({"weyl", "census", "--type", "B", "--rank", "2"});
    REQUIRE(r.exit_code == 0);
    const auto& body = r.report["result"];
    CHECK(body["agree"] == false);
    CHECK(body["table"][2]["p_k"] == 1);
    CHECK(body["table"][2]["e_k"] == 2);
    auto r2 = run_tool({"weyl", "census", "--type", "A2xA1"});
    CHECK(r2.report["result"]["agree"] == true);
}

TEST_CASE("sra pbw command") {
    auto r = run_tool({"sra", "pbw", "--group", "z2", "--t", "0", "--c", "1", "--degree", "2"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.report["result"]["dims"] == Json::array({2, 6, 12}));
    CHECK(r.report["result"]["pass"] == true);
}
