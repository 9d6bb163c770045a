#include <doctest.h>

#include <fstream>
#include <sstream>

#include <semple/cli.hpp>
#include <semple/contact.hpp>
#include <semple/json_io.hpp>

using namespace semple;

namespace {

std::string fixture(const std::string &name)
{
    std::ifstream in(std::string(SEMPLE_FIXTURES) + "/" + name);
    REQUIRE_MESSAGE(in.good(), name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult call(const std::string &sub, const std::string &input = "", std::vector<std::string> args = {},
               const std::string &format = "")
{
    RunConfig c;
    c.subcommand = sub;
    c.args = std::move(args);
    c.format = format;
    return run(c, input);
}

Json parsed(const RunResult &r) { return Json::parse(r.output); }

} // namespace

TEST_CASE("ring 2 prints the pairing table")
{
    const auto r = call("ring", "", {"2"});
    REQUIRE(r.exit_code == 0);
    const auto j = parsed(r);
    CHECK(j["level"] == 2);
    CHECK(j["pairing"]["matrix"] == Json::parse("[[1,0,0],[0,1,0],[0,-3,1]]"));
    REQUIRE(j["relations"].size() == 1);
    CHECK(j["relations"][0]["holds"] == true);

    const auto text = call("ring", "", {"2"}, "text");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("holds") != std::string::npos);

    CHECK(call("ring", "", {"0"}).exit_code == 1);
    CHECK(call("ring", "", {"11"}).exit_code == 1);
    CHECK(call("ring", "", {"two"}).exit_code == 1);
    CHECK(call("ring", "", {}).exit_code == 1);
}

TEST_CASE("contact on the Bezout fixture")
{
    const auto r = call("contact", fixture("bezout.json"));
    REQUIRE(r.exit_code == 0);
    const auto j = parsed(r);
    CHECK(j["total"] == 72);
    CHECK(j["warnings"].empty());
    CHECK(call("contact", fixture("bezout.json"), {}, "text").output == "72\n");
}

TEST_CASE("lift on the cusp fixture")
{
    const auto r = call("lift", fixture("cusp.json"));
    REQUIRE(r.exit_code == 0);
    const auto j = parsed(r);
    CHECK(j["kappa"] == Json::parse(R"({"2": 1})"));
    CHECK(j["profound"] == false);
    CHECK(j["flat"] == false);
    CHECK(j["warnings"].is_array());
}

TEST_CASE("lift on a curve")
{
    const std::string in = R"({"degree": 3, "class": 3,
        "branches": [{"x": [[2, 1]], "y": [[3, 1]], "truncation": 12}]})";
    const auto r = call("lift", in);
    REQUIRE(r.exit_code == 0);
    const auto j = parsed(r);
    CHECK(j["characteristics"]["degree"] == 3);
    CHECK(j["characteristics"]["kappa"]["2"] == 1);
    CHECK(j["branches"].size() == 1);
}

TEST_CASE("module")
{
    const auto curve = R"({"degree": 4, "class": 12})";
    const auto r = call("module", curve, {"2"});
    REQUIRE(r.exit_code == 0);
    const auto j = parsed(r);
    CHECK(j["curve"]["degree"] == 4);
    CHECK(j.contains("module"));

    const auto text = call("module", curve, {"2"}, "text");
    CHECK(text.output == module_text(curve_module(curve_from_json(Json::parse(curve)), 2)) + "\n");

    CHECK(call("module", R"({"level": 2, "curve": {"degree": 4, "nonsingular": true}})", {}, "text").output ==
          text.output);
    CHECK(call("module", curve).exit_code == 1);
}

TEST_CASE("errors are machine readable")
{
    const auto bad = call("contact", fixture("malformed.json"));
    CHECK(bad.exit_code == 1);
    const auto j = parsed(bad);
    CHECK(j["error"]["type"] == "InputError");
    CHECK(j["error"]["line"] == 4);
    CHECK(j["error"]["column"].get<int>() > 0);

    const auto short_branch = call("lift", fixture("short_branch.json"));
    CHECK(short_branch.exit_code == 3);
    const auto p = parsed(short_branch);
    CHECK(p["error"]["type"] == "PrecisionError");
    CHECK(p["error"]["required_truncation"].get<int>() > 3);

    for (const auto &r : {call("nonsense"), call("contact", "{}"), call("lift", "[1, 2]"),
                          call("contact", R"({"curves": 1, "orders": [], "family": {}})")}) {
        CHECK(r.exit_code == 1);
        CHECK(parsed(r).contains("error"));
    }
}

TEST_CASE("output formats")
{
    CHECK(call("ring", "", {"2"}, "latex").exit_code == 1);
    CHECK(call("contact", fixture("bezout.json"), {}, "latex").exit_code == 1);
    CHECK(call("ring", "", {"2"}, "yaml").exit_code == 1);

    const auto latex = call("formula", R"({"orders": [2, 2]})", {}, "latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.output.find("\\check d_{D}") != std::string::npos);

    const auto j = parsed(call("formula", R"({"curves": ["C", "D"], "orders": [3, 3]})"));
    CHECK(j["terms"].size() == 6);
    CHECK(j["text"].get<std::string>() + "\n" == call("formula", R"({"orders": [3, 3]})", {}, "text").output);
    CHECK(j["latex"].get<std::string>() + "\n" == call("formula", R"({"orders": [3, 3]})", {}, "latex").output);
}

TEST_CASE("identical runs give identical bytes")
{
    for (int rep = 0; rep < 2; ++rep) {
        CHECK(call("ring", "", {"5"}).output == call("ring", "", {"5"}).output);
        CHECK(call("contact", fixture("bezout.json")).output == call("contact", fixture("bezout.json")).output);
        CHECK(call("lift", fixture("cusp.json")).output == call("lift", fixture("cusp.json")).output);
        CHECK(call("verify").output == call("verify").output);
    }
}

TEST_CASE("verify")
{
    const auto tap = call("verify");
    REQUIRE(tap.exit_code == 0);
    CHECK(tap.output.rfind("TAP version 13\n", 0) == 0);
    CHECK(tap.output.find("not ok") == std::string::npos);
    CHECK(tap.output.find("\x1b[") == std::string::npos);

    const auto j = parsed(call("verify", "", {}, "json"));
    CHECK(j["seed"] == kDefaultSeed);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["cases"].size() > 1000);

    RunConfig c;
    c.subcommand = "verify";
    c.format = "json";
    c.seed = 7;
    CHECK(parsed(run(c, ""))["seed"] == 7);
}
