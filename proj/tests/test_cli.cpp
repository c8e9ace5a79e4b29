#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using fusion::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("irreducible character as json")
    {
        const auto r = call({"char", "irrep", "--j", "0", "--k", "1", "--qmax4", "16"});
        REQUIRE(r.code == 0);
        const auto j = Json::parse(r.out);
        CHECK(j["qmax4"] == 16);
        std::vector<std::string> z0;
        for (const auto& t : j["terms"]) {
            if (t["z2"] == 0)
                z0.push_back(t["c"]);
        }
        CHECK(z0 == std::vector<std::string>{"1", "1", "2", "3", "5"});
    }

    TEST_CASE("decomposition with verification")
    {
        const auto r = call({"decompose", "--d", "0,2,0", "--verify", "--qmax4", "80"});
        REQUIRE(r.code == 0);
        const auto j = Json::parse(r.out);
        REQUIRE(j["K"].size() == 2);
        CHECK(j["K"][0]["j"] == 0);
        CHECK(j["K"][0]["poly"] == "1");
        CHECK(j["K"][1]["j"] == 2);
        CHECK(j["K"][1]["poly"] == "q");
        CHECK(j["verified"] == true);
        CHECK(j["verlinde"] == Json::parse("[1,0,1]"));
        CHECK_FALSE(Json::parse(call({"decompose", "--d", "0,2,0"}).out).contains("verified"));
    }

    TEST_CASE("verlinde coefficients")
    {
        const auto r = call({"verlinde", "--d", "0,2,0"});
        CHECK(r.code == 0);
        CHECK(r.out == "[1,0,1]\n");
    }

    TEST_CASE("text format and qmax")
    {
        CHECK(call({"char", "fusion", "--a", "2,2", "--format", "text"}).out == "1 + z + z*q + z^2*q^2\n");
        CHECK(call({"--format", "text", "char", "fusion", "--a", "1,2,2"}).out == "1 + z + z*q + z^2*q^2\n");
        CHECK(call({"char", "ld", "--d", "0,0", "--qmax", "2"}).out ==
              call({"char", "ld", "--d", "0,0", "--qmax4", "8"}).out);
        CHECK(call({"char", "ld", "--d", "0,0", "--qmax", "2", "--qmax4", "8"}).code == 2);
    }

    TEST_CASE("usage errors exit with 2")
    {
        CHECK(call({}).code == 2);
        CHECK(call({"frobnicate"}).code == 2);
        CHECK(call({"char", "fusion"}).code == 2);
        CHECK(call({"char", "fusion", "--a", "2", "--bogus"}).code == 2);
        CHECK(call({"char", "ld", "--d", "0,0,2"}).code == 2);
        CHECK(call({"char", "ld", "--d", "0,x"}).code == 2);
        CHECK(call({"verify", "everything"}).code == 2);
        CHECK(call({"char", "ld", "--d", "0,0", "--qmax4", "-4"}).code == 2);
        CHECK(call({"oracle", "embed", "--d", "0,0", "--k", "2"}).code == 2);
        const auto r = call({"frobnicate"});
        CHECK(r.err.find("Usage") != std::string::npos);
        CHECK(call({"--help"}).code == 0);
    }

    TEST_CASE("oracle commands")
    {
        CHECK(Json::parse(call({"oracle", "dim", "--a", "2,2"}).out)["dim"] == "4");
        CHECK(call({"oracle", "gradedchar", "--a", "2,2", "--qmax4", "40"}).out ==
              call({"char", "minf", "--d", "0,2", "--qmax4", "40"}).out);
        CHECK(call({"oracle", "annihilate", "--a", "2,2", "--imax", "3"}).code == 0);
        const auto e = call({"oracle", "embed", "--d", "0,0", "--k", "1"});
        CHECK(e.code == 0);
        CHECK(Json::parse(e.out)["holds"] == true);
        CHECK(call({"oracle", "extremal", "--b", "2,1", "--qmax4", "24"}).code == 0);
    }

    TEST_CASE("cutoff from the environment")
    {
        ::setenv("FUSION_CUTOFF", "1", 1);
        CHECK(call({"oracle", "gradedchar", "--a", "4,4"}).code == 1);
        ::setenv("FUSION_CUTOFF", "nope", 1);
        CHECK(call({"oracle", "dim", "--a", "2"}).code == 2);
        ::unsetenv("FUSION_CUTOFF");
        CHECK(call({"oracle", "gradedchar", "--a", "4,4"}).code == 0);
    }

    TEST_CASE("basis counts")
    {
        CHECK(call({"basis", "count", "--d", "0,0", "--qmax4", "40"}).out ==
              call({"char", "winf", "--d", "0,0", "--qmax4", "40"}).out);
        CHECK(call({"basis", "count", "--d", "0,0,0", "--s", "6", "--qmax4", "24"}).out ==
              call({"char", "ld", "--d", "0,0,0", "--qmax4", "24"}).out);
        CHECK(call({"basis", "count", "--d", "0,0", "--bound", "sideways"}).code == 2);
    }

    TEST_CASE("verification suites")
    {
        const auto rec = call({"verify", "recursions", "--k", "2", "--qmax4", "60"});
        CHECK(rec.code == 0);
        const auto j = Json::parse(rec.out);
        CHECK(j["failed"] == 0);
        CHECK(j["passed"].get<int>() > 0);
        CHECK(call({"verify", "oracle", "--max-dim", "12"}).code == 0);
        CHECK(call({"verify", "verlinde", "--max-level", "6"}).code == 0);
        CHECK(call({"verify", "basis", "--k", "2", "--qmax4", "40"}).code == 0);
        CHECK(call({"verify", "stabilize", "--k", "2", "--qmax4", "32"}).code == 0);
    }

    TEST_CASE("a failing check exits with 1")
    {
        // The quadratic lower bound undercounts from level two on.
        const auto r = call({"verify", "basis", "--k", "2", "--qmax4", "24", "--bound", "intro"});
        CHECK(r.code == 1);
        CHECK(Json::parse(r.out)["failed"].get<int>() > 0);
        CHECK(call({"verify", "basis", "--k", "1", "--qmax4", "24", "--bound", "intro"}).code == 0);
    }

    TEST_CASE("output is deterministic and can go to a file")
    {
        const std::vector<std::string> args{"decompose", "--d", "0,2,1,1", "--verify", "--qmax4", "40"};
        CHECK(call(args).out == call(args).out);
        const auto path = std::filesystem::temp_directory_path() / "fusion_cli_test.json";
        auto with_file = args;
        with_file.push_back("--output");
        with_file.push_back(path.string());
        const auto r = call(with_file);
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        std::stringstream text;
        text << in.rdbuf();
        CHECK(text.str() == call(args).out);
        std::filesystem::remove(path);
    }
}
