#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "schurtab/cli.hpp"
#include "schurtab/json_io.hpp"

using namespace schurtab;
using nlohmann::json;

namespace {

struct CliResult {
    int exitCode;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("count subcommand") {
    CliResult r = run({"count", "--group", "sp", "--rank", "2", "--shape", "1,1"});
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 5);
    CHECK(j["family"] == "sp");
}

TEST_CASE("enumerate subcommand emits filling json") {
    CliResult r = run({"enumerate", "--group", "o-odd", "--rank", "1", "--shape", "1"});
    CHECK(r.exitCode == 0);
    json arr = json::parse(r.out);
    REQUIRE(arr.size() == 3);
    CHECK(arr[0]["rows"][0][0] == 1);
    CHECK(arr[1]["rows"][0][0] == -1);
    CHECK(arr[2]["rows"][0][0] == 0);
}

TEST_CASE("weightpoly subcommand") {
    CliResult r = run({"weightpoly", "--group", "sp", "--rank", "1", "--shape", "1"});
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["exp2"][0] == -2);
    CHECK(j["terms"][1]["exp2"][0] == 2);
}

TEST_CASE("straighten subcommand reads a filling file") {
    std::string path = "cli_input_column.json";
    {
        std::ofstream f(path);
        f << R"({"shape": [1,1], "spin": false, "rank": 2, "rows": [[1],[-1]]})";
    }
    CliResult r = run({"straighten", "--group", "sp", "--rank", "2", "--input", path});
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    REQUIRE(j["output"]["terms"].size() == 1);
    CHECK(j["output"]["terms"][0]["coeff"] == "-1");
    CHECK(j["output"]["terms"][0]["filling"]["rows"] == json::parse("[[2],[-2]]"));
    CHECK(j["method"] == "combinatorial");
    std::remove(path.c_str());
}

TEST_CASE("verify dim: per-shape table and exit codes") {
    CliResult r = run({"verify", "dim", "--group", "o-odd", "--rank", "1", "--max-size", "4"});
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    for (const json& row : j["results"])
        if (row["shape"].size() == 1) {
            long long m = row["shape"][0].get<long long>();
            CHECK(row["quotientDim"] == 2 * m + 1);
        }

    CliResult fault = run({"verify", "dim", "--group", "o-odd", "--rank", "1", "--max-size", "3",
                           "--inject-fault"});
    CHECK(fault.exitCode == 1);
    CliResult faultInd = run({"verify", "independence", "--group", "sp", "--rank", "1",
                              "--max-size", "3", "--inject-fault"});
    CHECK(faultInd.exitCode == 1);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"count", "--group", "nosuch", "--rank", "1", "--shape", "1"}).exitCode == 2);
    CHECK(run({"count", "--group", "sp", "--shape", "1"}).exitCode == 2); // missing rank
    CHECK(run({"nosuchcommand"}).exitCode == 2);
    CHECK(run({"verify", "independence", "--group", "sundaram", "--rank", "1"}).exitCode == 2);
    // resource bound
    CHECK(run({"verify", "closure", "--group", "sp", "--rank", "2", "--max-size", "3",
               "--max-dim", "0"}).exitCode == 0); // per-shape skips are reported, not fatal
}

TEST_CASE("output is byte-stable across runs") {
    std::vector<std::string> args = {"verify", "straighten-soundness", "--group", "sp",
                                     "--rank", "1", "--max-size", "3", "--samples", "25",
                                     "--seed", "7"};
    CliResult a = run(args), b = run(args);
    CHECK(a.exitCode == 0);
    CHECK(a.out == b.out);
    std::vector<std::string> parallel = args;
    parallel.push_back("--threads");
    parallel.push_back("2");
    CHECK(run(parallel).out == a.out);
}

TEST_CASE("help text lists the subcommands") {
    CliResult r = run({"--help"});
    CHECK(r.exitCode == 0);
    for (const char* cmd : {"enumerate", "count", "weightpoly", "straighten", "verify", "report"})
        CHECK(r.out.find(cmd) != std::string::npos);
}
