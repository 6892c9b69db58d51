// Drives the installed command-line binary end to end.  The binary path and
// the fixture directory arrive as plain arguments ahead of the doctest ones.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli_path;
std::string fixture_dir;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = cli_path + " " + args + " 2>/dev/null";
    std::array<char, 512> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string fixture(const std::string& name) { return fixture_dir + "/" + name; }

}  // namespace

TEST_CASE("check-asl reports the violating combination") {
    RunResult r = run("check-asl " + fixture("asl_two_thirds.json") + " --json");
    CHECK(r.exit_code == 1);
    json body = json::parse(r.output);
    CHECK(body["command"] == "check-asl");
    CHECK(body["avoids_sure_loss"] == false);
    CHECK(body["certificate"]["lambda"] == json::array({"1", "1"}));
}

TEST_CASE("extend rejects the two-to-three point mass") {
    RunResult r = run("extend " + fixture("point_mass_n2.json") + " --to 3 --json");
    CHECK(r.exit_code == 1);
    json body = json::parse(r.output);
    CHECK(body["extendable"] == false);
    CHECK(body["separating_gamble"] == json{{"0:1,1:1", "1"}});
    CHECK(body["separating_upper"] == "2/3");
    CHECK(body["separating_base"] == "1");
}

TEST_CASE("vacuous value of a tuple indicator") {
    RunResult r = run("vacuous " + fixture("vacuous_n3.json") +
                      " --gamble '{\"default\":\"0\",\"values\":{\"1,0,1\":\"1\"}}' --json");
    CHECK(r.exit_code == 0);
    json body = json::parse(r.output);
    CHECK(body["value"] == "0");
    CHECK_FALSE(body.contains("decimal"));

    // The human rendering carries both the fraction and its decimal.
    RunResult human = run("vacuous " + fixture("vacuous_n3.json") +
                          " --gamble '{\"default\":\"0\",\"values\":{\"1,0,1\":\"1\"}}'");
    CHECK(human.exit_code == 0);
    CHECK(human.output.find("value: 0 = 0.00000000000000000000") != std::string::npos);
}

TEST_CASE("natex and ene agree with the library examples") {
    RunResult natex = run("natex " + fixture("one_sided_coin.json") +
                          " --gamble '{\"default\":\"0\",\"values\":{\"1\":\"1\"}}' --json");
    CHECK(natex.exit_code == 0);
    CHECK(json::parse(natex.output)["value"] == "0");

    RunResult ene = run("ene " + fixture("ene_pair.json") +
                        " --gamble '{\"default\":\"0\",\"values\":{\"1,1\":\"1\"}}' --json");
    CHECK(ene.exit_code == 0);
    json body = json::parse(ene.output);
    CHECK(body["exists"] == true);
    CHECK(body["value"] == "1/2");

    RunResult no = run("ene " + fixture("ene_broken.json") +
                       " --gamble '{\"default\":\"0\"}' --json");
    CHECK(no.exit_code == 1);
    CHECK(json::parse(no.output)["exists"] == false);
}

TEST_CASE("check-coherence spots dominated duplicate prices") {
    RunResult r = run("check-coherence " + fixture("dominated.json") + " --json");
    CHECK(r.exit_code == 1);
    json body = json::parse(r.output);
    CHECK(body["coherent"] == false);
    CHECK(body["violating_item"] == 0);
    CHECK(body["raised_value"] == "1/2");
}

TEST_CASE("binomial level files are time consistent and extend") {
    std::string levels = fixture("cobi_1.json") + " " + fixture("cobi_2.json") + " " +
                         fixture("cobi_3.json");
    RunResult r = run("time-consistent " + levels + " --json");
    CHECK(r.exit_code == 0);
    json body = json::parse(r.output);
    CHECK(body["consistent"] == true);
    CHECK(body["decision_complete"] == true);

    RunResult ext = run("extend " + fixture("cobi_2.json") + " --to 3 --json");
    CHECK(ext.exit_code == 0);
    CHECK(json::parse(ext.output)["extendable"] == true);

    RunResult rep = run("represent " + levels + " --poly '0,2:1' --moments 3 --json");
    CHECK(rep.exit_code == 0);
    json rbody = json::parse(rep.output);
    CHECK(rbody["value"] == "1/4");
    CHECK(rbody["moments"] == json::array({"1", "1/2", "1/4", "1/8"}));

    RunResult conv = run("converge " + levels + " --poly '0,2:1' --levels 1..3 --json");
    CHECK(conv.exit_code == 0);
    json cbody = json::parse(conv.output);
    CHECK(cbody["limit"] == "1/4");
    CHECK(cbody["values"][0]["value"] == "1/2");
    CHECK(cbody["values"][1]["value"] == "3/8");
    CHECK(cbody["values"][2]["value"] == "1/3");

    RunResult ms = run("meansq " + levels +
                       " --f '{\"default\":\"0\",\"values\":{\"1\":\"1\"}}' --n 1 --p 1 --json");
    CHECK(ms.exit_code == 0);
    json mbody = json::parse(ms.output);
    CHECK(mbody["upper_value"] == "1/8");
    CHECK(mbody["bound"] == "1");
    CHECK(mbody["pass"] == true);
}

TEST_CASE("bernstein subcommands") {
    RunResult dec = run("bernstein decompose --labels 0,1 --poly '0,2:1' --degree 3 --json");
    CHECK(dec.exit_code == 0);
    json body = json::parse(dec.output);
    CHECK(body["coefficients"] == json({{"0:1,1:2", "1/3"}, {"1:3", "1"}}));

    RunResult ev = run(
        "bernstein eval --labels 0,1 --degree 2 "
        "--coeffs '{\"default\":\"0\",\"values\":{\"0:1,1:1\":\"1/2\",\"1:2\":\"1\"}}' "
        "--theta '1/2,1/2' --json");
    CHECK(ev.exit_code == 0);
    CHECK(json::parse(ev.output)["value"] == "1/2");

    RunResult el = run(
        "bernstein elevate --labels 0,1 --degree 1 "
        "--coeffs '{\"default\":\"0\",\"values\":{\"1:1\":\"1\"}}' --by 1 --json");
    CHECK(el.exit_code == 0);
    CHECK(json::parse(el.output)["coefficients"] == json({{"0:1,1:1", "1/2"}, {"1:2", "1"}}));

    RunResult en = run(
        "bernstein enclose --labels 0,1 --degree 2 "
        "--coeffs '{\"default\":\"0\",\"values\":{\"0:1,1:1\":\"1/2\"}}' --to 4 --json");
    CHECK(en.exit_code == 0);
    json ebody = json::parse(en.output);
    CHECK(ebody["intervals"][0] == json::array({"0", "1/2"}));
    CHECK(ebody["intervals"][1] == json::array({"0", "1/3"}));
    CHECK(ebody["intervals"][2] == json::array({"0", "1/3"}));
    CHECK(ebody["grid_max"] == "1/4");
    CHECK(ebody["gap_max"] == "1/12");
    CHECK(ebody["gap_min"] == "0");
}

TEST_CASE("enumeration caps exit 3") {
    std::string big = fixture_dir + "/generated_big.json";
    {
        std::ofstream out(big);
        out << R"({"labels": ["0","1"], "N": 40, "mode": "tuple", "items": []})";
    }
    RunResult r = run("vacuous " + big + " --gamble '{\"default\":\"0\"}'");
    CHECK(r.exit_code == 3);
}

TEST_CASE("natex flags sure loss instead of a value") {
    std::string losing = fixture_dir + "/generated_losing.json";
    {
        std::ofstream out(losing);
        out << R"({"labels": ["0","1"], "N": 1, "mode": "tuple",
                   "items": [{"gamble": {"default": "0", "values": {"0": "1"}},
                              "price": "2/3"},
                             {"gamble": {"default": "0", "values": {"1": "1"}},
                              "price": "2/3"}]})";
    }
    RunResult r = run("natex " + losing +
                      " --gamble '{\"default\":\"0\",\"values\":{\"0\":\"1\"}}' --json");
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.output)["sure_loss"] == true);
}

TEST_CASE("represent honors an explicit degree") {
    std::string levels = fixture("cobi_1.json") + " " + fixture("cobi_2.json") + " " +
                         fixture("cobi_3.json");
    RunResult low = run("represent " + levels + " --poly '0,1:1' --json");
    RunResult high = run("represent " + levels + " --poly '0,1:1' --degree 3 --json");
    CHECK(low.exit_code == 0);
    CHECK(high.exit_code == 0);
    CHECK(json::parse(low.output)["value"] == "1/2");
    CHECK(json::parse(high.output)["value"] == "1/2");
    CHECK(json::parse(high.output)["level"] == 3);
}

TEST_CASE("malformed files exit 2 and name the offending key") {
    std::string bad = fixture_dir + "/generated_bad.json";
    {
        std::ofstream out(bad);
        out << R"({"labels": ["0","1"], "N": 2, "mode": "tuple",
                   "items": [{"gamble": {"default": "0", "values": {"2,0": "1"}},
                              "price": "1/2"}]})";
    }
    std::string command = cli_path + " check-asl " + bad + " 2>&1";
    std::array<char, 512> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(output.find("items[0].gamble.values.2,0") != std::string::npos);

    RunResult missing = run("check-asl " + fixture_dir + "/no_such_file.json");
    CHECK(missing.exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <cli-binary> <fixture-dir> [doctest args]\n");
        return 64;
    }
    cli_path = argv[1];
    fixture_dir = argv[2];
    doctest::Context context;
    context.applyCommandLine(argc - 2, argv + 2);
    return context.run();
}
