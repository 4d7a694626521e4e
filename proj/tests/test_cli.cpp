// End-to-end checks of the command line tool: real process invocations,
// parsed JSON reports, exit codes, and byte-stable output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "nlohmann/json.hpp"

namespace {

using json = nlohmann::ordered_json;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/odolab_cli_out.txt";
    const std::string err_path = "/tmp/odolab_cli_err.txt";
    const std::string cmd =
        std::string(ODOLAB_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("classify reports profile and torsion over the wire") {
    const RunResult r = run_cli(R"(classify --json '{"head":[9],"cycle":[2]}')");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    CHECK(report["schema"] == "odolab/1");
    CHECK(report["command"] == "classify");
    CHECK(report["profile"] == json::parse(R"({"2":"inf","3":2})"));
    CHECK(report["torsion_class"] == "FiniteTorsion");
    CHECK(report["torsion_orders"] == json::array({9}));

    // The profile spelling of the same chain gives the same answers.
    const RunResult p = run_cli(R"(classify --json '{"profile":{"2":"inf","3":2}}')");
    REQUIRE(p.exit_code == 0);
    CHECK(json::parse(p.out)["torsion_orders"] == json::array({9}));
}

TEST_CASE("compare emits the three verdict kinds") {
    const RunResult distinct =
        run_cli(R"(compare --json '{"head":[],"cycle":[2]}' '{"head":[],"cycle":[3]}')");
    REQUIRE(distinct.exit_code == 0);
    const json dj = json::parse(distinct.out)["verdict"];
    CHECK(dj["kind"] == "DistinctByInfiniteSupport");
    CHECK(dj["witness_prime"] == 2);
    CHECK(dj["divergence_level"] == 2);

    const RunResult equiv =
        run_cli(R"(compare --json '{"head":[],"cycle":[2]}' '{"head":[],"cycle":[4]}')");
    REQUIRE(equiv.exit_code == 0);
    CHECK(json::parse(equiv.out)["verdict"]["kind"] == "EquivalentScales");

    const RunResult torsion =
        run_cli(R"(compare --json '{"head":[],"cycle":[2]}' '{"head":[9],"cycle":[2]}')");
    REQUIRE(torsion.exit_code == 0);
    const json tj = json::parse(torsion.out)["verdict"];
    CHECK(tj["kind"] == "SameInfiniteSupport");
    CHECK(tj["torsion_left"] == json::array());
    CHECK(tj["torsion_right"] == json::array({9}));
    CHECK(tj["note"].get<std::string>().find("cannot separate") != std::string::npos);
}

TEST_CASE("components and fgrowth wrap the library answers") {
    const RunResult c = run_cli(R"(components --json '{"head":[],"cycle":[2]}' 6)");
    REQUIRE(c.exit_code == 0);
    const json cj = json::parse(c.out);
    CHECK(cj["splitting"] == 2);
    CHECK(cj["cotorsion"] == 3);
    CHECK(cj["stabilization_index"] == 1);
    CHECK(cj["component_profile"] == json::parse(R"({"2":"inf"})"));

    const RunResult f = run_cli(R"(fgrowth --json '{"head":[],"cycle":[2]}' 2,4,8)");
    REQUIRE(f.exit_code == 0);
    const json fj = json::parse(f.out);
    CHECK(fj["levels"] == json::array({2, 4, 8}));
    CHECK(fj["f"] == json::array({"2", "24", "40320"}));
}

TEST_CASE("toeplitz reports windows and analyses") {
    const RunResult r = run_cli(
        "toeplitz paper54 --json --stages 8 --window 4096 --candidates 2,4,8,16 "
        "--sigma 2 --fbound 4 --complexity-len 2");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    CHECK(report["rule"] == "paper54");
    CHECK(report["window"]["symbols"].get<std::string>().substr(0, 27) ==
          "000110010011100100011011001");
    CHECK(report["essential_periods"]["chain"] == json::array({4, 16}));
    CHECK(report["sigma"]["splitting"] == 2);
    CHECK(report["sigma"]["representatives"].size() == 2);
    CHECK(report["f_lower_bound"][0]["bound"] == "24");
    CHECK(report["complexity"]["2"] == 4);
}

TEST_CASE("spec files replace inline arguments") {
    const std::string path = "/tmp/odolab_cli_spec.json";
    {
        std::ofstream out(path);
        out << R"({"scale":{"head":[],"cycle":[2]},"multiplier":"6"})";
    }
    const RunResult r = run_cli("components --json --spec " + path);
    std::remove(path.c_str());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["splitting"] == 2);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string args =
        "toeplitz paper53 --json --stages 10 --window 2048 --candidates 2,4,8,16 --per 4";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("bad inputs exit nonzero with a diagnostic") {
    const RunResult finite = run_cli(R"(classify '{"head":[],"cycle":[1]}')");
    CHECK(finite.exit_code == 1);
    CHECK(finite.err.find("finite scale") != std::string::npos);

    const RunResult garbage = run_cli("classify not-json");
    CHECK(garbage.exit_code == 1);
    CHECK(garbage.err.find("not valid JSON") != std::string::npos);

    const RunResult missing = run_cli("classify");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("missing") != std::string::npos);

    const RunResult unknown = run_cli("frobnicate");
    CHECK(unknown.exit_code != 0);
}

TEST_CASE("verify runs its oracle suites and honors a zero budget") {
    const RunResult r = run_cli("verify --json --budget 600");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    CHECK(report["ok"] == true);
    bool saw_checks = false;
    for (const json& suite : report["suites"]) {
        CHECK(suite["mismatches"] == 0);
        if (suite["checks"].get<int>() > 0) saw_checks = true;
    }
    CHECK(saw_checks);

    const RunResult lazy = run_cli("verify --json --budget 0");
    REQUIRE(lazy.exit_code == 0);
    const json lazy_report = json::parse(lazy.out);
    CHECK(lazy_report["warning"].get<std::string>().find("nothing verified") !=
          std::string::npos);
    CHECK(lazy_report["suites"].empty());
}
