#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(COVTOP_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/covtop_cli_" + name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
    return path;
}

const char* kFiveDoc = R"({
  "universe": ["1", "2", "3", "4", "5"],
  "covering": [["1", "5"], ["1", "2", "5"], ["3", "4"]]
})";

const char* kAbcDoc = R"({
  "universe": ["a", "b", "c"],
  "covering": [["a"], ["b"], ["a", "b", "c"]]
})";

}  // namespace

TEST_CASE("argument errors exit with the input code") {
    CHECK(run("").exit_code == 1);
    CHECK(run("bogus-subcommand").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("info /tmp/covtop_cli_does_not_exist.json").exit_code == 1);
    auto bad = write_temp("bad.json", "{ not json");
    CHECK(run("info " + bad).exit_code == 1);
    auto uncovered = write_temp("uncovered.json",
                                R"({"universe": ["a", "b"], "covering": [["a"]]})");
    CHECK(run("info " + uncovered).exit_code == 1);
}

TEST_CASE("info renders classifiers and emits machine JSON") {
    auto path = write_temp("five.json", kFiveDoc);
    auto human = run("info " + path);
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("unary:               yes") != std::string::npos);

    auto machine = run("info --json " + path);
    CHECK(machine.exit_code == 0);
    auto j = json::parse(machine.out);
    CHECK(j["schema_version"] == "1");
    CHECK(j["command"] == "info");
    CHECK(j["payload"]["unary"] == true);
}

TEST_CASE("approx computes single operators and the all-ops table") {
    auto path = write_temp("five.json", kFiveDoc);
    auto r = run("approx --set 2,3,4 --op CL --json " + path);
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["payload"]["results"]["CL"] == json({"3", "4"}));

    auto all = run("approx --set 2,3,4 --all-ops --json " + path);
    auto ja = json::parse(all.out);
    CHECK(ja["payload"]["results"].size() == 7);
    CHECK(ja["payload"]["results"]["FH"] == json({"1", "2", "3", "4", "5"}));
    CHECK(ja["payload"]["duality"][0]["dual"] == false);

    // An empty label list is the empty set, not an error.
    auto empty = run("approx --set \"\" --op CL --json " + path);
    CHECK(empty.exit_code == 0);
    CHECK(json::parse(empty.out)["payload"]["results"]["CL"] == json::array());

    CHECK(run("approx --set 2 --op NOPE " + path).exit_code == 1);
    CHECK(run("approx --set zz --op CL " + path).exit_code == 1);
}

TEST_CASE("topology reports the induced topology per kind") {
    auto path = write_temp("abc.json", kAbcDoc);
    auto r = run("topology --kind XL --json " + path);
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["payload"]["verified"] == true);
    CHECK(j["payload"]["separation"]["normal"] == true);
    CHECK(j["payload"]["separation"]["regular"] == false);
    CHECK(run("topology --kind NOPE " + path).exit_code == 1);
}

TEST_CASE("verify reports all claims; strict mode tolerates flagged failures") {
    auto path = write_temp("five.json", kFiveDoc);
    auto r = run("verify --json " + path);
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["payload"]["claims"].size() == 28);

    // The only failing claim on this covering is the flagged one, so strict
    // mode still exits cleanly.
    auto strict = run("verify --strict --json " + path);
    CHECK(strict.exit_code == 0);
    bool saw_flagged_failure = false;
    auto js = json::parse(strict.out);
    for (const auto& c : js["payload"]["claims"]) {
        if (c["verdict"] == "fails") {
            CHECK(c["flagged"] == true);
            saw_flagged_failure = true;
        }
    }
    CHECK(saw_flagged_failure);

    auto subset = run("verify --claims thm.txl-topology,thm.nx-base --json " + path);
    CHECK(json::parse(subset.out)["payload"]["claims"].size() == 2);
    CHECK(run("verify --claims thm.nope " + path).exit_code == 1);
}

TEST_CASE("suite runs exhaustively, deterministically, and respects limits") {
    auto a = run("suite --n 3 --json");
    auto b = run("suite --n 3 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);  // byte-identical machine reports
    auto j = json::parse(a.out);
    CHECK(j["payload"]["coverings_evaluated"] == 115);
    CHECK(j["payload"]["oracle_counts"]["3"] == 109);
    CHECK(j["payload"]["tallies"]["thm.tfh-tsh-containment"]["fails"] == 57);

    CHECK(run("suite --n 5").exit_code == 3);  // exhaustive beyond the enumerator
    CHECK(run("suite --n 0").exit_code == 1);
    CHECK(run("suite --n 3 --mode nonsense").exit_code == 1);

    auto sampled = run("suite --n 5 --mode sampled --samples 20 --seed 9 --json");
    CHECK(sampled.exit_code == 0);
    CHECK(json::parse(sampled.out)["payload"]["mode"] == "sampled");
}

TEST_CASE("--out writes the machine report even in human mode") {
    auto path = write_temp("five.json", kFiveDoc);
    std::string out = "/tmp/covtop_cli_report.json";
    std::remove(out.c_str());
    auto r = run("info --out " + out + " " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("unary:") != std::string::npos);  // human text on stdout
    std::ifstream f(out);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    auto j = json::parse(ss.str());
    CHECK(j["command"] == "info");
}

TEST_CASE("COVTOP_BUDGET tightens sweeps and rejects nonsense") {
    auto path = write_temp("five.json", kFiveDoc);
    CHECK(run("approx --set 2 --all-ops " + path, "COVTOP_BUDGET=2").exit_code == 3);
    CHECK(run("topology --kind XL " + path, "COVTOP_BUDGET=2").exit_code == 3);
    CHECK(run("info " + path, "COVTOP_BUDGET=abc").exit_code == 1);
    CHECK(run("info " + path, "COVTOP_BUDGET=-4").exit_code == 1);
    CHECK(run("info " + path, "COVTOP_BUDGET=14").exit_code == 0);
}
