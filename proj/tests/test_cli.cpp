// Exercises the installed command-line surface end to end by spawning the
// real binary (path injected by the build).

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cmd(const std::string& full_cmd) {
    RunResult res;
    std::string cmd = full_cmd + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t nread;
    while ((nread = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.out.append(buf.data(), nread);
    }
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

RunResult run(const std::string& args) { return run_cmd(std::string(MODCOHOM_BIN) + " " + args); }

}  // namespace

TEST_CASE("table subcommand emits the expected JSON report") {
    RunResult r = run("table --p 5 --algebra sl3 --module simple:3,1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["p"] == 5);
    CHECK(j["cohomology"][1]["dim"] == 3);
    CHECK(j["cohomology"][4]["dim"] == 6);
    CHECK(j["cohomology"][7]["dim"] == 3);
    CHECK(j["cohomology"][0]["dim"] == 0);
    CHECK(j["cohomology"][4]["factors"][0]["weight"][0] == 1);
}

TEST_CASE("table respects degree ranges and only-nonzero") {
    RunResult r = run("table --p 5 --module simple:3,1 --degrees 4 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["cohomology"].size() == 1);
    CHECK(j["cohomology"][0]["degree"] == 4);
    CHECK(j["cohomology"][0]["dim"] == 6);

    RunResult t = run("table --p 5 --module trivial --only-nonzero --format text");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("H^1") == std::string::npos);
    CHECK(t.out.find("H^3") != std::string::npos);

    RunResult c = run("table --p 5 --module simple:3,1 --degrees 4..7 --format csv --only-nonzero");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find(",4,5,0,2,") != std::string::npos);    // degree column survives the cut
    CHECK(c.out.find(",1,5,0,1,") == std::string::npos);    // degree-1 rows are outside the range
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("table --p 4 --module trivial").exit_code == 2);   // not prime
    CHECK(run("table --p 3 --module trivial").exit_code == 2);   // too small
    CHECK(run("table --p 5 --module nope:1,1").exit_code == 2);  // bad family
    CHECK(run("table --p 5").exit_code == 2);                    // missing module
    CHECK(run("frobnicate --p 5").exit_code == 2);               // no such command
    CHECK(run("table --p 5 --module simple:9,0").exit_code == 2);  // weight out of range
}

TEST_CASE("verify exits 0 on an all-pass suite and 1 on mismatches") {
    CHECK(run("verify --suite theorem1 --p 5").exit_code == 0);
    CHECK(run("verify --suite lemma-blocks --p 5").exit_code == 0);
    // two expectation rows in this bundled table are refuted by computation
    RunResult c3 = run("verify --suite corollary3 --p 5");
    CHECK(c3.exit_code == 1);
    CHECK(c3.out.find("[FAIL]") != std::string::npos);
    CHECK(run("verify --suite nope --p 5").exit_code == 2);
}

TEST_CASE("scan lists exactly the six modules with nonzero cohomology") {
    RunResult r = run("scan --p 5 --family simple --only-nonzero --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"].size() == 6);
    std::set<std::pair<int, int>> got, want{{0, 0}, {3, 1}, {1, 3}, {2, 0}, {0, 2}, {3, 3}};
    for (const auto& row : j["results"]) {
        got.insert({row["weight"][0].get<int>(), row["weight"][1].get<int>()});
    }
    CHECK(got == want);
    CHECK(run("scan --p 11 --family simple").exit_code == 2);  // guarded without --force
}

TEST_CASE("char subcommand prints the formal character") {
    RunResult r = run("char --p 5 --module simple:1,0 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 3);
    CHECK(j["character"]["[1,0]"] == 1);
    CHECK(j["character"]["[-1,1]"] == 1);
    CHECK(j["character"]["[0,-1]"] == 1);
}

TEST_CASE("cache hits reproduce cold output byte for byte") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "modcohom_cli_cache";
    std::filesystem::remove_all(dir);
    std::string args = "table --p 5 --module weyl:3,3 --format json --cache " + dir.string();
    RunResult cold = run(args);
    REQUIRE(cold.exit_code == 0);
    CHECK(std::filesystem::exists(dir));
    RunResult hot = run(args);
    CHECK(hot.exit_code == 0);
    CHECK(hot.out == cold.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("module and block dumps are written on request") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "modcohom_cli_dumps";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::path mod = dir / "module.json";
    RunResult r = run("table --p 5 --module simple:2,0 --format json --dump-module " +
                      mod.string() + " --dump-blocks " + (dir / "blocks").string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(fs::exists(mod));
    std::ifstream in(mod);
    auto j = nlohmann::json::parse(in);
    CHECK(j["dim"] == 6);
    CHECK(j["actions"].contains("f1"));
    // one file per (degree, weight) block of the restricted subcomplex
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir / "blocks")) {
        ++files;
        CHECK(e.path().extension() == ".txt");
    }
    CHECK(files > 0);
    CHECK(fs::exists(dir / "blocks" / "d2_w5_0.txt"));
    fs::remove_all(dir);
}

TEST_CASE("MODCOHOM_CACHE environment variable selects the cache directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "modcohom_env_cache";
    fs::remove_all(dir);
    RunResult cold = run_cmd("MODCOHOM_CACHE=" + dir.string() + " " + MODCOHOM_BIN +
                             " table --p 5 --module simple:2,0 --format json");
    REQUIRE(cold.exit_code == 0);
    CHECK(fs::exists(dir));
    RunResult hot = run_cmd("MODCOHOM_CACHE=" + dir.string() + " " + MODCOHOM_BIN +
                            " table --p 5 --module simple:2,0 --format json");
    CHECK(hot.out == cold.out);
    fs::remove_all(dir);
}

TEST_CASE("forced scalar kernels and extra threads do not change output") {
    RunResult base = run("table --p 5 --module induced:3,3 --format json");
    RunResult scalar = run_cmd(std::string("MODCOHOM_KERNEL=scalar ") + MODCOHOM_BIN +
                               " table --p 5 --module induced:3,3 --format json");
    RunResult threaded = run("table --p 5 --module induced:3,3 --format json --threads 4");
    REQUIRE(base.exit_code == 0);
    CHECK(base.out == threaded.out);
    CHECK(base.out == scalar.out);
}
