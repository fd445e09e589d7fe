#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dessin/npoint.hpp"
#include "dessin/report.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(DESSIN_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(fs::path(DESSIN_GOLDEN_DIR) / name);
    REQUIRE(in.good());
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("dessin-cli-" + name);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("golden transcripts") {
    const std::pair<const char*, const char*> cases[] = {
        {"correlator --genus 0 --parts 4 --weighted", "correlator_g0_4_weighted.json"},
        {"correlator --genus 0 --parts 4 --weighted --format text", "correlator_g0_4_weighted.txt"},
        {"verify --suite main-theorem --g 1 --n 1 --order 9 --seedless", "verify_main_theorem_1_1_9.json"},
        {"identity --name typeB-gf --order 10 --seedless --format text", "identity_typeB_10.txt"},
        {"times --branch plus --order 5 --format text", "times_plus_5.txt"},
        {"eo --g 1 --n 1 --format text", "eo_1_1.txt"},
        {"expand --series G01 --order 6 --format text", "expand_G01_6.txt"},
    };
    for (const auto& [args, file] : cases) {
        const auto r = run(args);
        CHECK_MESSAGE(r.code == 0, args);
        CHECK_MESSAGE(r.out == golden(file), args);
    }
}

TEST_CASE("usage errors exit with 2") {
    for (const char* args : {"", "frobnicate", "correlator --parts 1", "correlator --genus 0 --parts 0",
                             "correlator --genus 0 --parts 1,x", "npoint --genus 0 --n 3 --order 4",
                             "verify --suite nope", "verify", "identity --name nope --order 4",
                             "expand --series G05 --order 6", "times --branch sideways --order 3",
                             "eo --g 0 --n 2", "--format yaml correlator --genus 0 --parts 1", "cache info"})
        CHECK_MESSAGE(run(args).code == 2, args);
    CHECK(run("--help").code == 0);
}

TEST_CASE("failures exit with 1") {
    const auto dir = scratch("corrupt");
    fs::create_directories(dir);
    std::ofstream(dir / "correlators.json") << "{\"version\":1,\"alphabet\":[\"s\",\"u\",\"v\"],\"entries\":[";
    CHECK(run("--cache " + dir.string() + " correlator --genus 0 --parts 2").code == 1);
    std::ofstream(dir / "correlators.json") << "{\"version\":7,\"alphabet\":[\"s\",\"u\",\"v\"],\"entries\":[]}";
    CHECK(run("--cache " + dir.string() + " correlator --genus 0 --parts 2").code == 1);
    fs::remove_all(dir);
}

TEST_CASE("json outputs round-trip") {
    const auto r = run("npoint --genus 1 --n 2 --order 8");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto s = dessin::NPointSeries::from_json(j);
    CHECK(s.to_json() == j);
    for (const char* source : {"operator", "eo"}) {
        const auto other = run(std::string("npoint --genus 1 --n 2 --order 8 --source ") + source);
        REQUIRE(other.code == 0);
        CHECK(nlohmann::json::parse(other.out) == j);
    }
    const auto v = nlohmann::json::parse(run("verify --suite kp-oracle").out);
    const auto& report = v.at("reports").at(0);
    CHECK(dessin::VerificationReport::from_json(report).to_json() == report);
}

TEST_CASE("seedless runs are byte-identical and respect the budget") {
    const auto a = run("verify --suite all --seedless --budget 12");
    const auto b = run("verify --suite all --seedless --budget 12 --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("summary").at("failed") == 0);
    CHECK(j.at("summary").at("skipped").get<int>() > 0);
    CHECK(a.out.find("ring-laws") == std::string::npos);
    CHECK(a.out.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("cache changes timing only") {
    const auto dir = scratch("warm");
    const std::string args = "--cache " + dir.string() + " --seedless verify --suite s-degree-law";
    const auto cold = run(args);
    REQUIRE(fs::exists(dir / "correlators.json"));
    const auto warm = run(args);
    CHECK(cold.code == 0);
    CHECK(cold.out == warm.out);
    CHECK(cold.out == run("--seedless verify --suite s-degree-law").out);

    const auto info = nlohmann::json::parse(run("--cache " + dir.string() + " cache info").out);
    CHECK(info.at("entries").get<int>() > 100);
    CHECK(run("--cache " + dir.string() + " cache clear").code == 0);
    CHECK_FALSE(fs::exists(dir / "correlators.json"));
    fs::remove_all(dir);
}

TEST_CASE("cache location precedence") {
    const auto env_dir = scratch("env"), flag_dir = scratch("flag");
    const std::string env = "DESSIN_CACHE_DIR=" + env_dir.string();
    CHECK(run("correlator --genus 1 --parts 3", env).code == 0);
    CHECK(fs::exists(env_dir / "correlators.json"));
    CHECK(run("--cache " + flag_dir.string() + " correlator --genus 1 --parts 5", env).code == 0);
    CHECK(fs::exists(flag_dir / "correlators.json"));
    const auto info = nlohmann::json::parse(run("cache info", env).out);
    CHECK(info.at("path").get<std::string>() == (env_dir / "correlators.json").string());
    fs::remove_all(env_dir);
    fs::remove_all(flag_dir);
}
