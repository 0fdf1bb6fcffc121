#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
    const std::string cmd = std::string(HARRISAR1_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("harrisar1_cli_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter()++))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

const char* kSampleConfig = R"({
  "command": "sample",
  "seed": 9,
  "law": {"family": "gen_semi_pareto", "alpha": 1.0, "b": 0.5, "k": 2},
  "n_samples": 200
})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit 2") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("verify --check no_such_check") == 2);
    CHECK(run("sample") == 2);             // no law configured
    CHECK(run("verify --config /nonexistent.json") == 2);
}

TEST_CASE("config validation errors exit 2") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "bad.json";
    write(cfg, R"({
  "command": "simulate",
  "law": {"family": "gen_semi_pareto"},
  "scheme": {"combiner": "min", "p": 1.5, "b": 2.0, "k": 2}
})");
    CHECK(run("simulate --config " + cfg.string()) == 2);
    write(cfg, "{not json");
    CHECK(run("simulate --config " + cfg.string()) == 2);
}

TEST_CASE("sample artifacts are deterministic and stamped") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "cfg.json";
    write(cfg, kSampleConfig);
    const fs::path out_a = tmp.path / "a";
    const fs::path out_b = tmp.path / "b";
    REQUIRE(run("sample --config " + cfg.string() + " --out " + out_a.string()) == 0);
    REQUIRE(run("sample --config " + cfg.string() + " --out " + out_b.string()) == 0);
    const std::string a = slurp(out_a / "samples.csv");
    CHECK(a == slurp(out_b / "samples.csv"));
    CHECK(a.rfind("# config_hash=", 0) == 0);
    CHECK(a.find("seed=9") != std::string::npos);
    CHECK(a.find("index,value") != std::string::npos);

    // flags win over the file: a different seed changes the bytes
    const fs::path out_c = tmp.path / "c";
    REQUIRE(run("sample --config " + cfg.string() + " --out " + out_c.string() +
                " --seed 10") == 0);
    CHECK(slurp(out_c / "samples.csv") != a);
}

TEST_CASE("simulate writes the trajectory format") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "cfg.json";
    write(cfg, R"({
  "command": "simulate",
  "seed": 4,
  "law": {"family": "gen_semi_pareto", "alpha": 1.0, "b": 0.5, "k": 2},
  "scheme": {"combiner": "min", "p": 0.5, "b": 2.0, "k": 2},
  "n_steps": 3,
  "n_paths": 2
})");
    REQUIRE(run("simulate --config " + cfg.string() + " --out " + tmp.path.string()) == 0);
    const std::string text = slurp(tmp.path / "trajectories.csv");
    CHECK(text.rfind("# config_hash=", 0) == 0);
    CHECK(text.find("path,n,component_1,component_2,aggregate\n") != std::string::npos);
    // header comment + column header + 2 paths * 4 rows
    CHECK(std::count(text.begin(), text.end(), '\n') == 10);
}

TEST_CASE("verify single check: report json and exit discipline") {
    TempDir tmp;
    REQUIRE(run("verify --check harris_pmf --out " + tmp.path.string()) == 0);
    const auto doc = nlohmann::json::parse(slurp(tmp.path / "verify_report.json"));
    CHECK(doc["passed"].get<bool>());
    CHECK(doc["seed"].get<int>() == 1);
    CHECK(doc["results"].size() == 1);
    CHECK(doc["results"][0]["check"] == "harris_pmf");
    CHECK(doc["results"][0]["reports"].size() > 0);
    // reports carry no wall-clock fields; repeated runs are byte-identical
    const std::string first = slurp(tmp.path / "verify_report.json");
    REQUIRE(run("verify --check harris_pmf --out " + tmp.path.string()) == 0);
    CHECK(first == slurp(tmp.path / "verify_report.json"));
}

TEST_CASE("report aggregates verify output") {
    TempDir tmp;
    REQUIRE(run("verify --check stationarity --out " + tmp.path.string()) == 0);
    const fs::path cfg = tmp.path / "report.json";
    write(cfg, std::string(R"({"command": "report", "inputs": [")") +
                   (tmp.path / "verify_report.json").string() + R"("]})");
    REQUIRE(run("report --config " + cfg.string() + " --out " + tmp.path.string()) == 0);
    const std::string csv = slurp(tmp.path / "summary.csv");
    CHECK(csv.find("source,check,report,passed,max_residual,threshold") != std::string::npos);
    CHECK(csv.find("stationarity") != std::string::npos);
    CHECK(csv.find("true") != std::string::npos);
}

} // TEST_SUITE
