#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "qatlas/cli.hpp"

using qatlas::cli::CommandResult;
using qatlas::cli::run;
using json = nlohmann::json;

TEST_CASE("enumerate gopel emits 135 sorted 7-tuples as json") {
    const CommandResult result = run({"enumerate", "gopel", "--format", "json"});
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["kind"] == "gopel");
    CHECK(doc["count"] == 135);
    REQUIRE(doc["items"].size() == 135);
    for (const auto& item : doc["items"]) CHECK(item.size() == 7);
    CHECK(doc["items"][0] < doc["items"][1]);
}

TEST_CASE("enumerate covers every structure family") {
    const std::pair<const char*, int> kinds[] = {
        {"odd", 28},     {"even", 36},      {"steiner", 63},         {"gopel", 135},
        {"syzygetic", 315}, {"isotropic-plane", 315}, {"azygetic", 336},
        {"aronhold", 288},  {"ennead", 960},
    };
    for (const auto& [kind, count] : kinds) {
        const CommandResult result = run({"enumerate", kind, "--format", "json"});
        REQUIRE(result.exit_code == 0);
        CHECK(json::parse(result.out)["count"] == count);
    }
}

TEST_CASE("verify suites succeed and aggregate") {
    for (const char* suite : {"counts", "octonions", "cohomology"}) {
        const CommandResult result = run({"verify", "--suite", suite});
        CHECK(result.exit_code == 0);
    }
}

TEST_CASE("audit exits 1 by default and 0 with --allow-known") {
    const CommandResult strict = run({"audit"});
    CHECK(strict.exit_code == 1);
    const CommandResult relaxed = run({"audit", "--allow-known"});
    CHECK(relaxed.exit_code == 0);

    const CommandResult as_json = run({"audit", "--format", "json"});
    const json doc = json::parse(as_json.out);
    CHECK(doc["findings"] == 3);
    CHECK(doc["known_findings"] == 3);
    CHECK(doc["exit_code"] == 1);
}

TEST_CASE("poincare and points report computed and printed polynomials") {
    const json bit = json::parse(run({"poincare", "bitangent", "--format", "json"}).out);
    CHECK(bit["computed"]["coefficients"] == json::array({1, 0, 0, 0, 0, 1, 2}));
    CHECK(bit["computed"]["pretty"] == "1 + t^5 + 2t^6");
    CHECK(bit["matches_printed"] == true);

    const json enn = json::parse(run({"poincare", "ennead", "--format", "json"}).out);
    CHECK(enn["matches_printed"] == false);
    CHECK(enn["computed"]["coefficients"] == json::array({1, 0, 0, 3, 11, 15, 16}));
    CHECK(enn["printed"]["coefficients"] == json::array({1, 0, 0, 3, 11, 13, 11}));

    const json pts = json::parse(run({"points", "bitangent", "--q", "3", "--format", "json"}).out);
    CHECK(pts["value"] == 728);
    CHECK(pts["computed"]["pretty"] == "q^6 - q + 2");
}

TEST_CASE("octonion-table csv is the full 8x8 grid") {
    const CommandResult result = run({"octonion-table", "--format", "csv"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.substr(0, result.out.find('\n')) == "e0,e1,e2,e3,e4,e5,e6,e7");
    CHECK(std::count(result.out.begin(), result.out.end(), '\n') == 8);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"enumerate", "dodecad"}).exit_code == 2);
    CHECK(run({"poincare", "heptagon"}).exit_code == 2);
    CHECK(run({"verify", "--suite", "unknown"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("a bad data directory is reported as an IO error") {
    const CommandResult result = run({"poincare", "bitangent", "--data-dir", "/nonexistent"});
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("data load error") != std::string::npos);
}

TEST_CASE("the shipped data directory reproduces the builtin results") {
    const CommandResult builtin = run({"poincare", "gopel", "--format", "json"});
    const CommandResult disk =
        run({"poincare", "gopel", "--data-dir", QATLAS_SOURCE_DATA_DIR, "--format", "json"});
    CHECK(builtin.exit_code == 0);
    CHECK(disk.exit_code == 0);
    CHECK(builtin.out == disk.out);
}

TEST_CASE("QATLAS_DATA_DIR is the --data-dir fallback") {
    setenv("QATLAS_DATA_DIR", QATLAS_SOURCE_DATA_DIR, 1);
    const CommandResult via_env = run({"poincare", "gopel", "--format", "json"});
    setenv("QATLAS_DATA_DIR", "/nonexistent/qatlas-data", 1);
    const CommandResult bad_env = run({"poincare", "gopel"});
    unsetenv("QATLAS_DATA_DIR");
    const CommandResult builtin = run({"poincare", "gopel", "--format", "json"});
    CHECK(via_env.exit_code == 0);
    CHECK(via_env.out == builtin.out);
    CHECK(bad_env.exit_code == 2);
}

TEST_CASE("output is byte-identical across repeated runs") {
    const std::vector<std::vector<std::string>> commands = {
        {"enumerate", "ennead", "--format", "json"},
        {"audit", "--format", "json"},
        {"verify", "--suite", "cohomology", "--format", "csv"},
        {"octonion-table"},
    };
    for (const auto& command : commands) {
        const CommandResult first = run(command);
        const CommandResult second = run(command);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}
