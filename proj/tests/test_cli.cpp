#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(ZB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::stringstream ss;
    ss << std::ifstream(path).rdbuf();
    return ss.str();
}

std::string mask_timestamp(std::string s) {
    return std::regex_replace(s, std::regex("\"timestamp\": \"[^\"]*\""),
                              "\"timestamp\": \"X\"");
}

json load(const std::string& path) { return json::parse(slurp(path)); }

} // namespace

TEST_CASE("constants command reports the pinned value") {
    REQUIRE(run("constants --k 2 --prime-cutoff 100000 --matrix-cutoff 1000 --out c2.json "
                "--check") == 0);
    auto doc = load("c2.json");
    CHECK(doc["command"] == "constants");
    CHECK(std::abs(doc["results"]["c_k"].get<double>() - 0.0506606) < 1e-3);
    CHECK(doc["config"]["k"] == 2.0);
    CHECK(doc.contains("timestamp"));
    std::remove("c2.json");
}

TEST_CASE("reports are byte-identical modulo timestamp, at any job count") {
    std::string base = "moments --k 1 --T 1e4 --n 2000 --seed 7 --method mc";
    REQUIRE(run(base + " --jobs 1 --out m1.json") == 0);
    REQUIRE(run(base + " --jobs 4 --out m2.json") == 0);
    REQUIRE(run(base + " --jobs 3 --out m3.json") == 0);
    auto a = mask_timestamp(slurp("m1.json"));
    auto b = mask_timestamp(slurp("m2.json"));
    auto c = mask_timestamp(slurp("m3.json"));
    // the out path differs; normalize it as well
    a = std::regex_replace(a, std::regex("m1\\.json"), "m.json");
    b = std::regex_replace(b, std::regex("m2\\.json"), "m.json");
    c = std::regex_replace(c, std::regex("m3\\.json"), "m.json");
    CHECK(a == b);
    CHECK(a == c);
    std::remove("m1.json");
    std::remove("m2.json");
    std::remove("m3.json");
}

TEST_CASE("optimize over a pinched grid reports the reference values") {
    REQUIRE(run("optimize --variant V2 --c1-min 1.38 --c1-max 1.38 --c3-min 0.56 "
                "--c3-max 0.56 --out o.json --check") == 0);
    auto doc = load("o.json");
    CHECK(std::abs(doc["results"]["reference_b"].get<double>() - 9.315) < 1e-6);
    auto best = doc["results"]["variants"][0]["best"];
    CHECK(std::abs(best["b"].get<double>() - 9.315) < 1e-6);
    CHECK(std::abs(best["c2"].get<double>() - 18.63) < 1e-4);
    std::remove("o.json");
}

TEST_CASE("exit codes: usage, precondition, check failure") {
    CHECK(run("no-such-command") == 1);
    CHECK(run("moments --T 10 --out x.json") == 1);            // T out of range
    CHECK(run("coscheck --primes 97,89,83 --T 1e6 --out x.json") == 1); // regime error
    // a check that genuinely fails: shift the majorant down by a huge constant
    CHECK(run("verify-majorant --T 1e4 --n 1200 --N -1e6 --out x.json --check") == 2);
    std::remove("x.json");
}

TEST_CASE("config file equals flags, flags take precedence") {
    {
        std::ofstream f("ks.cfg");
        f << "k=2\nprime-cutoff=100000\nmatrix-cutoff=1000\nout=cfg1.json\n";
    }
    REQUIRE(run("constants --config ks.cfg") == 0);
    REQUIRE(run("constants --k 2 --prime-cutoff 100000 --matrix-cutoff 1000 --out cfg2.json") == 0);
    auto a = load("cfg1.json");
    auto b = load("cfg2.json");
    CHECK(a["results"] == b["results"]);
    // flag overrides the file
    REQUIRE(run("constants --config ks.cfg --k 1 --out cfg3.json") == 0);
    auto c = load("cfg3.json");
    CHECK(c["config"]["k"] == 1.0);
    std::remove("ks.cfg");
    std::remove("cfg1.json");
    std::remove("cfg2.json");
    std::remove("cfg3.json");
}

TEST_CASE("reports are self-contained: the embedded config reproduces the run") {
    REQUIRE(run("coscheck --primes 2,2,3,3 --T 1e5 --out r1.json") == 0);
    auto doc = load("r1.json");
    std::ofstream f("replay.cfg");
    // comma-containing values are quoted per INI convention
    f << "primes=\"" << doc["config"]["primes"].get<std::string>() << "\"\n";
    f << "T=" << doc["config"]["T"].get<double>() << "\n";
    f.close();
    REQUIRE(run("coscheck --config replay.cfg --out r2.json") == 0);
    auto doc2 = load("r2.json");
    CHECK(doc["results"] == doc2["results"]);
    std::remove("replay.cfg");
    std::remove("r1.json");
    std::remove("r2.json");
}

TEST_CASE("sample cache shared across commands") {
    std::remove("zc.csv");
    REQUIRE(run("moments --k 1 --T 1e4 --n 1500 --cache zc.csv --out q1.json") == 0);
    std::string first = slurp("zc.csv");
    CHECK(first.rfind("t,zeta_re,zeta_im\n", 0) == 0);
    REQUIRE(run("moments --k 2 --T 1e4 --n 1500 --cache zc.csv --out q2.json") == 0);
    // same sample grid, so the cache is unchanged by the second run
    CHECK(slurp("zc.csv") == first);
    std::remove("zc.csv");
    std::remove("q1.json");
    std::remove("q2.json");
}

TEST_CASE("bounds and d3 commands run and expose the battery") {
    REQUIRE(run("bounds --out bb.json --check") == 0);
    auto doc = load("bb.json");
    CHECK(doc["results"]["cap"] == 58);
    CHECK(doc["results"]["s0_exponent_check"] == true);
    CHECK(doc["results"]["geometric_passes"] == false);
    CHECK(doc["warnings"].size() >= 1);

    REQUIRE(run("d3 --k 1 --out dd.json --check") == 0);
    auto d3 = load("dd.json");
    CHECK(d3["results"]["regions"].size() == 4);
    CHECK(std::abs(d3["results"]["coefficient"].get<double>() -
                   (2.0 + 514.0 * std::sqrt(M_PI) + 3.0)) < 1e-9);
    CHECK(d3["results"]["regions"][3]["quadrature_below_closed"] == false);
    std::remove("bb.json");
    std::remove("dd.json");
}

TEST_CASE("partition command covers toy and asymptotic modes") {
    REQUIRE(run("partition --T 2000 --betas 0.5,0.8,1.0 --n 400 --out p1.json --check") == 0);
    auto doc = load("p1.json");
    CHECK(doc["results"]["fractions_total"] == 1.0);
    REQUIRE(run("partition --L 1e8 --out p2.json --check") == 0);
    auto doc2 = load("p2.json");
    CHECK(doc2["results"]["cap"] == 58);
    std::remove("p1.json");
    std::remove("p2.json");
}
