#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "whittaker_cli/commands.hpp"

using whittaker::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "whittaker");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify") {
    const auto r = run({"classify", "--n", "3", "--lambda", "7,3,1", "--lam-np1", "5"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["chamber"]["m"] == 2);
    CHECK(j["chamber"]["sign"] == 1);
    CHECK(j["gk_dimension"] == 10);
    CHECK(j["algebraic_whittaker"] == true);
}

TEST_CASE("bad input exits with 2") {
    CHECK(run({"classify", "--lambda", "5,3", "--lam-np1", "3"}).code == 2);
    CHECK(run({"classify", "--lambda", "5,x", "--lam-np1", "3"}).code == 2);
    CHECK(run({"classify", "--n", "3", "--lambda", "5,3", "--lam-np1", "1"}).code == 2);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("half-integer input parses") {
    const auto r = run({"classify", "--lambda", "7/2,3/2", "--lam-np1", "1/2"});
    REQUIRE(r.code == 0);
    // m = n+1: classified, but no Blattner weight and no Whittaker models
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["chamber"]["m"] == 3);
    CHECK(j["blattner"].is_null());
    CHECK(j["algebraic_whittaker"] == false);
}

TEST_CASE("dim") {
    auto r = run({"dim", "--lambda", "5,1", "--lam-np1", "3"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["total_algebraic"] == 4);
    r = run({"dim", "--lambda", "6,4,1", "--lam-np1", "5"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["total_algebraic"] == 60);
    CHECK(j["total_continuous"] == 15);
    const auto c = run({"dim", "--lambda", "6,4,1", "--lam-np1", "5", "--contragredient"});
    REQUIRE(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["total_algebraic"] == 60);
}

TEST_CASE("patterns count") {
    const auto r = run({"patterns", "--lambda", "1,0", "--count"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find('4') != std::string::npos);
}

TEST_CASE("exponents of the default corner") {
    const auto r = run({"exponents", "--lambda", "7,3,1", "--lam-np1", "5"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).contains("exponents"));
}

TEST_CASE("eval CSV") {
    const auto r = run({"eval", "--lambda", "7,3,1", "--lam-np1", "5", "--t1", "0.5:4:3", "--t2", "0.5:4:3"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t1,t2,re,im,abs_err");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) {
            ++rows;
            CHECK(line.find("nan") == std::string::npos);
            CHECK(line.find("inf") == std::string::npos);
        }
    CHECK(rows == 9);
}

TEST_CASE("eval with the quadrature oracle and a-coordinates") {
    const auto r = run({"eval", "--lambda", "7,3,1", "--lam-np1", "5", "--t1", "1:2:2", "--t2", "1:1:1", "--coords", "a",
                        "--oracle", "quadrature"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("t1,t2,re,im,abs_err", 0) == 0);
    CHECK(header.find("oracle_rel_diff") != std::string::npos);
}

TEST_CASE("verify a single suite") {
    const auto r = run({"verify", "--suite", "identities"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["suites"].size() == 1);
    CHECK(r.err.find("PASS") != std::string::npos);
    CHECK(run({"verify", "--suite", "nosuch"}).code == 2);
}

TEST_CASE("verify is deterministic for a fixed seed") {
    const auto a = run({"verify", "--suite", "identities", "--seed", "9", "--brief"});
    const auto b = run({"verify", "--suite", "identities", "--seed", "9", "--brief"});
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    ja["suites"][0].erase("seconds");
    jb["suites"][0].erase("seconds");
    CHECK(ja == jb);
}
