#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cf/cli/cli.hpp"

namespace {

struct Out {
    int code = 0;
    std::string out, err;
};

Out call(std::vector<std::string> args) {
    args.insert(args.begin(), "cochainforge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    Out r;
    r.code = cf::cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
    r.out = o.str();
    r.err = e.str();
    return r;
}

std::string data(const std::string& rel) { return std::string(CF_SOURCE_DIR) + "/data/" + rel; }

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == cf::cli::Usage);
    CHECK(call({"frobnicate"}).code == cf::cli::Usage);
    CHECK(call({"verify", "--id", "NOPE"}).code == cf::cli::Usage);
    CHECK(call({"verify", "--all", "--budget", "0"}).code == cf::cli::Usage);
    CHECK(call({"cohomology", "--id", "NOPE"}).code == cf::cli::Usage);
    CHECK(call({"ahss", "--model", data("missing.json")}).code == cf::cli::Usage);
    CHECK(call({"series", "--degree", "x"}).code == cf::cli::Usage);
    CHECK(call({"--help"}).code == cf::cli::Ok);
}

TEST_CASE("verify selected ids") {
    auto r = call({"verify", "--id", "L-key.dC5", "--id", "L-conj.C3", "--json", "--seed", "42"});
    REQUIRE(r.code == cf::cli::Ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["seed"] == 42);
    CHECK(j["command"] == "verify");
    REQUIRE(j["reports"].size() == 2);
    CHECK(j["reports"][0]["id"] == "L-conj.C3");
    for (const auto& rep : j["reports"]) CHECK(rep["status"] == "verified");
}

TEST_CASE("budget: flag and environment") {
    auto r = call({"verify", "--id", "omega.cocycle", "--budget", "20"});
    CHECK(r.code == cf::cli::Budget);
    setenv("COCHAINFORGE_BUDGET", "20", 1);
    CHECK(call({"verify", "--id", "omega.cocycle"}).code == cf::cli::Budget);
    /* the flag wins over the environment */
    CHECK(call({"verify", "--id", "omega.cocycle", "--budget", "100000000"}).code == cf::cli::Ok);
    setenv("COCHAINFORGE_BUDGET", "-3", 1);
    CHECK(call({"verify", "--id", "omega.cocycle"}).code == cf::cli::Usage);
    unsetenv("COCHAINFORGE_BUDGET");
    CHECK(call({"verify", "--id", "omega.cocycle"}).code == cf::cli::Ok);
}

TEST_CASE("verify --all is deterministic across job counts") {
    auto a = call({"verify", "--all", "--json", "--seed", "7"});
    auto b = call({"verify", "--all", "--json", "--seed", "7", "--jobs", "1"});
    REQUIRE(a.code == cf::cli::Ok);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["budget_exceeded"] == 0);
    CHECK(j["reports"].size() == 72);
}

TEST_CASE("cohomology") {
    auto r = call({"cohomology", "--input", data("complexes/S3.json"), "--json"});
    REQUIRE(r.code == cf::cli::Ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["euler_characteristic"] == 0);
    auto rp2 = call({"cohomology", "--id", "RP2", "--ring", "Zmod:2", "--degree", "2"});
    CHECK(rp2.code == cf::cli::Ok);
    CHECK(rp2.out.find("Z/2") != std::string::npos);
    CHECK(call({"cohomology", "--id", "T3", "--ring", "Zmod:0"}).code == cf::cli::Usage);
}

TEST_CASE("ahss on model files") {
    auto r = call({"ahss", "--model", data("models/s3.json"), "--h", "5"});
    REQUIRE(r.code == cf::cli::Ok);
    CHECK(r.out.find("K1 = Z/5") != std::string::npos);
    auto su3 = call({"ahss", "--model", data("models/su3.json"), "--h", "7", "--json"});
    REQUIRE(su3.code == cf::cli::Ok);
    auto j = nlohmann::json::parse(su3.out);
    CHECK(j.dump().find("mu_3") != std::string::npos);
    auto even = call({"ahss", "--id", "SU3-even", "--h", "4"});
    CHECK(even.out.find("(2Z)/4") != std::string::npos);
    CHECK(even.out.find("candidate K1 = Z/4") != std::string::npos);
    CHECK(call({"ahss", "--id", "S3", "--h", "two"}).code == cf::cli::Usage);
}

TEST_CASE("deligne and series") {
    auto d = call({"deligne", "--id", "T3", "--n", "3", "--json"});
    CHECK(d.code == cf::cli::Ok);
    CHECK(nlohmann::json::parse(d.out).is_object());
    CHECK(call({"deligne", "--id", "S1"}).code == cf::cli::Usage);
    auto s = call({"series", "--json"});
    REQUIRE(s.code == cf::cli::Ok);
    auto j = nlohmann::json::parse(s.out);
    CHECK(j["N"] == 17);
    CHECK(j["agree"] == true);
    CHECK(j["poincare"] == nlohmann::json({1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 2, 1}));
    CHECK(call({"series", "--degree", "-1"}).code == cf::cli::Usage);
}
