#include <doctest.h>

#include <chrono>
#include <fstream>

#include "cf/ahss/ahss.hpp"

using namespace cf;
using ahss::FGAbelianGroup;
using ahss::Int;

namespace {

FGAbelianGroup cyc(long n) { return FGAbelianGroup::cyclic(Int(n)); }

/* K1 = H1 + Z/h, K0 = H2, with Z/1 trivial. */
FGAbelianGroup h1_plus(const FGAbelianGroup& h1, long h) {
    std::vector<Int> t = h1.torsion;
    if (h > 1) t.push_back(Int(h));
    return FGAbelianGroup(h1.rank, t);
}

ahss::ConvergenceReport timed_run(const ahss::CohomologyModel& m) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = ahss::run(m);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    CHECK(ms <= 1000);
    return rep;
}

ahss::CohomologyModel load(const std::string& rel) {
    std::ifstream in(std::string(CF_SOURCE_DIR) + "/" + rel);
    REQUIRE(in.good());
    return ahss::CohomologyModel::from_json(nlohmann::json::parse(in));
}

}  // namespace

TEST_CASE("S3: K0 = 0, K1 = Z/h") {
    for (long h : {1, 2, 5}) {
        auto rep = timed_run(ahss::fixture("S3", Int(h)));
        REQUIRE(rep.k0.determined);
        REQUIRE(rep.k1.determined);
        CHECK(rep.k0.assembled == FGAbelianGroup());
        CHECK(rep.k1.assembled == (h == 1 ? FGAbelianGroup() : cyc(h)));
        REQUIRE(rep.closed_form);
        CHECK(*rep.closed_form);
        CHECK(rep.warnings.empty());
    }
}

TEST_CASE("T3 with h = 3") {
    auto rep = timed_run(ahss::fixture("T3", Int(3)));
    CHECK(rep.k0.assembled == FGAbelianGroup(3));
    CHECK(rep.k1.assembled == FGAbelianGroup(3, {Int(3)}));
    CHECK(rep.k1.extension_resolved);
    REQUIRE(rep.closed_form);
    CHECK(*rep.closed_form);
}

TEST_CASE("lens models with H2 = Z/p") {
    for (long p : {2, 3, 5, 7})
        for (long k = 1; k <= 6; ++k) {
            auto m = ahss::fixture("lens:" + std::to_string(p), Int(k));
            auto rep = timed_run(m);
            CHECK(rep.k0.assembled == m.groups[2]);
            CHECK(rep.k1.assembled == h1_plus(m.groups[1], k));
            REQUIRE(rep.closed_form);
            CHECK(*rep.closed_form);
        }
    CHECK_THROWS_AS(ahss::fixture("lens:1"), std::invalid_argument);
    CHECK_THROWS_AS(ahss::fixture("lens:x"), std::invalid_argument);
}

TEST_CASE("S1 is untwisted") {
    auto rep = timed_run(ahss::fixture("S1"));
    CHECK(rep.k0.assembled == FGAbelianGroup(1));
    CHECK(rep.k1.assembled == FGAbelianGroup(1));
    CHECK_THROWS_AS(ahss::fixture("S1", Int(2)), std::invalid_argument);
}

TEST_CASE("SU(3), odd h: d5 = 0 by constraint") {
    for (long h : {1, 3, 5, 7, 9, 15}) {
        auto rep = timed_run(ahss::fixture("SU3", Int(h)));
        REQUIRE(rep.k0.determined);
        REQUIRE(rep.k1.determined);
        const auto want = h == 1 ? FGAbelianGroup() : cyc(h);
        CHECK(rep.k0.assembled == want);
        CHECK(rep.k1.assembled == want);
        bool echoed = false;
        for (const auto& d : rep.differentials)
            if (d.r == 5 && d.from == 3) {
                CHECK(d.status == "zero");
                echoed = d.reason.find("mu_3") != std::string::npos;
            }
        CHECK(echoed == (h > 1));
        CHECK(rep.text().find("mu_3 is injective") != std::string::npos);
    }
}

TEST_CASE("SU(3), even h: both candidates") {
    for (long h : {2, 4, 6, 8}) {
        auto rep = timed_run(ahss::fixture("SU3-even", Int(h)));
        CHECK_FALSE(rep.k1.determined);
        REQUIRE(rep.candidates.size() == 2);
        std::map<std::string, FGAbelianGroup> k1;
        for (const auto& c : rep.candidates) k1[c.label] = c.k1.assembled;
        const std::string hs = std::to_string(h);
        REQUIRE(k1.count("Z/" + hs));
        REQUIRE(k1.count("(2Z)/" + hs));
        CHECK(k1["Z/" + hs] == cyc(h));
        CHECK(k1["(2Z)/" + hs] == (h == 2 ? FGAbelianGroup() : cyc(h / 2)));
    }
    /* without the even-h constraint nothing is claimed */
    auto rep = ahss::run(ahss::fixture("SU3", Int(4)));
    CHECK_FALSE(rep.k1.determined);
    CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("model files match the built-in fixtures") {
    for (auto [file, id] : std::vector<std::pair<std::string, std::string>>{
             {"data/models/s3.json", "S3"}, {"data/models/t3.json", "T3"}, {"data/models/s1.json", "S1"}}) {
        auto m = load(file);
        CHECK(m.to_json() == ahss::fixture(id).to_json());
    }
    auto s3 = load("data/models/s3.json").with_h(Int(5));
    s3.validate();
    CHECK(ahss::run(s3).k1.assembled == cyc(5));
    auto su3 = load("data/models/su3.json").with_h(Int(7));
    CHECK(ahss::run(su3).k0.assembled == cyc(7));
}

TEST_CASE("model JSON round trip and validation") {
    for (const std::string id : {"S1", "S3", "T3", "lens:5", "SU3", "SU3-even"}) {
        auto m = ahss::fixture(id);
        auto back = ahss::CohomologyModel::from_json(m.to_json());
        CHECK(back.to_json() == m.to_json());
        CHECK(ahss::run(back).to_json() == ahss::run(m).to_json());
    }
    auto m = ahss::fixture("S3", Int(2));
    auto bad = m;
    bad.groups.pop_back();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = m;
    bad.cup_h[0] = ahss::IntMatrix(2, 1);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    auto j = ahss::fixture("SU3").to_json();
    j["constraints"][0]["justification"] = "";
    CHECK_THROWS_AS(ahss::CohomologyModel::from_json(j), std::invalid_argument);
}

TEST_CASE("factorization targets are injective where determined") {
    for (const std::string id : {"S3", "T3", "lens:3", "SU3"})
        for (long h : {1, 3, 5}) {
            auto m = ahss::fixture(id, Int(h));
            auto rep = ahss::run(m);
            for (const auto& t : ahss::factorization_targets(m, rep))
                if (t.determined) CHECK_MESSAGE(t.injective, id << " p=" << t.p);
        }
}

TEST_CASE("model_from_complex agrees with the direct models") {
    auto s3 = ahss::model_from_complex(cech::sphere3(), {Int(4)});
    CHECK(s3.groups[3] == FGAbelianGroup(1));
    CHECK(ahss::run(s3).k1.assembled == cyc(4));
    auto t3 = ahss::model_from_complex(cech::torus3(), {Int(2)});
    CHECK(t3.groups[1] == FGAbelianGroup(3));
    CHECK(t3.groups[2] == FGAbelianGroup(3));
    CHECK(ahss::run(t3).k1.assembled == FGAbelianGroup(3, {Int(2)}));
}
