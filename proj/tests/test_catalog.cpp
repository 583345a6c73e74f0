#include <doctest.h>

#include <set>

#include "cf/catalog/catalog.hpp"
#include "cf/catalog/forms.hpp"

using namespace cf;
using namespace cf::cat;

TEST_CASE("manifest is sorted, unique and annotated") {
    const auto& m = manifest();
    REQUIRE(m.size() > 50);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(ids.insert(m[i].id).second);
        if (i) CHECK(m[i - 1].id < m[i].id);
        CHECK_FALSE(m[i].location.empty());
        CHECK_FALSE(m[i].quote.empty());
    }
    CHECK(find_entry("L-key.deltaA") != nullptr);
    CHECK(find_entry("NOPE") == nullptr);
}

TEST_CASE("core local formulae verify") {
    std::vector<const Entry*> es;
    for (const auto& e : manifest())
        if (e.id.rfind("L-", 0) == 0) es.push_back(&e);
    CHECK(es.size() == 18);
    for (const auto& r : verify_many(es, 0, 4)) CHECK_MESSAGE(r.status == Status::Verified, r.id, " ", r.note);
}

TEST_CASE("wrong coefficients are rejected") {
    auto ctx = std::make_shared<Context>();
    ctx->op_free("f", GenClass::U1);
    ctx->op_free("g", GenClass::U1);
    Expr f = ctx->op("f", {}), g = ctx->op("g", {});
    Expr delta_c3 = C3(g) - C3(f * g) + C3(f);
    CHECK(normalize(delta_c3 - d(B2(f, g)).scaled(3), *ctx).is_zero());
    CHECK_FALSE(normalize(delta_c3 - d(B2(f, g)).scaled(2), *ctx).is_zero());
    CHECK_FALSE(normalize(delta_c3 + d(B2(f, g)).scaled(3), *ctx).is_zero());

    Entry bad{"test.bad", "here", "C3(g) - C3(fg) + C3(f) = 2 dB2(f, g)", 1, kDefaultBudget, [] {
                  Task t;
                  t.ctx = std::make_shared<Context>();
                  t.ctx->op_free("f", GenClass::U1);
                  t.ctx->op_free("g", GenClass::U1);
                  Expr f = t.ctx->op("f", {}), g = t.ctx->op("g", {});
                  t.eq("wrong", C3(g) - C3(f * g) + C3(f), d(B2(f, g)).scaled(2));
                  return t;
              }};
    auto r = verify(bad);
    CHECK(r.status == Status::Failed);
    REQUIRE(r.checks.size() == 1);
    CHECK_FALSE(r.checks[0].residue.empty());
}

TEST_CASE("budget exhaustion is reported, not thrown") {
    const Entry* e = find_entry("omega.cocycle");
    REQUIRE(e);
    auto r = verify(*e, 20);
    CHECK(r.status == Status::BudgetExceeded);
    CHECK(status_name(r.status) == "budget-exceeded");
    auto ok = verify(*e);
    CHECK(ok.status == Status::Verified);
    CHECK(ok.steps > 20);
}

TEST_CASE("parallel verification preserves order and results") {
    std::vector<const Entry*> es;
    for (const auto& e : manifest())
        if (e.id.rfind("beta.", 0) == 0 || e.id.rfind("change-eta.", 0) == 0) es.push_back(&e);
    auto a = verify_many(es, 0, 1), b = verify_many(es, 0, 6);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == es[i]->id);
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].steps == b[i].steps);
    }
}
