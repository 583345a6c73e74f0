#include <doctest.h>

#include <random>

#include "cf/symcalc/cochain_template.hpp"
#include "cf/symcalc/parser.hpp"
#include "cf/symcalc/rewrite.hpp"
#include "support/properties.hpp"

using namespace cf;

namespace {

struct Env {
    Decls decls;
    Env() {
        decls.add_generator({Name("f"), GenClass::U1, Name("af"), {}});
        decls.add_generator({Name("g0"), GenClass::U, Name(), {}});
        decls.add_generator({Name("g1"), GenClass::U, Name(), {}});
        decls.add_generator({Name("phi"), GenClass::U, Name(), {}});
        decls.add_scalar({Name("x"), 0, false, false});
        decls.add_scalar({Name("y"), 1, false, false});
        decls.add_scalar({Name("w"), 2, false, false});
        decls.add_scalar({Name("h"), 0, true, true});
    }
    Expr gen(const char* n, Form f = Form::Plain) const { return gen_expr(decls, Name(n), f); }
    Expr sc(const char* n) const { return scalar_expr(decls, Name(n)); }
    Expr mc(const char* n) const { return gen(n, Form::Inverse) * gen(n, Form::Diff); }
};

Expr C3(const Expr& g) {
    Expr F = group_inverse(g) * d(g);
    return tr(F * F * F);
}

}  // namespace

TEST_CASE("parser basics") {
    Env e;
    CHECK(parse_expr("0", e.decls).is_zero());
    CHECK(parse_expr("tr[(f^-1 * d f)^3]", e.decls) == C3(e.gen("f")));
    CHECK(normalize(parse_expr("tr[f^-1 * d f] * tr[f^-1 * d f]", e.decls), RelationSet(&e.decls)).is_zero());
    CHECK_THROWS_AS(parse_expr("tr[q^-1 * d q]", e.decls), ParseError);
    CHECK_THROWS_AS(parse_expr("tr[(f^-1 * d f)^3", e.decls), ParseError);
}

TEST_CASE("print and parse round trip") {
    Env e;
    for (const char* s : {"tr[(f^-1 * d f)^3]", "x * y + 3 * d x * tr[g0^-1 * d g0]", "tr[phi^-1 * d phi * d g1 * g1^-1]"}) {
        Expr a = parse_expr(s, e.decls);
        CHECK(parse_expr(a.str(), e.decls) == a);
    }
}

TEST_CASE("differentiation") {
    Env e;
    CHECK(d(e.gen("g0", Form::Diff)).is_zero());
    Expr F = e.mc("g0");
    CHECK(d(F) == -(F * F));
    CHECK(normalize(d(C3(e.gen("f"))), RelationSet(&e.decls)).is_zero());
    CHECK(d(d(e.sc("x"))).is_zero());
}

TEST_CASE("graded cyclicity and Koszul signs") {
    Env e;
    Expr F = e.mc("f");
    CHECK(tr(F * F).is_zero());
    CHECK((e.sc("y") * e.sc("y")).is_zero());
    CHECK(e.sc("y") * e.sc("w") == e.sc("w") * e.sc("y"));
    CHECK(e.sc("y") * d(e.sc("x")) == -(d(e.sc("x")) * e.sc("y")));

    std::mt19937_64 rng(11);
    const char* gens[] = {"f", "g0", "g1", "phi"};
    auto word = [&] {
        Expr w = Expr::constant(1);
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < n; ++i)
            w = w * e.gen(gens[rng() % 4], static_cast<Form>(rng() % 3));
        return w;
    };
    RelationSet rels(&e.decls);
    int tested = 0;
    for (int i = 0; i < 300; ++i) {
        Expr a = word(), b = word();
        int da = a.max_degree(), db = b.max_degree();
        Expr ab = a * b, ba = b * a;
        bool scalar = false;
        for (const auto& [k, c] : ab.terms()) scalar = scalar || k.word.empty();
        if (scalar || ab.is_zero()) continue;
        Expr diff = tr(ab) - tr(ba).scaled((da * db) % 2 ? -1 : 1);
        CHECK(normalize(diff, rels).is_zero());
        ++tested;
    }
    CHECK(tested > 100);
}

TEST_CASE("normalization under relations") {
    Env e;
    CHECK(normalize(C3(group_inverse(e.gen("f"))) + C3(e.gen("f")), RelationSet(&e.decls)).is_zero());

    RelationSet rels(&e.decls);
    rels.add_generator_rule(Name("g1"), e.gen("phi", Form::Inverse) * e.gen("g0") * e.gen("phi"));
    CHECK(normalize(tr(e.mc("g1")) - tr(e.mc("g0")), rels).is_zero());
    CHECK_FALSE(normalize(tr(e.mc("g1") * e.mc("g1") * e.mc("g1")) - C3(e.gen("g0")) * Expr::constant(2), rels)
                    .is_zero());

    NormalizeStats st;
    normalize(tr(e.mc("g1")), rels, kDefaultBudget, &st);
    CHECK(st.steps > 0);
    CHECK_THROWS_AS(normalize(C3(e.gen("g1")), rels, 1), BudgetExceeded);
}

TEST_CASE("self-referential rules are caught") {
    Env e;
    RelationSet rels(&e.decls);
    rels.add_symbol_rule(Name("x"), e.sc("x") + Expr::constant(1));
    CHECK_THROWS_AS(normalize(e.sc("x"), rels), BudgetExceeded);
}

TEST_CASE("group coboundary") {
    Env e;
    auto c3 = make_template("s", {GenClass::U1}, [](const std::vector<Expr>& a) { return C3(a[0]); });
    auto dc3 = group_coboundary(c3);
    CHECK(dc3.arity() == 2);
    auto ddc3 = group_coboundary(dc3);
    CHECK(ddc3.arity() == 3);
    SlotEnv env(ddc3, &e.decls);
    CHECK(normalize(ddc3.body, RelationSet(&env)).is_zero());

    auto b2 = make_template("t", {GenClass::U1, GenClass::U1}, [](const std::vector<Expr>& a) {
        return tr(group_inverse(a[0]) * d(a[0]) * d(a[1]) * group_inverse(a[1]));
    });
    auto ddb2 = group_coboundary(group_coboundary(b2));
    SlotEnv env2(ddb2, &e.decls);
    CHECK(normalize(ddb2.body, RelationSet(&env2)).is_zero());

    auto c0 = make_template("c", {}, [](const std::vector<Expr>&) { return Expr::constant(5); });
    CHECK(group_coboundary(c0).body.is_zero());
    auto c1 = make_template("c", {GenClass::U}, [](const std::vector<Expr>&) { return Expr::constant(5); });
    CHECK(group_coboundary(c1).body == Expr::constant(5));
}

TEST_CASE("trace-class lint") {
    Env e;
    CHECK_FALSE(trace_class_lint(tr(e.mc("phi")), e.decls).clean());
    CHECK(trace_class_lint(C3(e.gen("f")), e.decls).clean());
}

TEST_CASE("scripts") {
    Script s = parse_script(
        "gen g0: U1 det a0;  gen phi01: U;  gen g1: U1 det a1;\n"
        "rel g1 = phi01^-1 * g0 * phi01;\n"
        "assert d tr[(g1^-1 * d g1)^3] == 0;\n"
        "assert tr[g1^-1 * d g1] == tr[g0^-1 * d g0];\n");
    auto rs = run_script(s);
    REQUIRE(rs.size() == 2);
    for (const auto& r : rs) CHECK_MESSAGE(r.ok, r.error, " ", r.residue.str());
}

TEST_CASE("symcalc property suites") {
    auto dd = props::symcalc_d_squared(2024, 1000);
    CHECK_MESSAGE(dd.ok(), dd.first_failure);
    CHECK(dd.instances == 1000);
    auto ni = props::symcalc_normalize_idempotent(2024, 1000);
    CHECK_MESSAGE(ni.ok(), ni.first_failure);
    CHECK(ni.instances == 1000);
}
