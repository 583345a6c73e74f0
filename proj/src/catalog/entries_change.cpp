#include "cf/catalog/catalog.hpp"
#include "cf/catalog/forms.hpp"

namespace cf::cat {

namespace {

using S = Context::ScalarSpec;

constexpr std::uint64_t kLarge = 20000000;

Builder family(const Context* c, const std::string& fam) {
    return [c, fam](const Idx& i) { return c->sc(fam, i); };
}

void add(Registry& r, std::string id, std::string loc, std::string quote, int arity, std::uint64_t budget,
         std::function<Task()> build) {
    r.push_back(Entry{std::move(id), std::move(loc), std::move(quote), arity, budget, std::move(build)});
}

SymCochain deligne(int total, int order) {
    SymCochain x;
    x.total = total;
    x.order = order;
    return x;
}

SymCochain cdr(int total) {
    SymCochain x;
    x.total = total;
    return x;
}

Expr at(const Context* c, const std::string& fam, const Idx& i, std::initializer_list<int> q) {
    return c->sc(fam, pick(i, q));
}

/* Twist, global alpha with a = 0, m, and lambda with beta = m u h + D lambda. */
std::shared_ptr<Context> omega_context() {
    auto ctx = std::make_shared<Context>();
    Context& c = *ctx;
    const Context* p = ctx.get();
    declare_twist(c);
    c.scalar_free("alpha", S{-1, 0, false, false});
    c.scalar_defined("a", S{1, 0, true, true}, [](const Idx&) { return Expr(); });
    c.op_conjugate("g", "phi", "alpha");
    c.scalar_free("m", S{-1, 0, true, true});
    SymCochain b = beta(c);
    c.scalar_cone("lambdaO", S{2, 0, false, false}, [p, b](const Idx& j) { return b.at(1, j) - p->sc("m") * p->sc("h", j); });
    c.scalar_cone("lambdaI", S{1, 1, false, false}, [p, b](const Idx& j) { return b.at(2, j) - p->dsc("lambdaO", j); });
    c.scalar_cone("lambdaII", S{0, 2, false, false}, [p, b](const Idx& j) { return b.at(3, j) + p->dsc("lambdaI", j); });
    c.set_d_rule("lambdaII", [b](const Idx& j) { return b.at(4, j); });
    return ctx;
}

OmegaData omega_data(const Context* c) {
    return OmegaData{family(c, "h"), family(c, "lambdaO"), family(c, "lambdaI"), family(c, "lambdaII"), c->sc("m")};
}

void register_additivity(Registry& r) {
    auto context = [] {
        auto ctx = std::make_shared<Context>();
        Context& c = *ctx;
        const Context* p = ctx.get();
        declare_twist(c);
        declare_section(c);
        Families fp;
        fp.g = "gp";
        fp.alpha = "alphap";
        fp.a = "ap";
        declare_section(c, fp);
        c.scalar_defined("alphapp", S{0, 0, false, false}, [p](const Idx& i) { return p->sc("alphap", i) + p->sc("alpha", i); });
        c.scalar_defined("app", S{1, 0, true, true}, [p](const Idx& i) { return p->sc("ap", i) + p->sc("a", i); });
        c.op_defined("gpp", GenClass::U1, [p](const Idx& i) { return p->op("gp", i) * p->op("g", i); }, "alphapp");
        return ctx;
    };
    auto fams = [](const std::string& g, const std::string& alpha, const std::string& a) {
        Families f;
        f.g = g;
        f.alpha = alpha;
        f.a = a;
        return f;
    };
    auto sigma = [](const Context* c) {
        return [c](const Idx& i) { return B2(c->op("gp", i), c->op("g", i)).scaled(Rational(-1, 2), -2); };
    };
    add(r, "additivity.beta", "additivity of beta",
        "\\check{\\beta}'' - \\check{\\beta}' - \\check{\\beta} = (0, 0, 0, (\\delta \\sigma^{[2]})_{ij}, d \\sigma^{[2]}_i) "
        "= D(0, 0, 0, \\sigma^{[2]}_i), \\sigma^{[2]}_i = \\frac{1}{8\\pi^2} B_2(g'_i, g_i)",
        6, kDefaultBudget, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain lhs = beta(*c, fams("gpp", "alphapp", "app")) - beta(*c, fams("gp", "alphap", "ap")) - beta(*c);
            SymCochain s = deligne(3, 4);
            s.slots[3] = sigma(c);
            t.cochains("beta", lhs, D(s));
            return t;
        });
    add(r, "additivity.gamma", "additivity of gamma",
        "\\check{\\gamma}'' - \\check{\\gamma}' - \\check{\\gamma} = (0, 0, 0, 2 h \\cup \\sigma^{[2]}, 0, 0, 0) + D(0, 0, 0, "
        "\\xi^{[2]}, \\xi^{[3]}, \\xi^{[4]}), \\xi^{[4]}_0 = \\frac{-i}{48\\pi^3} B_4(g'_0, g_0), \\xi^{[3]}_{01} = "
        "\\frac{i}{48\\pi^3} \\{ A(\\phi_{10}, g'_0, g_0) - A(g'_1, \\phi_{10}, g_0) + A(g'_1, g_1, \\phi_{10}) \\}, "
        "\\xi^{[2]}_{012} = -2 \\eta_{012} \\sigma^{[2]}_2",
        8, kLarge, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain lhs =
                gamma(*c, fams("gpp", "alphapp", "app")) - gamma(*c, fams("gp", "alphap", "ap")) - gamma(*c);
            SymCochain s = deligne(3, 4);
            Builder sg = sigma(c);
            s.slots[3] = sg;
            SymCochain xi = deligne(5, 6);
            xi.slots[5] = [c](const Idx& i) { return B4(c->op("gp", i), c->op("g", i)).scaled(Rational(-1, 6), -3); };
            xi.slots[4] = [c](const Idx& i) {
                Expr p10 = c->op("phi", {i[1], i[0]}), gp0 = c->op("gp", {i[0]}), gp1 = c->op("gp", {i[1]});
                Expr g0 = c->op("g", {i[0]}), g1 = c->op("g", {i[1]});
                return (A(p10, gp0, g0) - A(gp1, p10, g0) + A(gp1, g1, p10)).scaled(Rational(1, 6), -3);
            };
            xi.slots[3] = [c, sg](const Idx& i) { return (c->sc("eta", i) * sg({i[2]})).scaled(-2); };
            SymCochain rhs = scale(with_order(deligne_cup(integer_family(*c, "h", 3), s), 6), 2) + D(xi);
            t.cochains("gamma", lhs, rhs);
            return t;
        });
}

void register_change_alpha(Registry& r) {
    auto context = [] {
        auto ctx = std::make_shared<Context>();
        const Context* p = ctx.get();
        declare_standard(*ctx);
        ctx->scalar_free("s", S{0, 0, true, true});
        ctx->scalar_defined("alphap", S{0, 0, false, false}, [p](const Idx& i) { return p->sc("alpha", i) + p->sc("s", i); });
        ctx->scalar_defined("ap", S{1, 0, true, true}, [p](const Idx& i) { return p->sc("a", i) + delta(family(p, "s"), i); });
        return ctx;
    };
    auto primed = [] {
        Families f;
        f.alpha = "alphap";
        f.a = "ap";
        return f;
    };
    add(r, "change-alpha.beta", "change of alpha",
        "\\check{\\beta}' - \\check{\\beta} = (b' - b, {\\beta'}^{[0]} - \\beta^{[0]}, 0, 0, 0) = ( \\delta (h \\cup s), - h "
        "\\cup s, 0, 0, 0) = D( h \\cup s, 0, 0, 0)",
        6, kDefaultBudget, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain hs = deligne(3, 4);
            hs.slots[0] = [c](const Idx& i) { return c->sc("h", i) * c->sc("s", {i[3]}); };
            t.cochains("beta", beta(*c, primed()) - beta(*c), D(hs));
            return t;
        });
    add(r, "change-alpha.gamma", "change of alpha",
        "\\check{\\gamma}' - \\check{\\gamma} - 2 (h \\cup s, 0, 0, 0, 0, 0, 0) = D (t, 0, 0, 0, 0, 0), t = (Q(h) \\cup s)",
        8, kDefaultBudget, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain hhs = deligne(6, 6);
            hhs.slots[0] = [c](const Idx& i) {
                return at(c, "h", i, {0, 1, 2, 3}) * at(c, "h", i, {3, 4, 5, 6}) * c->sc("s", {i[6]});
            };
            SymCochain tt = deligne(5, 6);
            tt.slots[0] = [c](const Idx& i) { return Q(*c, "h", i) * c->sc("s", {i[5]}); };
            t.cochains("gamma", gamma(*c, primed()) - gamma(*c) - scale(hhs, 2), D(tt));
            return t;
        });
    add(r, "change-alpha.omega", "change of alpha, omega", "\\omega' = \\omega", 7, kLarge, [] {
        Task t;
        t.ctx = omega_context();
        Context& c = *t.ctx;
        const Context* p = t.ctx.get();
        c.scalar_free("s", S{-1, 0, true, true});
        c.scalar_defined("alphap", S{-1, 0, false, false}, [p](const Idx&) { return p->sc("alpha") + p->sc("s"); });
        Families f;
        f.alpha = "alphap";
        OmegaData w = omega_data(p), wp = w;
        wp.m = p->sc("m") - p->sc("s");
        t.cochains("omega", omega(gamma(c, f), wp), omega(gamma(c), w));
        return t;
    });
}

void register_change_eta(Registry& r) {
    auto context = [] {
        auto ctx = std::make_shared<Context>();
        const Context* p = ctx.get();
        declare_standard(*ctx);
        ctx->scalar_free("r", S{2, 0, true, true});
        ctx->scalar_defined("etap", S{2, 0, false, false}, [p](const Idx& i) { return p->sc("eta", i) + p->sc("r", i); });
        ctx->scalar_defined("hp", S{3, 0, true, true}, [p](const Idx& i) { return p->sc("h", i) + delta(family(p, "r"), i); });
        return ctx;
    };
    auto primed = [] {
        Families f;
        f.eta = "etap";
        f.h = "hp";
        return f;
    };
    auto rho = [](const Context* c) {
        SymCochain x = deligne(2, 1);
        x.slots[0] = family(c, "r");
        return x;
    };
    auto alpha = [](const Context* c) {
        SymCochain x = deligne(1, 1);
        x.slots[0] = family(c, "a");
        x.slots[1] = family(c, "alpha");
        return x;
    };
    add(r, "change-eta.beta", "change of eta", "\\check{\\beta}' - \\check{\\beta} = - D (\\check{\\rho} \\cup \\check{\\alpha})",
        6, kDefaultBudget, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            t.cochains("beta", beta(*c, primed()) - beta(*c), scale(D(with_order(deligne_cup(rho(c), alpha(c)), 4)), -1));
            return t;
        });
    add(r, "change-eta.gamma", "change of eta",
        "\\check{\\gamma}' - \\check{\\gamma} + 2(\\check{\\rho} \\cup \\check{\\beta} + \\check{h}' \\cup \\check{\\rho} \\cup "
        "\\check{\\alpha}) = D (k, \\kappa^{[0]}, \\kappa^{[1]}, 0, 0, 0)",
        8, kLarge, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain b = beta(*c);
            SymCochain hra = deligne_cup(deligne_cup(integer_family(*c, "hp", 3), rho(c)), alpha(c));
            SymCochain lhs = gamma(*c, primed()) - gamma(*c) +
                             scale(with_order(deligne_cup(rho(c), b), 6) + with_order(hra, 6), 2);
            auto R = [c](const Idx& i, std::initializer_list<int> q) { return at(c, "r", i, q); };
            auto H = [c](const Idx& i, std::initializer_list<int> q) { return at(c, "h", i, q); };
            auto Hp = [c](const Idx& i, std::initializer_list<int> q) { return at(c, "hp", i, q); };
            auto A = [c](const Idx& i, std::initializer_list<int> q) { return at(c, "a", i, q); };
            auto B = [b](int slot, const Idx& i, std::initializer_list<int> q) { return b.at(slot, pick(i, q)); };
            SymCochain kappa = deligne(5, 6);
            kappa.slots[2] = [=](const Idx& i) {
                return R(i, {0, 1, 2}) * B(2, i, {0, 2, 3}) - R(i, {1, 2, 3}) * B(2, i, {0, 1, 3});
            };
            kappa.slots[1] = [=](const Idx& i) {
                Expr a4 = c->sc("alpha", {i[4]});
                return R(i, {0, 1, 2}) * R(i, {2, 3, 4}) * a4 - Hp(i, {1, 2, 3, 4}) * R(i, {0, 1, 4}) * a4 -
                       Hp(i, {0, 1, 2, 3}) * R(i, {0, 3, 4}) * a4 + R(i, {2, 3, 4}) * B(1, i, {0, 1, 2, 4}) -
                       R(i, {1, 2, 3}) * B(1, i, {0, 1, 3, 4}) + R(i, {0, 1, 2}) * B(1, i, {0, 2, 3, 4});
            };
            kappa.slots[0] = [=](const Idx& i) {
                return -((Hp(i, {1, 2, 3, 4}) * R(i, {0, 1, 4}) + Hp(i, {0, 1, 2, 3}) * R(i, {0, 3, 4}) -
                          R(i, {0, 1, 2}) * R(i, {2, 3, 4})) *
                         A(i, {4, 5})) -
                       H(i, {0, 1, 2, 3}) * R(i, {3, 4, 5}) * A(i, {3, 5}) - R(i, {3, 4, 5}) * B(0, i, {0, 1, 2, 3, 5}) +
                       R(i, {2, 3, 4}) * B(0, i, {0, 1, 2, 4, 5}) - R(i, {1, 2, 3}) * B(0, i, {0, 1, 3, 4, 5}) +
                       R(i, {0, 1, 2}) * B(0, i, {0, 2, 3, 4, 5});
            };
            t.cochains("gamma", lhs, D(kappa));
            return t;
        });

    /* Proof pieces, with every cochain unconstrained. */
    auto free_context = [] {
        auto c = std::make_shared<Context>();
        c->scalar_free("r", S{2, 0, true, true});
        c->scalar_free("betaO", S{3, 0, false, false});
        c->scalar_free("a", S{1, 0, true, true});
        c->scalar_free("b", S{4, 0, true, true});
        return c;
    };
    add(r, "change-eta.aux.deltam", "change of eta, the cochain m",
        "(\\delta m)_{012345} = r_{012} \\beta^{[0]}_{2345} - r_{345} \\beta^{[0]}_{0123} + (\\delta r)_{2345} "
        "\\beta^{[0]}_{0125} + (\\delta r)_{1234} \\beta^{[0]}_{0145} + (\\delta r)_{0123} \\beta^{[0]}_{0345} + r_{345} "
        "(\\delta \\beta^{[0]})_{01235} - r_{234} (\\delta \\beta^{[0]})_{01245} + r_{123} (\\delta \\beta^{[0]})_{01345} - "
        "r_{012} (\\delta \\beta^{[0]})_{02345}",
        6, kDefaultBudget, [=] {
            Task t;
            t.ctx = free_context();
            const Context* c = t.ctx.get();
            Builder rr = family(c, "r"), b0 = family(c, "betaO");
            auto R = [&](std::initializer_list<int> q) { return rr(Idx(q)); };
            auto B0 = [&](std::initializer_list<int> q) { return b0(Idx(q)); };
            auto dR = [&](std::initializer_list<int> q) { return delta(rr, Idx(q)); };
            auto dB0 = [&](std::initializer_list<int> q) { return delta(b0, Idx(q)); };
            Builder m = [rr, b0](const Idx& i) {
                return rr(pick(i, {2, 3, 4})) * b0(pick(i, {0, 1, 2, 4})) - rr(pick(i, {1, 2, 3})) * b0(pick(i, {0, 1, 3, 4})) +
                       rr(pick(i, {0, 1, 2})) * b0(pick(i, {0, 2, 3, 4}));
            };
            Expr rhs = R({0, 1, 2}) * B0({2, 3, 4, 5}) - R({3, 4, 5}) * B0({0, 1, 2, 3}) + dR({2, 3, 4, 5}) * B0({0, 1, 2, 5}) +
                       dR({1, 2, 3, 4}) * B0({0, 1, 4, 5}) + dR({0, 1, 2, 3}) * B0({0, 3, 4, 5}) +
                       R({3, 4, 5}) * dB0({0, 1, 2, 3, 5}) - R({2, 3, 4}) * dB0({0, 1, 2, 4, 5}) +
                       R({1, 2, 3}) * dB0({0, 1, 3, 4, 5}) - R({0, 1, 2}) * dB0({0, 2, 3, 4, 5});
            t.eq("deltam", delta(m, simplex(5)), rhs);
            return t;
        });
    add(r, "change-eta.aux.deltap", "change of eta, the cochain p",
        "(\\delta p)_{0123} = - r_{123} a_{01} + r_{012} a_{23} + (\\delta r)_{0123} a_{03} + r_{123} (\\delta a)_{013} - "
        "r_{012} (\\delta a)_{023}",
        4, kDefaultBudget, [=] {
            Task t;
            t.ctx = free_context();
            const Context* c = t.ctx.get();
            Builder rr = family(c, "r"), aa = family(c, "a");
            Builder p = [rr, aa](const Idx& i) { return rr(i) * aa(pick(i, {0, 2})); };
            Expr rhs = -(rr({1, 2, 3}) * aa({0, 1})) + rr({0, 1, 2}) * aa({2, 3}) + delta(rr, {0, 1, 2, 3}) * aa({0, 3}) +
                       rr({1, 2, 3}) * delta(aa, {0, 1, 3}) - rr({0, 1, 2}) * delta(aa, {0, 2, 3});
            t.eq("deltap", delta(p, simplex(3)), rhs);
            return t;
        });
    add(r, "change-eta.aux.deltaq", "change of eta, the cochain q",
        "(\\delta q)_{0123456} = r_{456} b_{01234} - r_{012}b_{23456} - (\\delta r)_{3456} b_{01236} - (\\delta r)_{2345} "
        "b_{01256} - (\\delta r)_{1234} b_{01456} - (\\delta r)_{0123} b_{03456} + r_{456} (\\delta b)_{012346} - r_{345} "
        "(\\delta b)_{012356} + r_{234} (\\delta b)_{012456} - r_{123} (\\delta b)_{013456} + r_{012} (\\delta "
        "b)_{023456}",
        7, kDefaultBudget, [=] {
            Task t;
            t.ctx = free_context();
            const Context* c = t.ctx.get();
            Builder rr = family(c, "r"), bb = family(c, "b");
            auto R = [&](std::initializer_list<int> q) { return rr(Idx(q)); };
            auto Bq = [&](std::initializer_list<int> q) { return bb(Idx(q)); };
            auto dR = [&](std::initializer_list<int> q) { return delta(rr, Idx(q)); };
            auto dB = [&](std::initializer_list<int> q) { return delta(bb, Idx(q)); };
            Builder q = [rr, bb](const Idx& i) {
                return rr(pick(i, {3, 4, 5})) * bb(pick(i, {0, 1, 2, 3, 5})) - rr(pick(i, {2, 3, 4})) * bb(pick(i, {0, 1, 2, 4, 5})) +
                       rr(pick(i, {1, 2, 3})) * bb(pick(i, {0, 1, 3, 4, 5})) - rr(pick(i, {0, 1, 2})) * bb(pick(i, {0, 2, 3, 4, 5}));
            };
            Expr rhs = R({4, 5, 6}) * Bq({0, 1, 2, 3, 4}) - R({0, 1, 2}) * Bq({2, 3, 4, 5, 6}) -
                       dR({3, 4, 5, 6}) * Bq({0, 1, 2, 3, 6}) - dR({2, 3, 4, 5}) * Bq({0, 1, 2, 5, 6}) -
                       dR({1, 2, 3, 4}) * Bq({0, 1, 4, 5, 6}) - dR({0, 1, 2, 3}) * Bq({0, 3, 4, 5, 6}) +
                       R({4, 5, 6}) * dB({0, 1, 2, 3, 4, 6}) - R({3, 4, 5}) * dB({0, 1, 2, 3, 5, 6}) +
                       R({2, 3, 4}) * dB({0, 1, 2, 4, 5, 6}) - R({1, 2, 3}) * dB({0, 1, 3, 4, 5, 6}) +
                       R({0, 1, 2}) * dB({0, 2, 3, 4, 5, 6});
            t.eq("deltaq", delta(q, simplex(6)), rhs);
            return t;
        });
    add(r, "change-eta.aux.Q", "change of eta, the cochain Q(h)",
        "Q(h')_{012345} - Q(h)_{012345} = \\delta (T + S - r \\cup r)_{012345} - 2 r_{012} h_{2345} + 2 h'_{0123} r_{345}",
        6, kDefaultBudget, [] {
            Task t;
            t.ctx = std::make_shared<Context>();
            Context& c = *t.ctx;
            const Context* p = t.ctx.get();
            c.scalar_cone("h", S{3, 0, true, true}, [](const Idx&) { return Expr(); });
            c.scalar_free("r", S{2, 0, true, true});
            c.scalar_defined("hp", S{3, 0, true, true}, [p](const Idx& i) { return p->sc("h", i) + delta(family(p, "r"), i); });
            Builder TSr = [p](const Idx& i) {
                auto R = [&](std::initializer_list<int> q) { return at(p, "r", i, q); };
                auto H = [&](std::initializer_list<int> q) { return at(p, "h", i, q); };
                auto Hp = [&](std::initializer_list<int> q) { return at(p, "hp", i, q); };
                Expr T = R({2, 3, 4}) * H({0, 1, 2, 4}) - R({1, 2, 3}) * H({0, 1, 3, 4}) + R({0, 1, 2}) * H({0, 2, 3, 4});
                Expr Sx = Hp({1, 2, 3, 4}) * R({0, 1, 4}) + Hp({0, 1, 2, 3}) * R({0, 3, 4});
                return T + Sx - R({0, 1, 2}) * R({2, 3, 4});
            };
            Idx s = simplex(5);
            Expr rhs = delta(TSr, s) - (p->sc("r", {0, 1, 2}) * p->sc("h", {2, 3, 4, 5})).scaled(2) +
                       (p->sc("hp", {0, 1, 2, 3}) * p->sc("r", {3, 4, 5})).scaled(2);
            t.eq("Q", Q(c, "hp", s) - Q(c, "h", s), rhs);
            return t;
        });
    add(r, "change-eta.omega", "change of eta, omega",
        "\\omega' - \\omega = D(\\kappa^{[0]} - 2r \\cup \\lambda^{[0]} + m (r \\cup r - T - S), \\kappa^{[1]} - 2 r \\cup "
        "\\lambda^{[1]}, -2 r \\cup \\lambda^{[2]}, 0, 0)",
        7, kLarge, [] {
            Task t;
            t.ctx = omega_context();
            Context& c = *t.ctx;
            const Context* p = t.ctx.get();
            c.scalar_free("r", S{2, 0, true, true});
            c.scalar_defined("etap", S{2, 0, false, false}, [p](const Idx& i) { return p->sc("eta", i) + p->sc("r", i); });
            c.scalar_defined("hp", S{3, 0, true, true}, [p](const Idx& i) { return p->sc("h", i) + delta(family(p, "r"), i); });
            Families f;
            f.eta = "etap";
            f.h = "hp";
            OmegaData w = omega_data(p), wp = w;
            wp.h = family(p, "hp");
            wp.lambda0 = [p](const Idx& i) {
                Expr r = p->sc("r", i);
                return p->sc("lambdaO", i) - r * p->sc("alpha") - p->sc("m") * r;
            };
            SymCochain b = beta(c);
            auto R = [p](const Idx& i, std::initializer_list<int> q) { return at(p, "r", i, q); };
            SymCochain x = cdr(4);
            x.slots[2] = [p](const Idx& i) { return (p->sc("r", i) * p->sc("lambdaII", {i[2]})).scaled(-2); };
            x.slots[1] = [=](const Idx& i) {
                Expr kappa1 = R(i, {0, 1, 2}) * b.at(2, pick(i, {0, 2, 3})) - R(i, {1, 2, 3}) * b.at(2, pick(i, {0, 1, 3}));
                return kappa1 - (R(i, {0, 1, 2}) * p->sc("lambdaI", pick(i, {2, 3}))).scaled(2);
            };
            x.slots[0] = [=](const Idx& i) {
                auto H = [&](std::initializer_list<int> q) { return at(p, "h", i, q); };
                auto Hp = [&](std::initializer_list<int> q) { return at(p, "hp", i, q); };
                auto B0 = [&](std::initializer_list<int> q) { return b.at(1, pick(i, q)); };
                Expr al = p->sc("alpha");
                Expr kappa0 = R(i, {0, 1, 2}) * R(i, {2, 3, 4}) * al - Hp({1, 2, 3, 4}) * R(i, {0, 1, 4}) * al -
                              Hp({0, 1, 2, 3}) * R(i, {0, 3, 4}) * al + R(i, {2, 3, 4}) * B0({0, 1, 2, 4}) -
                              R(i, {1, 2, 3}) * B0({0, 1, 3, 4}) + R(i, {0, 1, 2}) * B0({0, 2, 3, 4});
                Expr T = R(i, {2, 3, 4}) * H({0, 1, 2, 4}) - R(i, {1, 2, 3}) * H({0, 1, 3, 4}) + R(i, {0, 1, 2}) * H({0, 2, 3, 4});
                Expr Sx = Hp({1, 2, 3, 4}) * R(i, {0, 1, 4}) + Hp({0, 1, 2, 3}) * R(i, {0, 3, 4});
                Expr rr = R(i, {0, 1, 2}) * R(i, {2, 3, 4});
                return kappa0 - (R(i, {0, 1, 2}) * p->sc("lambdaO", pick(i, {2, 3, 4}))).scaled(2) +
                       p->sc("m") * (rr - T - Sx);
            };
            t.cochains("omega", omega(gamma(c, f), wp) - omega(gamma(c), w), D(x));
            return t;
        });
}

/* phi' = phi exp(tau rho), eta' = eta + delta rho. */
std::shared_ptr<Context> phi_change(std::shared_ptr<Context> ctx) {
    const Context* p = ctx.get();
    ctx->scalar_free("rho", S{1, 0, false, false});
    ctx->op_defined("phip", GenClass::U, [p](const Idx& i) {
        return p->op("phi", i) * Expr::unit(Name(mangle("rho", i)), 1);
    });
    ctx->scalar_defined("etap", S{2, 0, false, false}, [p](const Idx& i) { return p->sc("eta", i) + delta(family(p, "rho"), i); });
    return ctx;
}

/* The zeta cochain, as (0, 0, zeta1, zeta2, zeta3, 0) in Deligne slots. */
SymCochain zeta(const Context* c, const SymCochain& b) {
    auto rho = [c](const Idx& i, std::initializer_list<int> q) { return at(c, "rho", i, q); };
    auto drho = [c](const Idx& i, std::initializer_list<int> q) { return c->dsc("rho", pick(i, q)); };
    Builder rb = family(c, "rho");
    auto dlrho = [rb](const Idx& i, std::initializer_list<int> q) { return delta(rb, pick(i, q)); };
    auto B = [b](int slot, const Idx& i, std::initializer_list<int> q) { return b.at(slot, pick(i, q)); };
    auto da = [c](const Idx& i, int k) { return c->dsc("alpha", {i.at(static_cast<std::size_t>(k))}); };
    SymCochain z = deligne(5, 6);
    z.slots[4] = [=](const Idx& i) {
        Expr g0 = c->op("g", {i[0]}), g1 = c->op("g", {i[1]}), p10 = c->op("phi", {i[1], i[0]});
        return (rho(i, {0, 1}) * B(4, i, {1})).scaled(2) + drho(i, {0, 1}) * B(3, i, {0, 1}) +
               (drho(i, {0, 1}) * (B2(g1, p10) + B2(p10, g0))).scaled(Rational(1, 6), -2);
    };
    z.slots[3] = [=](const Idx& i) {
        return (rho(i, {0, 1}) * B(3, i, {1, 2})).scaled(2) + rho(i, {0, 1}) * drho(i, {1, 2}) * da(i, 2) +
               dlrho(i, {0, 1, 2}) * d(B(2, i, {0, 1, 2})) - (drho(i, {0, 2}) * B(2, i, {0, 1, 2})).scaled(2) +
               dlrho(i, {0, 1, 2}) * drho(i, {0, 2}) * da(i, 2);
    };
    z.slots[2] = [=](const Idx& i) {
        return (rho(i, {0, 1}) * B(2, i, {1, 2, 3})).scaled(2) - rho(i, {0, 1}) * dlrho(i, {1, 2, 3}) * da(i, 3) -
               (rho(i, {0, 3}) * d(B(1, i, {0, 1, 2, 3}))).scaled(2) + dlrho(i, {0, 2, 3}) * B(2, i, {0, 1, 2}) -
               dlrho(i, {0, 1, 3}) * B(2, i, {1, 2, 3});
    };
    return z;
}

void register_change_phi(Registry& r) {
    auto context = [] {
        auto ctx = std::make_shared<Context>();
        declare_standard(*ctx);
        return phi_change(ctx);
    };
    auto primed = [] {
        Families f;
        f.phi = "phip";
        f.eta = "etap";
        return f;
    };
    add(r, "change-phi.beta", "change of phi",
        "\\check{\\beta}' - \\check{\\beta} = (0, 0, \\delta(- \\rho^{[0]} d\\alpha^{[0]})_{ijk}, d( \\rho^{[0]} "
        "d\\alpha^{[0]})_{ij}, 0) = D(0, 0, - \\rho^{[0]}_{ij} d\\alpha^{[0]}_j, 0)",
        6, kDefaultBudget, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain x = deligne(3, 4);
            x.slots[2] = [c](const Idx& i) { return -(c->sc("rho", i) * c->dsc("alpha", {i[1]})); };
            t.cochains("beta", beta(*c, primed()) - beta(*c), D(x));
            return t;
        });
    add(r, "change-phi.gamma", "change of phi",
        "\\check{\\gamma}' - \\check{\\gamma} + 2 (0, 0, h \\cup \\rho \\cup d\\alpha^{[0]}, 0, 0, 0, 0) = - D (0, 0, "
        "\\zeta^{[1]}, \\zeta^{[2]}, \\zeta^{[3]}, 0)",
        8, kLarge, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain hr = deligne(6, 6);
            hr.slots[2] = [c](const Idx& i) {
                return at(c, "h", i, {0, 1, 2, 3}) * at(c, "rho", i, {3, 4}) * c->dsc("alpha", {i[4]});
            };
            SymCochain lhs = gamma(*c, primed()) - gamma(*c) + scale(hr, 2);
            t.cochains("gamma", lhs, scale(D(zeta(c, beta(*c))), -1));
            return t;
        });

    auto free_context = [] {
        auto c = std::make_shared<Context>();
        c->scalar_free("rho", S{1, 0, false, false});
        c->scalar_free("betaI", S{2, 1, false, false});
        c->scalar_free("betaO", S{3, 0, false, false});
        return c;
    };
    add(r, "change-phi.aux.deltap", "change of phi, the cochain p",
        "(\\delta p)_{0123} = - d\\rho^{[0]}_{01} \\beta^{[1]}_{123} + d\\rho^{[0]}_{23} \\beta^{[1]}_{012} + "
        "d\\rho^{[0]}_{03} (\\delta \\beta^{[1]})_{0123} + (\\delta d\\rho^{[0]})_{013} \\beta^{[1]}_{123} - (\\delta "
        "d\\rho^{[0]})_{023} \\beta^{[1]}_{012}",
        4, kDefaultBudget, [=] {
            Task t;
            t.ctx = free_context();
            const Context* c = t.ctx.get();
            Builder b1 = family(c, "betaI");
            Builder drho = [c](const Idx& i) { return c->dsc("rho", i); };
            Builder p = [b1, drho](const Idx& i) { return drho(pick(i, {0, 2})) * b1(i); };
            Expr rhs = -(drho({0, 1}) * b1({1, 2, 3})) + drho({2, 3}) * b1({0, 1, 2}) + drho({0, 3}) * delta(b1, {0, 1, 2, 3}) +
                       delta(drho, {0, 1, 3}) * b1({1, 2, 3}) - delta(drho, {0, 2, 3}) * b1({0, 1, 2});
            t.eq("deltap", delta(p, simplex(3)), rhs);
            return t;
        });
    add(r, "change-phi.aux.deltaq", "change of phi, the cochain q",
        "(\\delta q)_{01234} = - \\rho^{[0]}_{01} d\\beta^{[0]}_{1234} - \\rho^{[0]}_{34} d\\beta^{[0]}_{0123} + "
        "\\rho^{[0]}_{04} (\\delta d\\beta^{[0]})_{01234} + (\\delta \\rho^{[0]})_{014} d\\beta^{[0]}_{1234} + (\\delta "
        "\\rho^{[0]})_{034} d\\beta^{[0]}_{0123}",
        5, kDefaultBudget, [=] {
            Task t;
            t.ctx = free_context();
            const Context* c = t.ctx.get();
            Builder rho = family(c, "rho");
            Builder db0 = [c](const Idx& i) { return c->dsc("betaO", i); };
            Builder q = [rho, db0](const Idx& i) { return rho(pick(i, {0, 3})) * db0(i); };
            Expr rhs = -(rho({0, 1}) * db0({1, 2, 3, 4})) - rho({3, 4}) * db0({0, 1, 2, 3}) +
                       rho({0, 4}) * delta(db0, {0, 1, 2, 3, 4}) + delta(rho, {0, 1, 4}) * db0({1, 2, 3, 4}) +
                       delta(rho, {0, 3, 4}) * db0({0, 1, 2, 3});
            t.eq("deltaq", delta(q, simplex(4)), rhs);
            return t;
        });
    add(r, "change-phi.omega", "change of phi, omega", "\\omega' - \\omega = - D(0, \\zeta^{[1]}, \\zeta^{[2]}, \\zeta^{[3]}, 0)",
        7, kLarge, [=] {
            Task t;
            t.ctx = phi_change(omega_context());
            const Context* c = t.ctx.get();
            OmegaData w = omega_data(c), wp = w;
            wp.lambda1 = [c](const Idx& i) { return c->sc("lambdaI", i) - c->sc("rho", i) * c->dsc("alpha", {i[1]}); };
            SymCochain z = zeta(c, beta(*c));
            SymCochain x = cdr(4);
            for (int k = 1; k <= 3; ++k) x.slots[k] = z.slots.at(k + 1);
            t.cochains("omega", omega(gamma(*c, primed()), wp) - omega(gamma(*c), w), scale(D(x), -1));
            return t;
        });
}

/* psi_i, phi'_ij = psi_i phi_ij psi_j^-1, g'_i = psi_i g_i psi_i^-1. */
std::shared_ptr<Context> s_change(std::shared_ptr<Context> ctx) {
    const Context* p = ctx.get();
    ctx->op_free("psi", GenClass::U);
    ctx->op_defined("phip", GenClass::U, [p](const Idx& i) {
        return p->op("psi", {i[0]}) * p->op("phi", i) * group_inverse(p->op("psi", {i[1]}));
    });
    ctx->op_defined("gp", GenClass::U1, [p](const Idx& i) {
        Expr s = p->op("psi", i);
        return s * p->op("g", i) * group_inverse(s);
    }, "alpha");
    return ctx;
}

Builder tau2(const Context* c) {
    return [c](const Idx& i) {
        Expr s = c->op("psi", i), g = c->op("g", i), gp = c->op("gp", i);
        return (B2(s, g) - B2(gp, s)).scaled(Rational(-1, 2), -2);
    };
}

SymCochain xi_s(const Context* c) {
    Builder t2 = tau2(c);
    SymCochain xi = deligne(5, 6);
    xi.slots[5] = [c](const Idx& i) {
        Expr s = c->op("psi", i), g = c->op("g", i), gp = c->op("gp", i);
        return (B4(gp, s) - B4(s, g)).scaled(Rational(1, 6), -3);
    };
    xi.slots[4] = [c](const Idx& i) {
        Expr s0 = c->op("psi", {i[0]}), s1 = c->op("psi", {i[1]});
        Expr g0 = c->op("g", {i[0]}), g1 = c->op("g", {i[1]}), gp0 = c->op("gp", {i[0]}), gp1 = c->op("gp", {i[1]});
        Expr pp = c->op("phip", {i[1], i[0]}), p = c->op("phi", {i[1], i[0]});
        return (A(gp1, pp, s0) - A(pp, gp0, s0) + A(pp, s0, g0) - A(gp1, s1, p) + A(s1, g1, p) - A(s1, p, g0))
            .scaled(Rational(1, 6), -3);
    };
    xi.slots[3] = [c, t2](const Idx& i) { return (c->sc("eta", i) * t2({i[2]})).scaled(-2); };
    return xi;
}

void register_change_s(Registry& r) {
    auto context = [] {
        auto ctx = std::make_shared<Context>();
        declare_standard(*ctx);
        return s_change(ctx);
    };
    auto primed = [] {
        Families f;
        f.g = "gp";
        f.phi = "phip";
        return f;
    };
    add(r, "change-s.beta", "change of s",
        "\\check{\\beta'} - \\check{\\beta} = (0, 0, 0, \\delta \\tau^{[2]}_{ij}, d \\tau^{[2]}_i) = D(0, 0, 0, "
        "\\tau^{[2]}_i), \\tau^{[2]}_i = \\frac{1}{8\\pi^2} \\{ B(\\psi_i, g_i) - B(g'_i, \\psi_i) \\}",
        6, kDefaultBudget, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain x = deligne(3, 4);
            x.slots[3] = tau2(c);
            t.cochains("beta", beta(*c, primed()) - beta(*c), D(x));
            return t;
        });
    add(r, "change-s.gamma", "change of s",
        "\\check{\\gamma}' - \\check{\\gamma} - (0, 0, 0, 2h \\cup \\tau^{[2]}, 0, 0, 0) = D (0, 0, 0, \\xi^{[2]}, "
        "\\xi^{[3]}, \\xi^{[4]})",
        8, kLarge, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            SymCochain x = deligne(3, 4);
            x.slots[3] = tau2(c);
            SymCochain ht = scale(with_order(deligne_cup(integer_family(*c, "h", 3), x), 6), 2);
            t.cochains("gamma", gamma(*c, primed()) - gamma(*c) - ht, D(xi_s(c)));
            return t;
        });
    add(r, "change-s.nu", "change of s, nu",
        "\\nu ' - \\nu = (0, 0, 0, \\delta (\\tau^{[2]} d \\alpha^{[0]})_{ij}, d(\\tau^{[2]}_i d\\alpha^{[0]}_i)) = D(0, 0, 0, "
        "\\tau^{[2]}_i d\\alpha^{[0]}_i)",
        3, kDefaultBudget, [=] {
            Task t;
            t.ctx = context();
            const Context* c = t.ctx.get();
            Builder da = [c](const Idx& i) { return c->dsc("alpha", i); };
            Builder t2 = tau2(c);
            SymCochain x = cdr(3);
            x.slots[3] = [t2, da](const Idx& i) { return t2(i) * da(i); };
            t.cochains("nu", nu(beta(*c, primed()), da) - nu(beta(*c), da), D(x));
            return t;
        });
    add(r, "change-s.omega", "change of s, omega", "\\omega' - \\omega = D(0, 0, \\xi^{[2]}, \\xi^{[3]}, \\xi^{[4]})", 7, kLarge,
        [=] {
            Task t;
            t.ctx = s_change(omega_context());
            const Context* c = t.ctx.get();
            OmegaData w = omega_data(c), wp = w;
            Builder t2 = tau2(c);
            wp.lambda2 = [c, t2](const Idx& i) { return c->sc("lambdaII", i) + t2(i); };
            SymCochain xi = xi_s(c);
            SymCochain x = cdr(4);
            for (int k = 2; k <= 4; ++k) x.slots[k] = xi.slots.at(k + 1);
            t.cochains("omega", omega(gamma(*c, primed()), wp) - omega(gamma(*c), w), D(x));
            return t;
        });
}

}  // namespace

void register_change_entries(Registry& r) {
    register_additivity(r);
    register_change_alpha(r);
    register_change_eta(r);
    register_change_phi(r);
    register_change_s(r);
}

}  // namespace cf::cat
