#include "cf/catalog/catalog.hpp"
#include "cf/catalog/forms.hpp"

namespace cf::cat {

namespace {

using S = Context::ScalarSpec;

constexpr std::uint64_t kLarge = 20000000;

Builder family(const std::shared_ptr<Context>& c, const std::string& fam) {
    const Context* p = c.get();
    return [p, fam](const Idx& i) { return p->sc(fam, i); };
}

Builder dfamily(const std::shared_ptr<Context>& c, const std::string& fam) {
    const Context* p = c.get();
    return [p, fam](const Idx& i) { return p->dsc(fam, i); };
}

SymCochain zero_cochain(int total, int order = -1) {
    SymCochain z;
    z.total = total;
    z.order = order;
    return z;
}

void add(Registry& r, std::string id, std::string loc, std::string quote, int arity, std::uint64_t budget,
         std::function<Task()> build) {
    r.push_back(Entry{std::move(id), std::move(loc), std::move(quote), arity, budget, std::move(build)});
}

std::shared_ptr<Context> standard() {
    auto c = std::make_shared<Context>();
    declare_standard(*c);
    return c;
}

/* B(g_j, phi_ji) - B(phi_ji, g_i), i.e. -8 pi^2 beta2_ij. */
Expr beta2_tilde(const Context& c, int i, int j) {
    Expr gi = c.op("g", {i}), gj = c.op("g", {j}), p = c.op("phi", {j, i});
    return B2(gj, p) - B2(p, gi);
}

Expr delta_beta2_tilde(const Context& c, int a, int b, int e) {
    return beta2_tilde(c, b, e) - beta2_tilde(c, a, e) + beta2_tilde(c, a, b);
}

/* (delta A)(f, g, h, k). */
Expr deltaA(const Expr& f, const Expr& g, const Expr& h, const Expr& k) {
    return A(g, h, k) - A(f * g, h, k) + A(f, g * h, k) - A(f, g, h * k) + A(f, g, h);
}

/* Twist and a section-free alpha with delta alpha = a: the data beta1, beta0, b depend on. */
std::shared_ptr<Context> abstract_base() {
    auto c = std::make_shared<Context>();
    declare_twist(*c);
    c->scalar_cone("a", S{1, 0, true, true}, [](const Idx&) { return Expr(); });
    const Context* p = c.get();
    c->scalar_cone("alpha", S{0, 0, false, false}, [p](const Idx& j) { return p->sc("a", j); });
    return c;
}

Expr beta1_concrete(const Context& c, const Idx& i) { return -(c.sc("eta", i) * c.dsc("alpha", {i[2]})); }

/* beta2, beta3 as families subject to D beta = 0, over a concrete beta1. */
void declare_abstract_beta(const std::shared_ptr<Context>& c) {
    const Context* p = c.get();
    c->scalar_cone("betaII", S{1, 2, false, false}, [p](const Idx& j) { return -d(beta1_concrete(*p, j)); });
    c->scalar_cone("betaIII", S{0, 3, true, false}, [p](const Idx& j) { return p->dsc("betaII", j); });
}

SymCochain abstract_beta(const std::shared_ptr<Context>& c) {
    const Context* p = c.get();
    SymCochain b;
    b.total = 4;
    b.order = 4;
    b.slots[4] = family(c, "betaIII");
    b.slots[3] = family(c, "betaII");
    b.slots[2] = [p](const Idx& i) { return beta1_concrete(*p, i); };
    b.slots[1] = [p](const Idx& i) { return -(p->sc("h", i) * p->sc("alpha", {i[3]})); };
    b.slots[0] = [p](const Idx& i) { return -(p->sc("h", pick(i, {0, 1, 2, 3})) * p->sc("a", {i[3], i[4]})); };
    return b;
}

Expr gamma1_concrete(const Context& c, const Idx& i) {
    auto h = [&](std::initializer_list<int> q) { return c.sc("h", pick(i, q)); };
    return -(c.sc("eta", pick(i, {0, 1, 2})) * beta1_concrete(c, pick(i, {2, 3, 4}))) +
           h({1, 2, 3, 4}) * beta1_concrete(c, pick(i, {0, 1, 4})) + h({0, 1, 2, 3}) * beta1_concrete(c, pick(i, {0, 3, 4}));
}

/* gamma2..gamma5 as families subject to D gamma = -2 h u beta, over a concrete gamma1. */
void declare_abstract_gamma(const std::shared_ptr<Context>& c) {
    const Context* p = c.get();
    c->scalar_cone("gammaII", S{3, 2, false, false}, [p](const Idx& j) {
        return -d(gamma1_concrete(*p, j)) - (p->sc("h", pick(j, {0, 1, 2, 3})) * p->sc("betaII", pick(j, {3, 4}))).scaled(2);
    });
    c->scalar_cone("gammaIII", S{2, 3, false, false}, [p](const Idx& j) {
        return p->dsc("gammaII", j) - (p->sc("h", j) * p->sc("betaIII", {j[3]})).scaled(2);
    });
    c->scalar_cone("gammaIV", S{1, 4, false, false}, [p](const Idx& j) { return -p->dsc("gammaIII", j); });
    c->scalar_cone("gammaV", S{0, 5, true, false}, [p](const Idx& j) { return p->dsc("gammaIV", j); });
}

SymCochain abstract_gamma(const std::shared_ptr<Context>& c) {
    const Context* p = c.get();
    SymCochain g;
    g.total = 6;
    g.order = 6;
    g.slots[6] = family(c, "gammaV");
    g.slots[5] = family(c, "gammaIV");
    g.slots[4] = family(c, "gammaIII");
    g.slots[3] = family(c, "gammaII");
    g.slots[2] = [p](const Idx& i) { return gamma1_concrete(*p, i); };
    return g;
}

std::shared_ptr<Context> chern_context() {
    auto c = standard();
    const Context* p = c.get();
    c->scalar_cone("etaI", S{1, 1, false, false}, [p](const Idx& j) { return -p->dsc("eta", j); });
    c->scalar_cone("etaII", S{0, 2, false, false}, [p](const Idx& j) { return p->dsc("etaI", j); });
    return c;
}

ChernData chern_data(const std::shared_ptr<Context>& c) {
    return ChernData{family(c, "h"), family(c, "eta"), family(c, "etaI"), family(c, "etaII"), dfamily(c, "alpha")};
}

void register_beta_gamma(Registry& r) {
    const char* beta_eqs[5] = {"(\\delta b)_{ijklmn} = 0", "(\\delta \\beta^{[0]})_{ijklm} + b_{ijklm} = 0",
                               "(\\delta \\beta^{[1]})_{ijkl} - d\\beta^{[0]}_{ijkl} = 0",
                               "(\\delta \\beta^{[2]})_{ijk} + d\\beta^{[1]}_{ijk} = 0",
                               "(\\delta \\beta^{[3]})_{ij} - d\\beta^{[2]}_{ij} = 0"};
    const char* beta_names[5] = {"b", "0", "1", "2", "3"};
    for (int k = 0; k < 5; ++k) {
        add(r, std::string("beta.cocycle.") + beta_names[k], "Deligne 4-cochain beta is a cocycle", beta_eqs[k], 6 - k,
            kDefaultBudget, [k] {
                Task t;
                t.ctx = standard();
                SymCochain Db = D(beta(*t.ctx));
                Idx s = simplex(Db.cech(k));
                t.zero("slot " + std::to_string(k), Db.at(k, s));
                return t;
            });
    }
    add(r, "beta.closed", "Deligne 4-cochain beta, top component", "d \\beta^{[3]} = 0", 1, kDefaultBudget, [] {
        Task t;
        t.ctx = standard();
        t.zero("dbeta3", d(beta(*t.ctx).at(4, {0})));
        return t;
    });
    add(r, "beta.transition-form", "remark on beta2",
        "-\\beta^{[2]}_{ij} = \\frac{1}{8\\pi^2} \\tr [ d\\phi_{ij}\\phi_{ij}^{-1} (dg_ig_i^{-1} + g_i^{-1}dg_i + "
        "g_id\\phi_{ij}\\phi_{ij}^{-1}g_i^{-1}- d\\phi_{ij}\\phi_{ij}^{-1})]",
        2, kDefaultBudget, [] {
            Task t;
            t.ctx = standard();
            const Context& c = *t.ctx;
            Expr gi = c.op("g", {0}), p = c.op("phi", {0, 1});
            Expr P = d(p) * group_inverse(p);
            Expr rhs = tr(P * (d(gi) * group_inverse(gi) + group_inverse(gi) * d(gi) + gi * P * group_inverse(gi) - P));
            t.eq("-beta2", -beta(c).at(3, {0, 1}), rhs.scaled(Rational(-1, 2), -2));
            return t;
        });

    const char* gamma_eqs[7] = {"\\delta c = -2 h \\cup b",
                                "\\delta \\gamma^{[0]} + c = -2 h \\cup \\beta^{[0]}",
                                "\\delta \\gamma^{[1]} - d\\gamma^{[0]} = -2 h \\cup \\beta^{[1]}",
                                "\\delta \\gamma^{[2]} + d\\gamma^{[1]} = -2 h \\cup \\beta^{[2]}",
                                "\\delta \\gamma^{[3]} - d\\gamma^{[2]} = -2 h \\cup \\beta^{[3]}",
                                "\\delta \\gamma^{[4]} + d\\gamma^{[3]} = 0",
                                "\\delta \\gamma^{[5]} - d\\gamma^{[4]} = 0"};
    const char* gamma_names[7] = {"c", "0", "1", "2", "3", "4", "5"};
    for (int k = 0; k < 7; ++k) {
        add(r, std::string("gamma.coboundary.") + gamma_names[k], "coboundary of the Deligne 6-cochain gamma",
            gamma_eqs[k], 8 - k, kLarge, [k] {
                Task t;
                t.ctx = standard();
                const Context& c = *t.ctx;
                SymCochain b = beta(c);
                SymCochain lhs = D(gamma(c));
                SymCochain rhs = scale(with_order(deligne_cup(integer_family(c, "h", 3), b), 6), -2);
                Idx s = simplex(lhs.cech(k));
                t.eq("slot " + std::to_string(k), lhs.at(k, s), rhs.at(k, s));
                return t;
            });
    }

    /* Pieces of the proof for the gamma3 equation. */
    add(r, "gamma.aux.gamma3-split", "coboundary of gamma, decomposition of gamma3",
        "\\tilde{\\gamma}^{[3]}_{012} = -2(2\\pi\\sqrt{-1}) \\eta^{[0]}_{012} C(g_2) - 3(2\\pi \\sqrt{-1}) P_{012} - "
        "(2\\pi\\sqrt{-1}) Q_{012} + R_{012}",
        3, kDefaultBudget, [] {
            Task t;
            t.ctx = standard();
            const Context& c = *t.ctx;
            auto g = [&](int i) { return c.op("g", {i}); };
            auto phi = [&](int i, int j) { return c.op("phi", {i, j}); };
            Expr eta = c.sc("eta", {0, 1, 2}), p2110 = phi(2, 1) * phi(1, 0);
            Expr P = d(eta) * beta2_tilde(c, 0, 2);
            Expr Q = d(eta) * (B2(p2110, g(0)) + B2(g(2), p2110));
            Expr R = A(g(2), phi(2, 1), phi(1, 0)) - A(phi(2, 1), g(1), phi(1, 0)) + A(phi(2, 1), phi(1, 0), g(0));
            Expr rhs = (eta * C3(g(2))).scaled(-2, 1) - P.scaled(3, 1) - Q.scaled(1, 1) + R;
            t.eq("gamma3", gamma(c).at(4, {0, 1, 2}).scaled(6, 3), rhs);
            return t;
        });
    add(r, "gamma.aux.deltaP", "coboundary of gamma, the cochain P",
        "(\\delta P)_{0123} = d \\eta_{123} \\{ - \\tilde{\\beta}^{[2]}_{01} + (\\delta \\tilde{\\beta}^{[2]})_{013} \\} + "
        "d \\eta_{012} \\{ \\tilde{\\beta}^{[2]}_{23} - (\\delta \\tilde{\\beta}^{[2]})_{023} \\}",
        4, kDefaultBudget, [] {
            Task t;
            t.ctx = standard();
            const Context* c = t.ctx.get();
            Builder P = [c](const Idx& i) { return c->dsc("eta", i) * beta2_tilde(*c, i[0], i[2]); };
            Expr e123 = c->dsc("eta", {1, 2, 3}), e012 = c->dsc("eta", {0, 1, 2});
            Expr rhs = e123 * (-beta2_tilde(*c, 0, 1) + delta_beta2_tilde(*c, 0, 1, 3)) +
                       e012 * (beta2_tilde(*c, 2, 3) - delta_beta2_tilde(*c, 0, 2, 3));
            t.eq("deltaP", delta(P, simplex(3)), rhs);
            return t;
        });
    add(r, "gamma.aux.deltaQ", "coboundary of gamma, the cochain Q",
        "(\\delta Q)_{0123} = d \\eta_{123} \\{ B(\\phi_{32}\\phi_{21}, g_1) + B(g_3, \\phi_{32}\\phi_{21}) \\} + "
        "d \\eta_{123} \\{ - B(\\phi_{32}\\phi_{21}\\phi_{10}, g_0) - B(g_3, \\phi_{32}\\phi_{21}\\phi_{10}) \\} + "
        "d \\eta_{012} \\{ B(\\phi_{32}\\phi_{21}\\phi_{10}, g_0) + B(g_3, \\phi_{32}\\phi_{21}\\phi_{10}) \\} + "
        "d \\eta_{012} \\{ - B(\\phi_{21}\\phi_{10}, g_0) - B(g_2, \\phi_{21}\\phi_{10}) \\}",
        4, kDefaultBudget, [] {
            Task t;
            t.ctx = standard();
            const Context* c = t.ctx.get();
            auto g = [c](int i) { return c->op("g", {i}); };
            auto phi = [c](int i, int j) { return c->op("phi", {i, j}); };
            Builder Q = [c, g, phi](const Idx& i) {
                Expr pp = phi(i[2], i[1]) * phi(i[1], i[0]);
                return c->dsc("eta", i) * (B2(pp, g(i[0])) + B2(g(i[2]), pp));
            };
            Expr p321 = phi(3, 2) * phi(2, 1), p3210 = p321 * phi(1, 0), p210 = phi(2, 1) * phi(1, 0);
            Expr e123 = c->dsc("eta", {1, 2, 3}), e012 = c->dsc("eta", {0, 1, 2});
            Expr rhs = e123 * (B2(p321, g(1)) + B2(g(3), p321)) + e123 * (-B2(p3210, g(0)) - B2(g(3), p3210)) +
                       e012 * (B2(p3210, g(0)) + B2(g(3), p3210)) + e012 * (-B2(p210, g(0)) - B2(g(2), p210));
            t.eq("deltaQ", delta(Q, simplex(3)), rhs);
            return t;
        });
    add(r, "gamma.aux.deltaR", "coboundary of gamma, the cochain R",
        "(\\delta R)_{0123} = 2(2\\pi i) d\\eta_{012} \\{ - \\tilde{\\beta}^{[2]}_{23} + B(\\phi_{32}\\phi_{21}\\phi_{10}, g_0) "
        "- B(\\phi_{21}\\phi_{10}, g_0) \\} + 2(2\\pi i) d\\eta_{123} \\{ - \\tilde{\\beta}^{[2]}_{01} - B(g_3, "
        "\\phi_{32}\\phi_{21}\\phi_{10}) + B(g_3, \\phi_{32}\\phi_{21}) \\} + (\\delta A)(g_3, \\phi_{32}, \\phi_{21}, "
        "\\phi_{10}) - (\\delta A)(\\phi_{32}, g_2, \\phi_{21}, \\phi_{10}) + (\\delta A)(\\phi_{32}, \\phi_{21}, g_1, "
        "\\phi_{10}) - (\\delta A)(\\phi_{32}, \\phi_{21}, \\phi_{10}, g_0)",
        4, kLarge, [] {
            Task t;
            t.ctx = standard();
            const Context* c = t.ctx.get();
            auto g = [c](int i) { return c->op("g", {i}); };
            auto phi = [c](int i, int j) { return c->op("phi", {i, j}); };
            Builder R = [g, phi](const Idx& i) {
                Expr p21 = phi(i[2], i[1]), p10 = phi(i[1], i[0]);
                return A(g(i[2]), p21, p10) - A(p21, g(i[1]), p10) + A(p21, p10, g(i[0]));
            };
            Expr p32 = phi(3, 2), p21 = phi(2, 1), p10 = phi(1, 0);
            Expr p3210 = p32 * p21 * p10, p210 = p21 * p10, p321 = p32 * p21;
            Expr e123 = c->dsc("eta", {1, 2, 3}), e012 = c->dsc("eta", {0, 1, 2});
            Expr rhs = (e012 * (-beta2_tilde(*c, 2, 3) + B2(p3210, g(0)) - B2(p210, g(0)))).scaled(2, 1) +
                       (e123 * (-beta2_tilde(*c, 0, 1) - B2(g(3), p3210) + B2(g(3), p321))).scaled(2, 1) +
                       deltaA(g(3), p32, p21, p10) - deltaA(p32, g(2), p21, p10) + deltaA(p32, p21, g(1), p10) -
                       deltaA(p32, p21, p10, g(0));
            t.eq("deltaR", delta(R, simplex(3)), rhs);
            return t;
        });
    add(r, "gamma.aux.deltaQR", "coboundary of gamma, the combination of Q and R",
        "\\delta( - (2\\pi\\sqrt{-1}) Q + R)_{0123} = (2\\pi\\sqrt{-1})d\\eta_{012}\\{ -3\\tilde{\\beta}^{[2]}_{23} \\} "
        "+(2\\pi\\sqrt{-1})d\\eta_{012}\\{ -3\\tilde{\\beta}^{[2]}_{01} \\}",
        4, kLarge, [] {
            Task t;
            t.ctx = standard();
            const Context* c = t.ctx.get();
            auto g = [c](int i) { return c->op("g", {i}); };
            auto phi = [c](int i, int j) { return c->op("phi", {i, j}); };
            Builder QR = [c, g, phi](const Idx& i) {
                Expr p21 = phi(i[2], i[1]), p10 = phi(i[1], i[0]), pp = p21 * p10;
                Expr Q = c->dsc("eta", i) * (B2(pp, g(i[0])) + B2(g(i[2]), pp));
                Expr R = A(g(i[2]), p21, p10) - A(p21, g(i[1]), p10) + A(p21, p10, g(i[0]));
                return R - Q.scaled(1, 1);
            };
            Expr e123 = c->dsc("eta", {1, 2, 3}), e012 = c->dsc("eta", {0, 1, 2});
            Expr rhs = (e012 * beta2_tilde(*c, 2, 3)).scaled(-3, 1) + (e123 * beta2_tilde(*c, 0, 1)).scaled(-3, 1);
            t.eq("deltaQR", delta(QR, simplex(3)), rhs);
            return t;
        });
    add(r, "gamma.aux.delta-gamma3", "coboundary of gamma, the rescaled gamma3",
        "(\\delta \\tilde{\\gamma}^{[3]})_{0123} = (2\\pi\\sqrt{-1}) \\{ - 2 h_{0123} C(g_3) \\} + (2\\pi\\sqrt{-1}) \\{ - 6 "
        "d(\\eta_{012}\\tilde{\\beta}^{[2]}_{23}) + 3 ( d\\eta_{012} (\\delta \\tilde{\\beta}^{[2]})_{023} - d\\eta_{123} "
        "(\\delta \\tilde{\\beta}^{[2]})_{013} ) \\}",
        4, kLarge, [] {
            Task t;
            t.ctx = standard();
            const Context* c = t.ctx.get();
            SymCochain gm = gamma(*c);
            Builder g3 = [gm](const Idx& i) { return gm.at(4, i).scaled(6, 3); };
            Expr rhs = (c->sc("h", {0, 1, 2, 3}) * C3(c->op("g", {3}))).scaled(-2, 1) +
                       (d(c->sc("eta", {0, 1, 2}) * beta2_tilde(*c, 2, 3))).scaled(-6, 1) +
                       (c->dsc("eta", {0, 1, 2}) * delta_beta2_tilde(*c, 0, 2, 3) -
                        c->dsc("eta", {1, 2, 3}) * delta_beta2_tilde(*c, 0, 1, 3))
                           .scaled(3, 1);
            t.eq("delta gamma3", delta(g3, simplex(3)), rhs);
            return t;
        });

    /* k and l are checked with eta and h unconstrained. */
    auto free_eta_h = [] {
        auto c = std::make_shared<Context>();
        c->scalar_free("eta", S{2, 0, false, false});
        c->scalar_free("h", S{3, 0, true, true});
        return c;
    };
    add(r, "gamma.aux.deltak", "coboundary of gamma, the cochain k",
        "(\\delta k)_{01234} = \\eta_{012}d\\eta_{234} - \\eta_{234}d\\eta_{012} - \\eta_{234} \\delta(d\\eta)_{0124} + "
        "\\eta_{123} \\delta(d\\eta)_{0134} - \\eta_{012} \\delta(d\\eta)_{0234} + (\\delta \\eta)_{1234} d\\eta_{014} + "
        "(\\delta \\eta)_{0123} d\\eta_{034}",
        5, kDefaultBudget, [free_eta_h] {
            Task t;
            t.ctx = free_eta_h();
            Builder eta = family(t.ctx, "eta"), deta = dfamily(t.ctx, "eta");
            auto E = [&](std::initializer_list<int> q) { return eta(Idx(q)); };
            auto dE = [&](std::initializer_list<int> q) { return deta(Idx(q)); };
            auto dlE = [&](std::initializer_list<int> q) { return delta(eta, Idx(q)); };
            auto dldE = [&](std::initializer_list<int> q) { return delta(deta, Idx(q)); };
            Builder k = [eta, deta](const Idx& i) {
                return eta(pick(i, {0, 1, 2})) * deta(pick(i, {0, 2, 3})) - eta(pick(i, {1, 2, 3})) * deta(pick(i, {0, 1, 3}));
            };
            Expr rhs = E({0, 1, 2}) * dE({2, 3, 4}) - E({2, 3, 4}) * dE({0, 1, 2}) - E({2, 3, 4}) * dldE({0, 1, 2, 4}) +
                       E({1, 2, 3}) * dldE({0, 1, 3, 4}) - E({0, 1, 2}) * dldE({0, 2, 3, 4}) +
                       dlE({1, 2, 3, 4}) * dE({0, 1, 4}) + dlE({0, 1, 2, 3}) * dE({0, 3, 4});
            t.eq("deltak", delta(k, simplex(4)), rhs);
            return t;
        });
    add(r, "gamma.aux.deltal", "coboundary of gamma, the cochain l",
        "(\\delta \\ell)_{012345} = h_{2345} \\eta_{012} - h_{0123} \\eta_{345} - (\\delta h)_{12345} \\eta_{015} + "
        "(\\delta h)_{01234} \\eta_{045} + h_{2345} (\\delta \\eta)_{0125} + h_{1234} (\\delta \\eta)_{0145} + h_{0123} "
        "(\\delta \\eta)_{0345}",
        6, kDefaultBudget, [free_eta_h] {
            Task t;
            t.ctx = free_eta_h();
            Builder eta = family(t.ctx, "eta"), h = family(t.ctx, "h");
            auto E = [&](std::initializer_list<int> q) { return eta(Idx(q)); };
            auto H = [&](std::initializer_list<int> q) { return h(Idx(q)); };
            auto dlE = [&](std::initializer_list<int> q) { return delta(eta, Idx(q)); };
            auto dlH = [&](std::initializer_list<int> q) { return delta(h, Idx(q)); };
            Builder l = [eta, h](const Idx& i) {
                return h(pick(i, {1, 2, 3, 4})) * eta(pick(i, {0, 1, 4})) + h(pick(i, {0, 1, 2, 3})) * eta(pick(i, {0, 3, 4}));
            };
            Expr rhs = H({2, 3, 4, 5}) * E({0, 1, 2}) - H({0, 1, 2, 3}) * E({3, 4, 5}) - dlH({1, 2, 3, 4, 5}) * E({0, 1, 5}) +
                       dlH({0, 1, 2, 3, 4}) * E({0, 4, 5}) + H({2, 3, 4, 5}) * dlE({0, 1, 2, 5}) +
                       H({1, 2, 3, 4}) * dlE({0, 1, 4, 5}) + H({0, 1, 2, 3}) * dlE({0, 3, 4, 5});
            t.eq("deltal", delta(l, simplex(5)), rhs);
            return t;
        });

    add(r, "AUX.deltaQ", "remark on gamma0 and c", "\\delta Q(h) = - 2 h \\cup h", 7, kDefaultBudget, [] {
        Task t;
        t.ctx = std::make_shared<Context>();
        t.ctx->scalar_cone("h", S{3, 0, true, true}, [](const Idx&) { return Expr(); });
        const Context* c = t.ctx.get();
        Builder Q = [c](const Idx& i) { return cf::cat::Q(*c, "h", i); };
        Expr hh = c->sc("h", {0, 1, 2, 3}) * c->sc("h", {3, 4, 5, 6});
        t.eq("deltaQ", delta(Q, simplex(6)), hh.scaled(-2));
        return t;
    });
    add(r, "AUX.DP", "torsion case of the change of m and lambda", "D P = 2 h \\cup \\xi - Q", 6, kDefaultBudget, [] {
        Task t;
        t.ctx = std::make_shared<Context>();
        t.ctx->scalar_cone("h", S{3, 0, true, true}, [](const Idx&) { return Expr(); });
        const Context* c = t.ctx.get();
        t.ctx->scalar_cone("xi", S{2, 0, true, false}, [c](const Idx& j) { return c->sc("h", j); });
        auto xi = [c](const Idx& i, std::initializer_list<int> q) { return c->sc("xi", pick(i, q)); };
        auto h = [c](const Idx& i, std::initializer_list<int> q) { return c->sc("h", pick(i, q)); };
        SymCochain P;
        P.total = 4;
        P.slots[0] = [=](const Idx& i) {
            return xi(i, {0, 1, 2}) * xi(i, {2, 3, 4}) - h(i, {1, 2, 3, 4}) * xi(i, {0, 1, 4}) -
                   h(i, {0, 1, 2, 3}) * xi(i, {0, 3, 4});
        };
        SymCochain rhs;
        rhs.total = 5;
        rhs.slots[0] = [=](const Idx& i) {
            return (h(i, {0, 1, 2, 3}) * xi(i, {3, 4, 5})).scaled(2) - cf::cat::Q(*c, "h", i);
        };
        t.cochains("DP", D(P), rhs);
        return t;
    });
}

void register_characteristic(Registry& r) {
    add(r, "nu.cocycle", "Cech-de Rham 4-cochain nu is a cocycle",
        "\\nu = (0, 0, 0, \\beta^{[2]}_{ij} d\\alpha^{[0]}_j, \\beta^{[3]}_i d\\alpha^{[0]}_i) is a cocycle", 3,
        kDefaultBudget, [] {
            Task t;
            t.ctx = abstract_base();
            declare_abstract_beta(t.ctx);
            t.cochains("Dnu", D(nu(abstract_beta(t.ctx), dfamily(t.ctx, "alpha"))), zero_cochain(5));
            t.allowed_families = {"h", "eta", "a", "alpha", "betaII", "betaIII"};
            return t;
        });
    add(r, "pi.dS", "Cech-de Rham 9-cochain pi, the form S",
        "d S_{ij}^{[4]} = 2(\\beta^{[2]}_{ij}\\beta^{[3]}_j - \\beta^{[3]}_i\\beta^{[2]}_{ij})", 2, kDefaultBudget, [] {
            Task t;
            t.ctx = abstract_base();
            declare_abstract_beta(t.ctx);
            const Context& c = *t.ctx;
            Expr b2 = c.sc("betaII", {0, 1});
            t.eq("dS", d(S4(abstract_beta(t.ctx))({0, 1})),
                 (b2 * c.sc("betaIII", {1}) - c.sc("betaIII", {0}) * b2).scaled(2));
            return t;
        });
    add(r, "pi.deltaS", "Cech-de Rham 9-cochain pi, the form S",
        "(\\delta S^{[4]})_{ijk} = -2 \\beta^{[2]}_{ij} \\beta^{[2]}_{jk} - 2\\beta^{[2]}_{ik} d\\beta^{[1]}_{ijk}", 3,
        kDefaultBudget, [] {
            Task t;
            t.ctx = abstract_base();
            declare_abstract_beta(t.ctx);
            const Context& c = *t.ctx;
            auto b2 = [&](int i, int j) { return c.sc("betaII", {i, j}); };
            Expr rhs = (b2(0, 1) * b2(1, 2)).scaled(-2) + (b2(0, 2) * d(beta1_concrete(c, {0, 1, 2}))).scaled(-2);
            t.eq("deltaS", delta(S4(abstract_beta(t.ctx)), simplex(2)), rhs);
            return t;
        });
    add(r, "pi.cocycle", "Cech-de Rham 9-cochain pi is a cocycle", "\\pi is a cocycle", 6, kLarge, [] {
        Task t;
        t.ctx = abstract_base();
        declare_abstract_beta(t.ctx);
        declare_abstract_gamma(t.ctx);
        SymCochain p = pi(abstract_beta(t.ctx), abstract_gamma(t.ctx), family(t.ctx, "h"), dfamily(t.ctx, "alpha"));
        t.cochains("Dpi", D(p), zero_cochain(10));
        return t;
    });
    add(r, "omega.cocycle", "Cech-de Rham 5-cochain omega is a cocycle", "\\omega is a cocycle", 7, kLarge, [] {
        Task t;
        t.ctx = std::make_shared<Context>();
        Context& c = *t.ctx;
        const Context* p = t.ctx.get();
        declare_twist(c);
        c.scalar_free("alpha", S{-1, 0, false, false});
        c.scalar_defined("a", S{1, 0, true, true}, [](const Idx&) { return Expr(); });
        c.op_conjugate("g", "phi", "alpha");
        c.scalar_free("m", S{-1, 0, true, true});
        SymCochain b = beta(c);
        c.scalar_cone("lambdaO", S{2, 0, false, false},
                      [p, b](const Idx& j) { return b.at(1, j) - p->sc("m") * p->sc("h", j); });
        c.scalar_cone("lambdaI", S{1, 1, false, false},
                      [p, b](const Idx& j) { return b.at(2, j) - p->dsc("lambdaO", j); });
        c.scalar_cone("lambdaII", S{0, 2, false, false},
                      [p, b](const Idx& j) { return b.at(3, j) + p->dsc("lambdaI", j); });
        c.set_d_rule("lambdaII", [b](const Idx& j) { return b.at(4, j); });
        OmegaData w{family(t.ctx, "h"), family(t.ctx, "lambdaO"), family(t.ctx, "lambdaI"), family(t.ctx, "lambdaII"),
                    c.sc("m")};
        t.cochains("Domega", D(omega(gamma(c), w)), zero_cochain(6));
        return t;
    });
}

void register_chern(Registry& r) {
    add(r, "chern.Dalpha", "partial Chern character cochains", "D \\tilde{\\alpha} = 0", 2, kDefaultBudget, [] {
        Task t;
        t.ctx = chern_context();
        t.cochains("Dalpha", D(chern_alpha(chern_data(t.ctx))), zero_cochain(2));
        return t;
    });
    add(r, "chern.Dbeta", "partial Chern character cochains", "D \\tilde{\\beta} = \\tilde{\\eta} \\wedge \\tilde{\\alpha}",
        4, kDefaultBudget, [] {
            Task t;
            t.ctx = chern_context();
            ChernData cd = chern_data(t.ctx);
            t.cochains("Dbeta", D(chern_beta(beta(*t.ctx), cd)), wedge(chern_eta(cd), chern_alpha(cd)));
            return t;
        });
    add(r, "chern.Dgamma", "partial Chern character cochains",
        "D \\tilde{\\gamma} = 2\\tilde{\\eta} \\wedge \\tilde{\\beta}", 6, kLarge, [] {
            Task t;
            t.ctx = chern_context();
            ChernData cd = chern_data(t.ctx);
            SymCochain b = beta(*t.ctx);
            t.cochains("Dgamma", D(chern_gamma(b, gamma(*t.ctx), cd)), scale(wedge(chern_eta(cd), chern_beta(b, cd)), 2));
            return t;
        });
    add(r, "chern.beta-relation", "remark on the partial Chern cochain beta",
        "\\tilde{\\beta} = \\check{\\beta} + \\check{\\eta} \\cup \\check{\\alpha}", 5, kDefaultBudget, [] {
            Task t;
            t.ctx = chern_context();
            ChernData cd = chern_data(t.ctx);
            SymCochain bt = chern_beta(beta(*t.ctx), cd);
            SymCochain lhs;
            lhs.total = 4;
            lhs.order = 4;
            lhs.slots[3] = bt.slots.at(2);
            lhs.slots[4] = bt.slots.at(3);
            SymCochain alpha_check;
            alpha_check.total = 1;
            alpha_check.order = 1;
            alpha_check.slots[0] = family(t.ctx, "a");
            alpha_check.slots[1] = family(t.ctx, "alpha");
            t.cochains("beta-tilde", lhs, beta(*t.ctx) + deligne_cup(deligne_eta(cd), alpha_check));
            return t;
        });
}

}  // namespace

void register_cocycle_entries(Registry& r) {
    register_beta_gamma(r);
    register_characteristic(r);
    register_chern(r);
}

}  // namespace cf::cat
