#include "cf/catalog/forms.hpp"

#include <stdexcept>

namespace cf::cat {

namespace {

Expr mc(const Expr& f) { return group_inverse(f) * d(f); }
Expr mcbar(const Expr& f) { return d(f) * group_inverse(f); }

}  // namespace

Expr C3(const Expr& f) { return tr(pow(mc(f), 3)); }

Expr B2(const Expr& f, const Expr& g) { return tr(mc(f) * mcbar(g)); }

Expr C5(const Expr& f) { return tr(pow(mc(f), 5)); }

Expr B4(const Expr& f, const Expr& g) {
    Expr F = mc(f), G = mcbar(g);
    return tr(F * pow(G, 3) + pow(F * G, 2).scaled(Rational(1, 2)) + pow(F, 3) * G);
}

Expr A(const Expr& f, const Expr& g, const Expr& h) {
    Expr F = mc(f), H = mcbar(h);
    Expr gi = group_inverse(g);
    return tr(F * g * H * d(gi) + F * d(g) * H * gi);
}

Expr build_local_form(const std::string& name, const std::vector<Expr>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw std::invalid_argument(name + " takes " + std::to_string(n) + " arguments");
    };
    if (name == "C3") { need(1); return C3(args[0]); }
    if (name == "C5") { need(1); return C5(args[0]); }
    if (name == "B2") { need(2); return B2(args[0], args[1]); }
    if (name == "B4") { need(2); return B4(args[0], args[1]); }
    if (name == "A") { need(3); return A(args[0], args[1], args[2]); }
    throw std::invalid_argument("unknown local form " + name);
}

void declare_twist(Context& ctx, const Families& f) {
    using S = Context::ScalarSpec;
    ctx.scalar_cone(f.h, S{3, 0, true, true}, [](const Idx&) { return Expr(); });
    ctx.scalar_cone(f.eta, S{2, 0, false, false}, [&ctx, h = f.h](const Idx& j) { return ctx.sc(h, j); });
    ctx.op_transition(f.phi, f.eta);
}

void declare_section(Context& ctx, const Families& f) {
    using S = Context::ScalarSpec;
    ctx.scalar_cone(f.a, S{1, 0, true, true}, [](const Idx&) { return Expr(); });
    ctx.scalar_cone(f.alpha, S{0, 0, false, false}, [&ctx, a = f.a](const Idx& j) { return ctx.sc(a, j); });
    ctx.op_conjugate(f.g, f.phi, f.alpha);
}

void declare_standard(Context& ctx, const Families& f) {
    declare_twist(ctx, f);
    declare_section(ctx, f);
}

SymCochain beta(const Context& ctx, const Families& f) {
    SymCochain b;
    b.total = 4;
    b.order = 4;
    const Context* c = &ctx;
    b.slots[4] = [c, f](const Idx& i) { return C3(c->op(f.g, {i[0]})).scaled(Rational(1, 6), -2); };
    b.slots[3] = [c, f](const Idx& i) {
        Expr gi = c->op(f.g, {i[0]}), gj = c->op(f.g, {i[1]}), pji = c->op(f.phi, {i[1], i[0]});
        return (B2(gj, pji) - B2(pji, gi)).scaled(Rational(1, 2), -2);
    };
    b.slots[2] = [c, f](const Idx& i) { return -(c->sc(f.eta, {i[0], i[1], i[2]}) * c->dsc(f.alpha, {i[2]})); };
    b.slots[1] = [c, f](const Idx& i) { return -(c->sc(f.h, {i[0], i[1], i[2], i[3]}) * c->sc(f.alpha, {i[3]})); };
    b.slots[0] = [c, f](const Idx& i) { return -(c->sc(f.h, {i[0], i[1], i[2], i[3]}) * c->sc(f.a, {i[3], i[4]})); };
    return b;
}

Expr Q(const Context& ctx, const std::string& h, const Idx& i) {
    auto H = [&](std::initializer_list<int> pos) { return ctx.sc(h, pick(i, pos)); };
    return H({2, 3, 4, 5}) * H({0, 1, 2, 5}) + H({1, 2, 3, 4}) * H({0, 1, 4, 5}) + H({0, 1, 2, 3}) * H({0, 3, 4, 5});
}

SymCochain integer_family(const Context& ctx, const std::string& fam, int p) {
    const Context* c = &ctx;
    return integer_cochain(p, [c, fam](const Idx& i) { return c->sc(fam, i); });
}

SymCochain gamma(const Context& ctx, const Families& f) {
    SymCochain b = beta(ctx, f);
    SymCochain g;
    g.total = 6;
    g.order = 6;
    const Context* c = &ctx;
    auto G = [c, f](const Idx& i, int k) { return c->op(f.g, {i.at(static_cast<std::size_t>(k))}); };
    auto P = [c, f](const Idx& i, int a, int bb) {
        return c->op(f.phi, {i.at(static_cast<std::size_t>(a)), i.at(static_cast<std::size_t>(bb))});
    };
    auto eta = [c, f](const Idx& i, std::initializer_list<int> pos) { return c->sc(f.eta, pick(i, pos)); };
    auto h = [c, f](const Idx& i, std::initializer_list<int> pos) { return c->sc(f.h, pick(i, pos)); };
    auto bc = [b](int slot, const Idx& i, std::initializer_list<int> pos) { return b.at(slot, pick(i, pos)); };

    g.slots[6] = [=](const Idx& i) { return C5(G(i, 0)).scaled(Rational(1, 30), -3); };
    g.slots[5] = [=](const Idx& i) {
        return (B4(G(i, 1), P(i, 1, 0)) - B4(P(i, 1, 0), G(i, 0))).scaled(Rational(1, 6), -3);
    };
    g.slots[4] = [=](const Idx& i) {
        Expr p21 = P(i, 2, 1), p10 = P(i, 1, 0), p2110 = p21 * p10;
        Expr deta = d(eta(i, {0, 1, 2}));
        Expr out = -(eta(i, {0, 1, 2}) * bc(4, i, {2})).scaled(2);
        out -= deta * bc(3, i, {0, 2});
        out += (deta * (B2(p2110, G(i, 0)) + B2(G(i, 2), p2110))).scaled(Rational(-1, 6), -2);
        out += (A(G(i, 2), p21, p10) - A(p21, G(i, 1), p10) + A(p21, p10, G(i, 0))).scaled(Rational(1, 6), -3);
        return out;
    };
    g.slots[3] = [=](const Idx& i) {
        return -(eta(i, {0, 1, 2}) * bc(3, i, {2, 3})).scaled(2) - eta(i, {0, 1, 2}) * d(bc(2, i, {0, 2, 3})) +
               eta(i, {1, 2, 3}) * d(bc(2, i, {0, 1, 3}));
    };
    g.slots[2] = [=](const Idx& i) {
        return -(eta(i, {0, 1, 2}) * bc(2, i, {2, 3, 4})) + h(i, {1, 2, 3, 4}) * bc(2, i, {0, 1, 4}) +
               h(i, {0, 1, 2, 3}) * bc(2, i, {0, 3, 4});
    };
    g.slots[1] = [=](const Idx& i) {
        return h(i, {2, 3, 4, 5}) * bc(1, i, {0, 1, 2, 5}) + h(i, {1, 2, 3, 4}) * bc(1, i, {0, 1, 4, 5}) +
               h(i, {0, 1, 2, 3}) * bc(1, i, {0, 3, 4, 5});
    };
    g.slots[0] = [=](const Idx& i) {
        return h(i, {2, 3, 4, 5}) * bc(0, i, {0, 1, 2, 5, 6}) + h(i, {1, 2, 3, 4}) * bc(0, i, {0, 1, 4, 5, 6}) +
               h(i, {0, 1, 2, 3}) * bc(0, i, {0, 3, 4, 5, 6});
    };
    return g;
}

Builder form_part(const SymCochain& x, int q) {
    int slot = x.deligne() ? q + 1 : q;
    auto it = x.slots.find(slot);
    if (it == x.slots.end()) return [](const Idx&) { return Expr(); };
    return it->second;
}

Builder S4(const SymCochain& beta) {
    Builder b2 = form_part(beta, 2);
    return [b2](const Idx& i) {
        Expr x = b2(i);
        return x * x;
    };
}

SymCochain nu(const SymCochain& beta, const Builder& dalpha) {
    Builder b2 = form_part(beta, 2), b3 = form_part(beta, 3);
    SymCochain r;
    r.total = 4;
    r.slots[3] = [=](const Idx& i) { return b2(i) * dalpha({i[1]}); };
    r.slots[4] = [=](const Idx& i) { return b3(i) * dalpha(i); };
    return r;
}

SymCochain pi(const SymCochain& beta, const SymCochain& gamma, const Builder& h, const Builder& dalpha) {
    Builder b2 = form_part(beta, 2), b3 = form_part(beta, 3), S = S4(beta);
    Builder g2 = form_part(gamma, 2), g3 = form_part(gamma, 3), g4 = form_part(gamma, 4), g5 = form_part(gamma, 5);
    SymCochain r;
    r.total = 9;
    r.slots[9] = [=](const Idx& i) { return g5(i) * b3(i) * dalpha(i); };
    r.slots[8] = [=](const Idx& i) {
        Expr da = dalpha({i[1]});
        return g4(i) * b3({i[1]}) * da - g5({i[0]}) * b2(i) * da;
    };
    r.slots[7] = [=](const Idx& i) {
        Expr da = dalpha({i[2]});
        return g3(i) * b3({i[2]}) * da + g4(pick(i, {0, 1})) * b2(pick(i, {1, 2})) * da;
    };
    r.slots[6] = [=](const Idx& i) {
        Expr da = dalpha({i[3]});
        return g2(i) * b3({i[3]}) * da - g3(pick(i, {0, 1, 2})) * b2(pick(i, {2, 3})) * da;
    };
    r.slots[5] = [=](const Idx& i) {
        Expr da = dalpha({i[4]});
        Idx head = pick(i, {0, 1, 2, 3}), tail = pick(i, {3, 4});
        return g2(head) * b2(tail) * da + h(head) * S(tail) * da;
    };
    return r;
}

SymCochain omega(const SymCochain& gamma, const OmegaData& w) {
    SymCochain r;
    r.total = 5;
    for (int q = 3; q <= 5; ++q) r.slots[q] = form_part(gamma, q);
    Builder g2 = form_part(gamma, 2), g1 = form_part(gamma, 1), g0 = form_part(gamma, 0);
    r.slots[2] = [=](const Idx& i) { return g2(i) - (w.h(i) * w.lambda2({i[3]})).scaled(2); };
    r.slots[1] = [=](const Idx& i) {
        return g1(i) - (w.h(pick(i, {0, 1, 2, 3})) * w.lambda1(pick(i, {3, 4}))).scaled(2);
    };
    r.slots[0] = [=](const Idx& i) {
        auto H = [&](std::initializer_list<int> p) { return w.h(pick(i, p)); };
        Expr q = H({2, 3, 4, 5}) * H({0, 1, 2, 5}) + H({1, 2, 3, 4}) * H({0, 1, 4, 5}) + H({0, 1, 2, 3}) * H({0, 3, 4, 5});
        return g0(i) - (H({0, 1, 2, 3}) * w.lambda0(pick(i, {3, 4, 5}))).scaled(2) - w.m * q;
    };
    return r;
}

SymCochain chern_alpha(const ChernData& c) {
    SymCochain r;
    r.total = 1;
    r.slots[1] = c.dalpha;
    return r;
}

SymCochain chern_eta(const ChernData& c) {
    SymCochain r;
    r.total = 3;
    r.slots[3] = [e2 = c.eta2](const Idx& i) { return d(e2(i)); };
    return r;
}

SymCochain deligne_eta(const ChernData& c) {
    SymCochain r;
    r.total = 3;
    r.order = 3;
    r.slots[0] = c.h;
    r.slots[1] = c.eta0;
    r.slots[2] = c.eta1;
    r.slots[3] = c.eta2;
    return r;
}

SymCochain chern_beta(const SymCochain& beta, const ChernData& c) {
    Builder b2 = form_part(beta, 2), b3 = form_part(beta, 3);
    SymCochain r;
    r.total = 3;
    r.slots[2] = [=](const Idx& i) { return b2(i) + c.eta1(i) * c.dalpha({i[1]}); };
    r.slots[3] = [=](const Idx& i) { return b3(i) + c.eta2(i) * c.dalpha(i); };
    return r;
}

SymCochain chern_gamma(const SymCochain& beta, const SymCochain& gamma, const ChernData& c) {
    Builder b2 = form_part(beta, 2), b3 = form_part(beta, 3);
    SymCochain r;
    r.total = 5;
    Builder g5 = form_part(gamma, 5), g4 = form_part(gamma, 4), g3 = form_part(gamma, 3), g2 = form_part(gamma, 2);
    auto E0 = [c](const Idx& i, std::initializer_list<int> p) { return c.eta0(pick(i, p)); };
    auto E1 = [c](const Idx& i, std::initializer_list<int> p) { return c.eta1(pick(i, p)); };
    auto E2 = [c](const Idx& i, int k) { return c.eta2({i.at(static_cast<std::size_t>(k))}); };
    auto B2 = [b2](const Idx& i, std::initializer_list<int> p) { return b2(pick(i, p)); };
    auto B3 = [b3](const Idx& i, int k) { return b3({i.at(static_cast<std::size_t>(k))}); };
    auto dA = [c](const Idx& i, int k) { return c.dalpha({i.at(static_cast<std::size_t>(k))}); };
    r.slots[5] = [=](const Idx& i) {
        return g5(i) + (E2(i, 0) * B3(i, 0)).scaled(2) + E2(i, 0) * E2(i, 0) * dA(i, 0);
    };
    r.slots[4] = [=](const Idx& i) {
        return g4(i) + (E1(i, {0, 1}) * B3(i, 1) + E2(i, 0) * B2(i, {0, 1})).scaled(2) +
               (E1(i, {0, 1}) * E2(i, 1) + E2(i, 0) * E1(i, {0, 1})) * dA(i, 1);
    };
    r.slots[3] = [=](const Idx& i) {
        return g3(i) + (E0(i, {0, 1, 2}) * B3(i, 2) - E1(i, {0, 1}) * B2(i, {1, 2})).scaled(2) +
               (E0(i, {0, 1, 2}) * E2(i, 2) - E1(i, {0, 1}) * E1(i, {1, 2}) - E2(i, 0) * E0(i, {0, 1, 2})) * dA(i, 2);
    };
    r.slots[2] = [=](const Idx& i) {
        return g2(i) + (E0(i, {0, 1, 2}) * B2(i, {2, 3})).scaled(2) +
               (E0(i, {0, 1, 2}) * E1(i, {2, 3}) - E1(i, {0, 1}) * E0(i, {1, 2, 3}) + c.h(i) * E1(i, {0, 3})) * dA(i, 3);
    };
    return r;
}

}  // namespace cf::cat
