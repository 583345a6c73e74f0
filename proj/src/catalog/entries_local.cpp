#include "cf/catalog/catalog.hpp"
#include "cf/catalog/forms.hpp"

namespace cf::cat {

namespace {

/* f, g, h, k in U1; p in U; u in U(1) with u = exp(tau z). */
std::shared_ptr<Context> group_context() {
    auto c = std::make_shared<Context>();
    for (const char* n : {"f", "g", "h", "k"}) c->op_free(n, GenClass::U1);
    c->op_free("p", GenClass::U);
    c->scalar_free("z", {-1, 0, false, false});
    c->op_free("u", GenClass::S1, "z");
    return c;
}

struct Gens {
    Expr f, g, h, k, p, u, du;
};

Gens gens(const Context& c) {
    Gens x{c.op("f", {}), c.op("g", {}), c.op("h", {}), c.op("k", {}), c.op("p", {}), c.op("u", {}), {}};
    x.du = group_inverse(x.u) * d(x.u);
    return x;
}

Expr mc(const Expr& f) { return tr(group_inverse(f) * d(f)); }

void add(Registry& r, std::string id, std::string loc, std::string quote, int arity,
         std::function<void(Task&, const Gens&)> body) {
    r.push_back(Entry{std::move(id), std::move(loc), std::move(quote), arity, kDefaultBudget, [body] {
                          Task t;
                          t.ctx = group_context();
                          body(t, gens(*t.ctx));
                          return t;
                      }});
}

}  // namespace

void register_local_entries(Registry& r) {
    add(r, "L-basic.dC3", "basic formulae for C3, B2", "dC_3(f) = 0", 0,
        [](Task& t, const Gens& x) { t.zero("dC3", d(C3(x.f))); });
    add(r, "L-basic.C3-inverse", "basic formulae for C3, B2", "C_3(f^{-1}) = - C_3(f)", 0,
        [](Task& t, const Gens& x) { t.eq("C3inv", C3(group_inverse(x.f)), -C3(x.f)); });
    add(r, "L-basic.deltaC3", "basic formulae for C3, B2", "(\\delta C_3)(f, g) = 3 d B_2(f, g)", 0,
        [](Task& t, const Gens& x) {
            t.eq("deltaC3", C3(x.g) - C3(x.f * x.g) + C3(x.f), d(B2(x.f, x.g)).scaled(3));
        });
    add(r, "L-basic.deltaB2", "basic formulae for C3, B2", "(\\delta B_2)(f, g, h) = 0", 0,
        [](Task& t, const Gens& x) {
            t.zero("deltaB2", B2(x.g, x.h) - B2(x.f * x.g, x.h) + B2(x.f, x.g * x.h) - B2(x.f, x.g));
        });
    add(r, "L-basic.B2-shift-left", "basic formulae for C3, B2",
        "B_2(uf, g) = B_2(f, g) + (u^{-1}du) \\wedge \\tr[g^{-1}dg]", 0,
        [](Task& t, const Gens& x) { t.eq("B2(uf,g)", B2(x.u * x.f, x.g), B2(x.f, x.g) + x.du * mc(x.g)); });
    add(r, "L-basic.B2-shift-right", "basic formulae for C3, B2",
        "B_2(f, ug) = B_2(f, g) - (u^{-1}du) \\wedge \\tr[f^{-1}df]", 0,
        [](Task& t, const Gens& x) { t.eq("B2(f,ug)", B2(x.f, x.u * x.g), B2(x.f, x.g) - x.du * mc(x.f)); });
    add(r, "L-conj.C3", "conjugation formula for C3",
        "C_3(\\phi^{-1} g \\phi) - C_3(g) = 3 d \\{ B_2(\\phi^{-1}g\\phi, \\phi^{-1}) - B_2(\\phi^{-1}, g) \\}", 0,
        [](Task& t, const Gens& x) {
            Expr pi = group_inverse(x.p), c = pi * x.g * x.p;
            t.eq("conjC3", C3(c) - C3(x.g), d(B2(c, pi) - B2(pi, x.g)).scaled(3));
        });

    add(r, "L-key.dC5", "key formulae for C5, B4, A", "dC_5(f) = 0", 0,
        [](Task& t, const Gens& x) { t.zero("dC5", d(C5(x.f))); });
    add(r, "L-key.C5-inverse", "key formulae for C5, B4, A", "C_5(f^{-1}) = - C_5(f)", 0,
        [](Task& t, const Gens& x) { t.eq("C5inv", C5(group_inverse(x.f)), -C5(x.f)); });
    add(r, "L-key.deltaC5", "key formulae for C5, B4, A", "(\\delta C_5)(f, g) = 5 d B_4(f, g)", 0,
        [](Task& t, const Gens& x) {
            t.eq("deltaC5", C5(x.g) - C5(x.f * x.g) + C5(x.f), d(B4(x.f, x.g)).scaled(5));
        });
    add(r, "L-key.deltaB4", "key formulae for C5, B4, A", "(\\delta B_4)(f, g, h) = dA(f, g, h)", 0,
        [](Task& t, const Gens& x) {
            t.eq("deltaB4", B4(x.g, x.h) - B4(x.f * x.g, x.h) + B4(x.f, x.g * x.h) - B4(x.f, x.g), d(A(x.f, x.g, x.h)));
        });
    add(r, "L-key.deltaA", "key formulae for C5, B4, A", "(\\delta A)(f, g, h, k) = 0", 0,
        [](Task& t, const Gens& x) {
            t.zero("deltaA", A(x.g, x.h, x.k) - A(x.f * x.g, x.h, x.k) + A(x.f, x.g * x.h, x.k) -
                                 A(x.f, x.g, x.h * x.k) + A(x.f, x.g, x.h));
        });
    add(r, "L-key.B4-shift-left", "key formulae for C5, B4, A",
        "B_4(uf, g) = B_4(f, g) + (u^{-1}du) \\wedge \\{ C_3(g) - dB_2(f, g) \\}", 0,
        [](Task& t, const Gens& x) {
            t.eq("B4(uf,g)", B4(x.u * x.f, x.g), B4(x.f, x.g) + x.du * (C3(x.g) - d(B2(x.f, x.g))));
        });
    add(r, "L-key.B4-shift-right", "key formulae for C5, B4, A",
        "B_4(f, ug) = B_4(f, g) - (u^{-1}du) \\wedge \\{ C_3(f) - dB_2(f, g) \\}", 0,
        [](Task& t, const Gens& x) {
            t.eq("B4(f,ug)", B4(x.f, x.u * x.g), B4(x.f, x.g) - x.du * (C3(x.f) - d(B2(x.f, x.g))));
        });
    add(r, "L-key.A-shift-first", "key formulae for C5, B4, A",
        "A(uf, g, h) = A(f, g, h) + 2 (u^{-1}du) \\cdot B_2(g, h)", 0, [](Task& t, const Gens& x) {
            t.eq("A(uf,g,h)", A(x.u * x.f, x.g, x.h), A(x.f, x.g, x.h) + (x.du * B2(x.g, x.h)).scaled(2));
        });
    add(r, "L-key.A-shift-middle", "key formulae for C5, B4, A",
        "A(f, ug, h) = A(f, g, h) - 2 (u^{-1}du) \\cdot B_2(fg, h) + 2 (u^{-1}du) \\cdot B_2(g, h) "
        "= A(f, g, h) - 2 (u^{-1}du) \\cdot B_2(f, gh) + 2 (u^{-1}du) \\cdot B_2(f, g)",
        0, [](Task& t, const Gens& x) {
            Expr lhs = A(x.f, x.u * x.g, x.h);
            t.eq("first form", lhs,
                 A(x.f, x.g, x.h) - (x.du * B2(x.f * x.g, x.h)).scaled(2) + (x.du * B2(x.g, x.h)).scaled(2));
            t.eq("second form", lhs,
                 A(x.f, x.g, x.h) - (x.du * B2(x.f, x.g * x.h)).scaled(2) + (x.du * B2(x.f, x.g)).scaled(2));
        });
    add(r, "L-key.A-shift-last", "key formulae for C5, B4, A",
        "A(f, g, uh) = A(f, g, h) + 2 (u^{-1}du) \\cdot B_2(f, g)", 0, [](Task& t, const Gens& x) {
            t.eq("A(f,g,uh)", A(x.f, x.g, x.u * x.h), A(x.f, x.g, x.h) + (x.du * B2(x.f, x.g)).scaled(2));
        });
    add(r, "L-conj.C5", "conjugation formula for C5",
        "C_5(\\phi^{-1} g \\phi) - C_5(g) = 5 d \\{ B_4(\\phi^{-1}g\\phi, \\phi^{-1}) - B_4(\\phi^{-1}, g) \\}", 0,
        [](Task& t, const Gens& x) {
            Expr pi = group_inverse(x.p), c = pi * x.g * x.p;
            t.eq("conjC5", C5(c) - C5(x.g), d(B4(c, pi) - B4(pi, x.g)).scaled(5));
        });
}

}  // namespace cf::cat
