#include "support/properties.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "cf/cech/complex.hpp"
#include "cf/cech/double.hpp"
#include "cf/cech/matrix.hpp"
#include "cf/symcalc/rewrite.hpp"

namespace cf::props {

namespace {

using namespace cf::cech;

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Result run(const std::string& name, std::uint64_t seed, int n, const std::function<std::string(std::mt19937_64&)>& one) {
    Result r{name, 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
        std::string bad;
        try {
            bad = one(rng);
        } catch (const std::exception& e) {
            bad = std::string("exception: ") + e.what();
        }
        ++r.instances;
        if (!bad.empty()) {
            if (!r.failures) r.first_failure = "instance " + std::to_string(i) + ": " + bad;
            ++r.failures;
        }
    }
    return r;
}

const std::vector<ComplexPtr>& complexes() {
    static const std::vector<ComplexPtr> ks = {sphere3(), rp2(), simplex(3), circle()};
    return ks;
}

Cochain random_cochain(const ComplexPtr& k, int p, std::mt19937_64& rng) {
    Cochain c(k, p);
    for (std::size_t i = 0; i < c.size(); ++i) c.set(i, uniform(rng, -3, 3));
    return c;
}

const ComplexPtr& pick(std::mt19937_64& rng) {
    const auto& ks = complexes();
    return ks[uniform(rng, 0, static_cast<int>(ks.size()) - 1)];
}

Rat sign(int e) { return e % 2 ? Rat(-1) : Rat(1); }

/* Pairs (K, L) for the double complex, kept small. */
std::pair<ComplexPtr, ComplexPtr> pick_pair(std::mt19937_64& rng) {
    static const std::vector<std::pair<ComplexPtr, ComplexPtr>> ps = {
        {circle(), interval()}, {simplex(2), circle()}, {interval(), simplex(2)}, {circle(), circle()}};
    return ps[uniform(rng, 0, static_cast<int>(ps.size()) - 1)];
}

bool same(const DoubleCochain& a, const DoubleCochain& b) { return (a - b).is_zero(); }
bool same(const DeligneCochain& a, const DeligneCochain& b) { return (a + b * Rat(-1)).is_zero(); }

/* ---- symbolic expressions ---- */

struct SymEnv {
    Decls decls;
    RelationSet rels;
    SymEnv() {
        decls.add_generator({Name("f"), GenClass::U1, Name("af"), {}});
        decls.add_generator({Name("g"), GenClass::U1, Name("ag"), {}});
        decls.add_generator({Name("p"), GenClass::U, Name(), {}});
        decls.add_generator({Name("u"), GenClass::S1, Name("z"), {}});
        decls.add_scalar({Name("x"), 0, false, false});
        decls.add_scalar({Name("y"), 1, false, false});
        decls.add_scalar({Name("w"), 2, true, false});
        rels.set_env(&decls);
        rels.add_generator_rule(Name("g"), gen_expr(decls, Name("p"), Form::Inverse) * gen_expr(decls, Name("f")) *
                                               gen_expr(decls, Name("p")));
        rels.add_symbol_rule(Name("x"), scalar_expr(decls, Name("af")) + Expr::constant(2));
        rels.add_symbol_rule(Name("y"), d(scalar_expr(decls, Name("x"))));
    }
};

const SymEnv& sym_env() {
    static const SymEnv e;
    return e;
}

Expr random_word(std::mt19937_64& rng, const SymEnv& env) {
    static const char* gens[] = {"f", "g", "p"};
    Expr w = Expr::constant(1);
    const int len = uniform(rng, 1, 4);
    for (int i = 0; i < len; ++i)
        w = w * gen_expr(env.decls, Name(gens[uniform(rng, 0, 2)]), static_cast<Form>(uniform(rng, 0, 2)));
    return w;
}

Expr random_piece(std::mt19937_64& rng, const SymEnv& env) {
    switch (uniform(rng, 0, 5)) {
        case 0: return scalar_expr(env.decls, Name("x"));
        case 1: return d(scalar_expr(env.decls, Name(uniform(rng, 0, 1) ? "x" : "y")));
        case 2: return scalar_expr(env.decls, Name(uniform(rng, 0, 1) ? "y" : "w"));
        case 3: return gen_expr(env.decls, Name("u"));
        case 4: return random_word(rng, env);
        default: {
            Expr w = random_word(rng, env);
            for (const auto& [key, c] : w.terms())
                if (key.word.empty()) return w; /* cancelled to a scalar */
            return tr(w);
        }
    }
}

Expr random_expr(std::mt19937_64& rng, const SymEnv& env) {
    Expr e;
    const int terms = uniform(rng, 1, 4);
    for (int t = 0; t < terms; ++t) {
        Expr m = Expr::constant(Rational(uniform(rng, -5, 5), uniform(rng, 1, 3)));
        const int k = uniform(rng, 1, 3);
        for (int i = 0; i < k; ++i) m = m * random_piece(rng, env);
        e += m;
    }
    return e;
}

}  // namespace

Result delta_squared(std::uint64_t seed, int n) {
    return run("delta^2 = 0", seed, n, [](std::mt19937_64& rng) -> std::string {
        const ComplexPtr& k = pick(rng);
        const int p = uniform(rng, 0, k->dim() - 1);
        Cochain c = random_cochain(k, p, rng);
        Cochain dd = coboundary(coboundary(c));
        return dd.is_zero() ? "" : k->name() + " degree " + std::to_string(p);
    });
}

Result cup_leibniz(std::uint64_t seed, int n) {
    return run("cup Leibniz", seed, n, [](std::mt19937_64& rng) -> std::string {
        const ComplexPtr& k = pick(rng);
        const int p = uniform(rng, 0, k->dim() - 1);
        const int q = uniform(rng, 0, k->dim() - 1 - p);
        Cochain a = random_cochain(k, p, rng), b = random_cochain(k, q, rng);
        Cochain lhs = coboundary(cup(a, b));
        Cochain rhs = cup(coboundary(a), b) + cup(a, coboundary(b)) * sign(p);
        return lhs == rhs ? "" : k->name() + " p=" + std::to_string(p) + " q=" + std::to_string(q);
    });
}

Result cup_associativity(std::uint64_t seed, int n) {
    return run("cup associativity", seed, n, [](std::mt19937_64& rng) -> std::string {
        const ComplexPtr& k = pick(rng);
        const int p = uniform(rng, 0, k->dim());
        const int q = uniform(rng, 0, k->dim() - p);
        const int r = uniform(rng, 0, k->dim() - p - q);
        Cochain a = random_cochain(k, p, rng), b = random_cochain(k, q, rng), c = random_cochain(k, r, rng);
        return cup(cup(a, b), c) == cup(a, cup(b, c)) ? "" : k->name();
    });
}

Result total_d_squared(std::uint64_t seed, int n) {
    return run("D^2 = 0 (Cech-de Rham)", seed, n, [](std::mt19937_64& rng) -> std::string {
        auto [k, l] = pick_pair(rng);
        const int t = uniform(rng, 0, k->dim() + l->dim() - 2);
        DoubleCochain c = DoubleCochain::random(k, l, t, rng);
        return total_differential(total_differential(c)).is_zero() ? "" : "total " + std::to_string(t);
    });
}

Result wedge_leibniz(std::uint64_t seed, int n) {
    return run("wedge Leibniz", seed, n, [](std::mt19937_64& rng) -> std::string {
        auto [k, l] = pick_pair(rng);
        const int top = k->dim() + l->dim();
        const int m = uniform(rng, 0, top - 1);
        const int q = uniform(rng, 0, top - 1 - m);
        DoubleCochain a = DoubleCochain::random(k, l, m, rng), b = DoubleCochain::random(k, l, q, rng);
        DoubleCochain lhs = total_differential(dc_wedge(a, b));
        DoubleCochain rhs = dc_wedge(total_differential(a), b) + dc_wedge(a, total_differential(b)) * sign(m);
        return same(lhs, rhs) ? "" : "m=" + std::to_string(m) + " n=" + std::to_string(q);
    });
}

Result wedge_associativity(std::uint64_t seed, int n) {
    return run("wedge associativity", seed, n, [](std::mt19937_64& rng) -> std::string {
        auto [k, l] = pick_pair(rng);
        const int top = k->dim() + l->dim();
        const int x = uniform(rng, 0, top), y = uniform(rng, 0, top - x), z = uniform(rng, 0, top - x - y);
        DoubleCochain a = DoubleCochain::random(k, l, x, rng), b = DoubleCochain::random(k, l, y, rng),
                      c = DoubleCochain::random(k, l, z, rng);
        return same(dc_wedge(dc_wedge(a, b), c), dc_wedge(a, dc_wedge(b, c))) ? "" : "degrees";
    });
}

Result deligne_d_squared(std::uint64_t seed, int n) {
    return run("D^2 = 0 (Deligne)", seed, n, [](std::mt19937_64& rng) -> std::string {
        auto [k, l] = pick_pair(rng);
        const int w = uniform(rng, 1, 3), m = uniform(rng, 0, 3);
        DeligneCochain c = DeligneCochain::random(k, l, w, m, rng);
        return deligne_differential(deligne_differential(c)).is_zero()
                   ? ""
                   : "weight " + std::to_string(w) + " degree " + std::to_string(m);
    });
}

Result deligne_leibniz(std::uint64_t seed, int n) {
    return run("Deligne cup Leibniz", seed, n, [](std::mt19937_64& rng) -> std::string {
        auto [k, l] = pick_pair(rng);
        const int wa = uniform(rng, 0, 2), wb = uniform(rng, 0, 2);
        const int ma = uniform(rng, 0, 2), mb = uniform(rng, 0, 2);
        DeligneCochain a = DeligneCochain::random(k, l, wa, ma, rng), b = DeligneCochain::random(k, l, wb, mb, rng);
        DeligneCochain lhs = deligne_differential(deligne_cup(a, b));
        DeligneCochain rhs =
            deligne_cup(deligne_differential(a), b) + deligne_cup(a, deligne_differential(b)) * sign(ma);
        std::ostringstream os;
        if (!same(lhs, rhs)) os << "weights " << wa << "," << wb << " degrees " << ma << "," << mb;
        return os.str();
    });
}

Result snf_identity(std::uint64_t seed, int n, int max_dim) {
    return run("SNF U A V = D", seed, n, [max_dim](std::mt19937_64& rng) -> std::string {
        const int r = uniform(rng, 1, max_dim), c = uniform(rng, 1, max_dim);
        IntMatrix a(r, c);
        if (uniform(rng, 0, 2) == 0) {
            /* low rank: a product through a thin middle */
            const int k = uniform(rng, 1, std::min(r, c));
            IntMatrix x(r, k), y(k, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < k; ++j) x(i, j) = uniform(rng, -4, 4);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < c; ++j) y(i, j) = uniform(rng, -4, 4);
            a = x * y;
        } else {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) a(i, j) = uniform(rng, -9, 9);
        }
        SNFResult s = smith(a);
        if (!(s.U * a * s.V == s.D)) return "U A V != D";
        if (!(s.U * s.Uinv == IntMatrix::identity(r)) || !(s.V * s.Vinv == IntMatrix::identity(c)))
            return "U or V not unimodular";
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                if (i != j && s.D(i, j) != 0) return "D not diagonal";
                if (i == j && s.D(i, j) < 0) return "negative diagonal";
            }
        for (std::size_t i = 0; i < s.diag.size(); ++i) {
            if (s.D(i, i) != s.diag[i] || s.diag[i] == 0) return "diag mismatch";
            if (i + 1 < s.diag.size() && s.diag[i + 1] % s.diag[i] != 0) return "divisibility chain broken";
        }
        if (s.rank() != rank(a)) return "rank differs from the Bareiss rank";
        return "";
    });
}

Result symcalc_d_squared(std::uint64_t seed, int n) {
    return run("symcalc d^2 = 0", seed, n, [](std::mt19937_64& rng) -> std::string {
        Expr e = random_expr(rng, sym_env());
        Expr dd = d(d(e));
        return dd.is_zero() ? "" : e.str() + "  ->  " + dd.str();
    });
}

Result symcalc_normalize_idempotent(std::uint64_t seed, int n) {
    return run("symcalc normalize idempotent", seed, n, [](std::mt19937_64& rng) -> std::string {
        const SymEnv& env = sym_env();
        Expr e = random_expr(rng, env);
        Expr once = normalize(e, env.rels), twice = normalize(once, env.rels);
        return once == twice ? "" : e.str();
    });
}

std::vector<Result> all(std::uint64_t seed, int n) {
    return {delta_squared(seed, n),      cup_leibniz(seed, n),        cup_associativity(seed, n),
            total_d_squared(seed, n),    wedge_leibniz(seed, n),      wedge_associativity(seed, n),
            deligne_d_squared(seed, n),  deligne_leibniz(seed, n),    snf_identity(seed, n),
            symcalc_d_squared(seed, n),  symcalc_normalize_idempotent(seed, n)};
}

}  // namespace cf::props

namespace cf::props {

std::size_t rational_rank(std::vector<std::vector<cech::Rat>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const cech::Rat piv = a[r][c];
        for (auto& x : a[r]) x /= piv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const cech::Rat f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rational_quotient_dim(const cech::FGAbelianGroup& h, const cech::IntMatrix& images) {
    std::vector<std::vector<cech::Rat>> rows;
    for (std::size_t i = h.torsion.size(); i < images.rows(); ++i) {
        std::vector<cech::Rat> row;
        for (std::size_t j = 0; j < images.cols(); ++j) row.push_back(cech::Rat(images(i, j)));
        rows.push_back(row);
    }
    return static_cast<std::size_t>(h.rank) - rational_rank(rows);
}

}  // namespace cf::props
