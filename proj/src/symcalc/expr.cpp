#include "cf/symcalc/expr.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace cf {

namespace {

std::mutex& intern_mutex() {
    static std::mutex m;
    return m;
}

std::unordered_set<std::string>& intern_table() {
    static auto* t = new std::unordered_set<std::string>();
    return *t;
}

bool inverse_pair(const Factor& a, const Factor& b) {
    return a.gen == b.gen && ((a.form == Form::Plain && b.form == Form::Inverse) ||
                              (a.form == Form::Inverse && b.form == Form::Plain));
}

int power_parity(const Power& p) { return (p.atom.degree * p.exp) & 1; }

Expr mono_expr(Monomial::const_iterator b, Monomial::const_iterator e) {
    TermKey k;
    k.mono.assign(b, e);
    return Expr::term(std::move(k), Rational(1));
}

}  // namespace

Name::Name(std::string_view s) {
    std::lock_guard<std::mutex> lock(intern_mutex());
    p_ = &*intern_table().emplace(s).first;
}

int word_degree(const Word& w) {
    int d = 0;
    for (const auto& f : w) d += f.degree();
    return d;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    std::size_t j = 0;
    while (!out.empty() && j < b.size() && inverse_pair(out.back(), b[j])) {
        out.pop_back();
        ++j;
    }
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

std::pair<int, Word> canonical_trace(const Word& in) {
    Word w = in;
    while (w.size() >= 2 && inverse_pair(w.front(), w.back())) {
        w.pop_back();
        w.erase(w.begin());
    }
    const std::size_t n = w.size();
    if (n == 0) return {1, w};
    std::vector<int> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + w[i].degree();
    const int total = prefix[n];

    Word best;
    int best_sign = 0;
    bool vanish = false;
    Word rot(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) rot[i] = w[(r + i) % n];
        int a = prefix[r];
        int sign = ((a * (total - a)) & 1) ? -1 : 1;
        if (best_sign == 0 || rot < best) {
            best = rot;
            best_sign = sign;
        } else if (rot == best && sign != best_sign) {
            vanish = true;
        }
    }
    if (vanish) return {0, best};
    return {best_sign, best};
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& p : m) d += p.atom.degree * p.exp;
    return d;
}

int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::vector<int> suffix(a.size() + 1, 0);
    for (std::size_t i = a.size(); i-- > 0;) suffix[i] = suffix[i + 1] + power_parity(a[i]);
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].atom < b[j].atom)) {
            out.push_back(a[i++]);
            continue;
        }
        if (i == a.size() || b[j].atom < a[i].atom) {
            if (power_parity(b[j]) && (suffix[i] & 1)) sign = -sign;
            out.push_back(b[j++]);
            continue;
        }
        /* same atom */
        if (power_parity(b[j]) && (suffix[i + 1] & 1)) sign = -sign;
        if (a[i].atom.degree & 1) return 0;
        Power p = a[i];
        p.exp += b[j].exp;
        if (p.exp != 0) out.push_back(std::move(p));
        ++i;
        ++j;
    }
    return sign;
}

Expr Expr::constant(Rational c, int tau) {
    TermKey k;
    k.tau = tau;
    return term(std::move(k), c);
}

Expr Expr::term(TermKey key, Rational c) {
    Expr e;
    if (!c.is_zero()) e.terms_.emplace(std::move(key), c);
    return e;
}

Expr Expr::atom(const ScalarAtom& a, int exp) {
    if (exp == 0) return constant(1);
    if ((a.degree & 1) && exp > 1) return {};
    TermKey k;
    k.mono.push_back(Power{a, exp});
    return term(std::move(k), Rational(1));
}

Expr Expr::symbol(Name n, int degree, bool closed, bool integral) {
    ScalarAtom a;
    a.kind = AtomKind::Symbol;
    a.name = n;
    a.degree = degree;
    a.closed = closed;
    a.integral = integral;
    return atom(a);
}

Expr Expr::dsymbol(Name n, int base_degree) {
    ScalarAtom a;
    a.kind = AtomKind::DSymbol;
    a.name = n;
    a.degree = base_degree + 1;
    return atom(a);
}

Expr Expr::unit(Name log, int exp) {
    ScalarAtom a;
    a.kind = AtomKind::Unit;
    a.name = log;
    return atom(a, exp);
}

Expr Expr::factor(Name gen, Form form) {
    TermKey k;
    k.word.push_back(Factor{gen, form});
    return term(std::move(k), Rational(1));
}

Expr Expr::word(const Word& w) {
    TermKey k;
    k.word = concat({}, w);
    return term(std::move(k), Rational(1));
}

void Expr::add_term(const TermKey& k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Expr Expr::operator-() const {
    Expr e = *this;
    for (auto& [k, c] : e.terms_) c = -c;
    return e;
}

Expr& Expr::operator+=(const Expr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Expr& Expr::operator-=(const Expr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
    Expr out;
    Monomial m;
    for (const auto& [ka, ca] : a.terms_) {
        const int wdeg = word_degree(ka.word) & 1;
        for (const auto& [kb, cb] : b.terms_) {
            int sign = multiply_monomials(ka.mono, kb.mono, m);
            if (sign == 0) continue;
            if (wdeg && (monomial_degree(kb.mono) & 1)) sign = -sign;
            TermKey k;
            k.mono = m;
            k.word = concat(ka.word, kb.word);
            k.tau = ka.tau + kb.tau;
            Rational c = ca * cb;
            out.add_term(k, sign < 0 ? -c : c);
        }
    }
    return out;
}

Expr operator*(const Rational& c, const Expr& e) { return e.scaled(c); }

Expr Expr::scaled(const Rational& c, int tau) const {
    Expr out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) {
        TermKey kk = k;
        kk.tau += tau;
        out.terms_.emplace(std::move(kk), v * c);
    }
    return out;
}

bool Expr::is_group_element() const {
    if (terms_.size() != 1) return false;
    const auto& k = terms_.begin()->first;
    for (const auto& p : k.mono)
        if (p.atom.kind != AtomKind::Unit) return false;
    return word_degree(k.word) == 0;
}

int Expr::max_degree() const {
    int m = -1;
    for (const auto& [k, c] : terms_) m = std::max(m, k.degree());
    return m;
}

bool Expr::homogeneous(int& deg) const {
    deg = -1;
    for (const auto& [k, c] : terms_) {
        if (deg < 0) deg = k.degree();
        else if (deg != k.degree()) return false;
    }
    return true;
}

static Expr d_word(const Word& w) {
    Expr out;
    int before = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const Factor& f = w[k];
        if (f.form != Form::Diff) {
            Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            Word right(w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
            Word mid;
            Rational c(1);
            if (f.form == Form::Plain) {
                mid = {Factor{f.gen, Form::Diff}};
            } else {
                mid = {Factor{f.gen, Form::Inverse}, Factor{f.gen, Form::Diff}, Factor{f.gen, Form::Inverse}};
                c = Rational(-1);
            }
            if (before & 1) c = -c;
            TermKey key;
            key.word = concat(concat(left, mid), right);
            out.add_term(key, c);
        }
        before += f.degree();
    }
    return out;
}

static Expr d_atom_power(const Power& p) {
    const ScalarAtom& a = p.atom;
    switch (a.kind) {
    case AtomKind::Unit:
        return (Expr::atom(a, p.exp) * Expr::dsymbol(a.name)).scaled(Rational(p.exp), 1);
    case AtomKind::Symbol:
        if (a.closed) return {};
        return (Expr::atom(a, p.exp - 1) * Expr::dsymbol(a.name, a.degree)).scaled(Rational(p.exp));
    case AtomKind::DSymbol:
        return {};
    case AtomKind::Trace: {
        Expr dt = tr(d_word(a.word));
        return (Expr::atom(a, p.exp - 1) * dt).scaled(Rational(p.exp));
    }
    }
    return {};
}

Expr d(const Expr& e) {
    Expr out;
    for (const auto& [k, c] : e.terms()) {
        Expr wexpr = Expr::word(k.word);
        int before = 0;
        for (std::size_t i = 0; i < k.mono.size(); ++i) {
            Expr piece = d_atom_power(k.mono[i]);
            if (!piece.is_zero()) {
                Expr t = mono_expr(k.mono.begin(), k.mono.begin() + static_cast<std::ptrdiff_t>(i)) * piece *
                         mono_expr(k.mono.begin() + static_cast<std::ptrdiff_t>(i) + 1, k.mono.end()) * wexpr;
                Rational s = (before & 1) ? -c : c;
                out += t.scaled(s, k.tau);
            }
            before += power_parity(k.mono[i]);
        }
        if (!k.word.empty()) {
            Expr dw = d_word(k.word);
            if (!dw.is_zero()) {
                Rational s = (before & 1) ? -c : c;
                out += (mono_expr(k.mono.begin(), k.mono.end()) * dw).scaled(s, k.tau);
            }
        }
    }
    return out;
}

Expr tr(const Expr& e) {
    Expr out;
    Monomial m;
    for (const auto& [k, c] : e.terms()) {
        if (k.word.empty()) throw std::invalid_argument("trace of a scalar expression");
        auto [sign, w] = canonical_trace(k.word);
        if (sign == 0) continue;
        if (w.empty()) throw std::invalid_argument("trace of a word that cancels to the identity");
        ScalarAtom a;
        a.kind = AtomKind::Trace;
        a.degree = word_degree(w);
        a.word = std::move(w);
        int s2 = multiply_monomials(k.mono, Monomial{Power{a, 1}}, m);
        if (s2 == 0) continue;
        TermKey key;
        key.mono = m;
        key.tau = k.tau;
        out.add_term(key, (sign * s2 < 0) ? -c : c);
    }
    return out;
}

Expr group_inverse(const Expr& g) {
    if (!g.is_group_element()) throw std::invalid_argument("inverse of a non-group element: " + g.str());
    const auto& [k, c] = *g.terms().begin();
    TermKey key;
    for (const auto& p : k.mono) key.mono.push_back(Power{p.atom, -p.exp});
    for (auto it = k.word.rbegin(); it != k.word.rend(); ++it)
        key.word.push_back(Factor{it->gen, it->form == Form::Plain ? Form::Inverse : Form::Plain});
    key.tau = -k.tau;
    return Expr::term(key, Rational(1) / c);
}

Expr pow(const Expr& e, int n) {
    if (n < 0) return pow(group_inverse(e), -n);
    Expr r = Expr::constant(1);
    for (int i = 0; i < n; ++i) r = r * e;
    return r;
}

std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        switch (w[i].form) {
        case Form::Plain: s += w[i].gen.str(); break;
        case Form::Inverse: s += w[i].gen.str() + "^-1"; break;
        case Form::Diff: s += "d " + w[i].gen.str(); break;
        }
    }
    return s;
}

std::string atom_str(const ScalarAtom& a) {
    switch (a.kind) {
    case AtomKind::Unit: return "exp(" + a.name.str() + ")";
    case AtomKind::Symbol: return a.name.str();
    case AtomKind::DSymbol: return "d " + a.name.str();
    case AtomKind::Trace: return "tr[" + word_str(a.word) + "]";
    }
    return {};
}

std::string term_str(const TermKey& k, const Rational& c, bool leading) {
    std::string s;
    Rational mag = c;
    if (c < Rational(0)) {
        s = leading ? "-" : " - ";
        mag = -c;
    } else if (!leading) {
        s = " + ";
    }
    std::vector<std::string> parts;
    bool bare = k.tau == 0 && k.mono.empty() && k.word.empty();
    if (!(mag == Rational(1)) || bare) parts.push_back(mag.str());
    if (k.tau == 1) parts.push_back("tau");
    else if (k.tau != 0) parts.push_back("tau^" + std::to_string(k.tau));
    for (const auto& p : k.mono) {
        std::string a = atom_str(p.atom);
        if (p.exp != 1) {
            if (p.atom.kind == AtomKind::DSymbol) a = "(" + a + ")";
            a += "^" + std::to_string(p.exp);
        }
        parts.push_back(a);
    }
    if (!k.word.empty()) parts.push_back(word_str(k.word));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "*";
        s += parts[i];
    }
    return s;
}

std::string Expr::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        s += term_str(k, c, first);
        first = false;
    }
    return s;
}

}  // namespace cf
