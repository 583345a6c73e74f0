#include "cf/symcalc/parser.hpp"

#include <cctype>
#include <set>

namespace cf {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1, col = 1;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto adv = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') adv(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            adv(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
                ++j;
            t.kind = Tok::Ident;
            t.text = s.substr(i, j - i);
            adv(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            t.kind = Tok::Int;
            t.text = s.substr(i, j - i);
            adv(j - i);
        } else if (c == '=' && i + 1 < s.size() && s[i + 1] == '=') {
            t.kind = Tok::Punct;
            t.text = "==";
            adv(2);
        } else if (std::string("();:,=+-*/^[]").find(c) != std::string::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            adv(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(t);
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

const std::set<std::string>& reserved() {
    static const std::set<std::string> r{"d", "tr", "tau", "exp", "gen", "scalar", "rel", "assert"};
    return r;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const SymbolEnv* env) : toks_(std::move(toks)), env_(env) {}

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Tok::End; }
    bool is(const char* p) const {
        return (peek().kind == Tok::Punct || peek().kind == Tok::Ident) && peek().text == p;
    }
    Token take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }
    void expect(const char* p) {
        if (!is(p)) fail(std::string("expected '") + p + "'" + (at_end() ? " at end of input" : ", found '" + peek().text + "'"));
        take();
    }
    std::string ident() {
        if (peek().kind != Tok::Ident) fail("expected identifier");
        if (reserved().count(peek().text)) fail("'" + peek().text + "' is reserved");
        return take().text;
    }
    long long integer() {
        if (peek().kind != Tok::Int) fail("expected integer");
        try {
            return std::stoll(take().text);
        } catch (const std::out_of_range&) {
            fail("integer literal out of range");
        }
    }
    void set_env(const SymbolEnv* env) { env_ = env; }

    Expr expr() {
        Expr e = term();
        while (is("+") || is("-")) {
            bool minus = take().text == "-";
            Expr t = term();
            if (minus) e -= t;
            else e += t;
        }
        return e;
    }

private:
    Expr term() {
        Expr e = unary();
        while (is("*")) {
            take();
            e = e * unary();
        }
        return e;
    }

    Expr unary() {
        if (is("-")) {
            take();
            return -unary();
        }
        if (is("d")) {
            take();
            return d(unary());
        }
        return postfix();
    }

    Expr postfix() {
        const Token at = peek();
        Expr e = primary();
        if (is("^")) {
            take();
            bool neg = false;
            if (is("-")) {
                take();
                neg = true;
            }
            long long n = integer();
            if (n > 64) throw ParseError("exponent too large", at.line, at.col);
            if (neg && !e.is_group_element())
                throw ParseError("class constraint: negative power of a non-invertible expression", at.line, at.col);
            e = pow(e, static_cast<int>(neg ? -n : n));
        }
        return e;
    }

    Expr primary() {
        const Token at = peek();
        if (at.kind == Tok::Int) {
            long long n = integer();
            if (is("/")) {
                take();
                long long m = integer();
                if (m == 0) throw ParseError("zero denominator", at.line, at.col);
                return Expr::constant(Rational(n, m));
            }
            return Expr::constant(Rational(n));
        }
        if (is("(")) {
            take();
            Expr e = expr();
            expect(")");
            return e;
        }
        if (is("tau")) {
            take();
            if (is("^")) {
                take();
                bool neg = false;
                if (is("-")) {
                    take();
                    neg = true;
                }
                long long n = integer();
                return Expr::constant(1, static_cast<int>(neg ? -n : n));
            }
            return Expr::constant(1, 1);
        }
        if (is("tr")) {
            take();
            expect("[");
            Expr inner = expr();
            expect("]");
            for (const auto& [k, c] : inner.terms())
                if (k.word.empty()) throw ParseError("class constraint: trace of a scalar term", at.line, at.col);
            return tr(inner);
        }
        if (is("exp")) {
            take();
            expect("(");
            Token nt = peek();
            std::string n = ident();
            expect(")");
            const ScalarDecl* s = env_->scalar(Name(n));
            if (!s) throw ParseError("undeclared name '" + n + "'", nt.line, nt.col);
            if (s->degree != 0 || s->closed) throw ParseError("exp of '" + n + "' needs a real degree-0 scalar", nt.line, nt.col);
            return Expr::unit(Name(n));
        }
        if (at.kind == Tok::Ident) {
            std::string n = ident();
            Name name(n);
            if (env_->generator(name)) return gen_expr(*env_, name);
            if (env_->scalar(name)) return scalar_expr(*env_, name);
            throw ParseError("undeclared name '" + n + "'", at.line, at.col);
        }
        fail(at_end() ? "unexpected end of input" : "unexpected '" + at.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const SymbolEnv* env_;
};

GenClass parse_class(const std::string& s, const Token& at) {
    if (s == "U1") return GenClass::U1;
    if (s == "U") return GenClass::U;
    if (s == "S1") return GenClass::S1;
    throw ParseError("unknown generator class '" + s + "'", at.line, at.col);
}

}  // namespace

Expr parse_expr(const std::string& text, const SymbolEnv& env) {
    Parser p(lex(text), &env);
    Expr e = p.expr();
    if (!p.at_end()) p.fail("trailing input '" + p.peek().text + "'");
    return e;
}

Script parse_script(const std::string& text) {
    Script s;
    Parser p(lex(text), &s.decls);
    while (!p.at_end()) {
        const Token at = p.peek();
        if (p.is("gen")) {
            p.take();
            std::vector<std::string> names{p.ident()};
            while (p.is(",")) {
                p.take();
                names.push_back(p.ident());
            }
            p.expect(":");
            Token ct = p.peek();
            GenClass cls = parse_class(p.ident(), ct);
            Name log;
            if (p.is("det") || p.is("log")) {
                Token kt = p.take();
                if ((kt.text == "det") != (cls == GenClass::U1))
                    throw ParseError("'" + kt.text + "' does not apply to class " + class_name(cls), kt.line, kt.col);
                if (names.size() != 1) throw ParseError("a log symbol needs a single generator", kt.line, kt.col);
                log = Name(p.ident());
            }
            p.expect(";");
            try {
                for (const auto& n : names) s.decls.add_generator(GeneratorDecl{Name(n), cls, log, {}});
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), at.line, at.col);
            }
        } else if (p.is("scalar")) {
            p.take();
            std::vector<std::string> names{p.ident()};
            while (p.is(",")) {
                p.take();
                names.push_back(p.ident());
            }
            ScalarDecl proto;
            if (p.is(":")) {
                p.take();
                if (p.is("int")) {
                    p.take();
                    proto.closed = proto.integral = true;
                } else if (p.is("real")) {
                    p.take();
                } else {
                    if (p.is("closed")) {
                        p.take();
                        proto.closed = true;
                    }
                    if (p.is("form")) {
                        p.take();
                        proto.degree = static_cast<int>(p.integer());
                    } else if (!proto.closed) {
                        p.fail("expected 'int', 'real', 'closed' or 'form'");
                    }
                }
            }
            p.expect(";");
            try {
                for (const auto& n : names) {
                    ScalarDecl d = proto;
                    d.name = Name(n);
                    s.decls.add_scalar(d);
                }
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), at.line, at.col);
            }
        } else if (p.is("rel")) {
            p.take();
            bool dform = false;
            if (p.is("d")) {
                p.take();
                dform = true;
            }
            Token nt = p.peek();
            Name n(p.ident());
            p.expect("=");
            Expr rhs = p.expr();
            p.expect(";");
            try {
                if (dform) {
                    if (!s.decls.scalar(n)) throw std::invalid_argument("d-rule for non-scalar '" + n.str() + "'");
                    s.rels.add_dsymbol_rule(n, rhs);
                } else if (const GeneratorDecl* g = s.decls.generator(n)) {
                    if (g->cls == GenClass::S1) throw std::invalid_argument("rewrite the log symbol of S1 generator '" + n.str() + "' instead");
                    s.rels.add_generator_rule(n, rhs);
                } else if (s.decls.scalar(n)) {
                    s.rels.add_symbol_rule(n, rhs);
                } else {
                    throw std::invalid_argument("undeclared name '" + n.str() + "'");
                }
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), nt.line, nt.col);
            }
        } else if (p.is("assert")) {
            p.take();
            Assertion a;
            a.line = at.line;
            a.lhs = p.expr();
            p.expect("==");
            a.rhs = p.expr();
            p.expect(";");
            s.assertions.push_back(std::move(a));
        } else {
            p.fail("expected 'gen', 'scalar', 'rel' or 'assert'");
        }
    }
    return s;
}

std::vector<AssertionResult> run_script(const Script& s, std::uint64_t budget) {
    RelationSet rels = s.rels;
    rels.set_env(&s.decls);
    std::vector<AssertionResult> out;
    for (const auto& a : s.assertions) {
        AssertionResult r;
        r.line = a.line;
        try {
            NormalizeStats st;
            r.residue = normalize(a.lhs - a.rhs, rels, budget, &st);
            r.steps = st.steps;
            r.ok = r.residue.is_zero();
        } catch (const BudgetExceeded& e) {
            r.budget_exceeded = true;
            r.steps = e.steps();
            r.error = e.what();
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace cf
