#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cf/symcalc/rational.hpp"

namespace cf {

/* Interned identifier. Equality is pointer identity, order is by spelling. */
class Name {
public:
    Name() = default;
    explicit Name(std::string_view s);
    const std::string& str() const { return *p_; }
    bool empty() const { return p_ == nullptr || p_->empty(); }
    friend bool operator==(Name a, Name b) { return a.p_ == b.p_; }
    friend std::strong_ordering operator<=>(Name a, Name b) {
        if (a.p_ == b.p_) return std::strong_ordering::equal;
        int c = a.str().compare(b.str());
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    const std::string* p_ = nullptr;
};

enum class Form : std::uint8_t { Plain = 0, Inverse = 1, Diff = 2 };

struct Factor {
    Name gen;
    Form form = Form::Plain;
    int degree() const { return form == Form::Diff ? 1 : 0; }
    friend bool operator==(const Factor&, const Factor&) = default;
    friend std::strong_ordering operator<=>(const Factor&, const Factor&) = default;
};

using Word = std::vector<Factor>;

int word_degree(const Word& w);
/* w1 w2 with free cancellation of X X^-1 at the junction. */
Word concat(const Word& a, const Word& b);
/* Graded cyclic normal form: returns sign (0 when the trace vanishes) and the
   minimal rotation after cyclic cancellation. */
std::pair<int, Word> canonical_trace(const Word& w);

enum class AtomKind : std::uint8_t { Unit = 0, Symbol = 1, DSymbol = 2, Trace = 3 };

/* Commuting (graded) factor of a term. Unit is exp(tau*x) for a real symbol x. */
struct ScalarAtom {
    AtomKind kind = AtomKind::Symbol;
    Name name;
    int degree = 0;
    bool closed = false;
    bool integral = false;
    Word word;

    friend bool operator==(const ScalarAtom& a, const ScalarAtom& b) {
        return a.kind == b.kind && a.name == b.name && a.word == b.word;
    }
    friend std::strong_ordering operator<=>(const ScalarAtom& a, const ScalarAtom& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.name <=> b.name; c != 0) return c;
        return a.word <=> b.word;
    }
};

struct Power {
    ScalarAtom atom;
    int exp = 1;
    friend bool operator==(const Power&, const Power&) = default;
    friend std::strong_ordering operator<=>(const Power& a, const Power& b) {
        if (auto c = a.atom <=> b.atom; c != 0) return c;
        return a.exp <=> b.exp;
    }
};

using Monomial = std::vector<Power>;

int monomial_degree(const Monomial& m);
/* Koszul-signed product of sorted monomials; sign 0 means the product vanishes. */
int multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out);

struct TermKey {
    Monomial mono;
    Word word;
    int tau = 0;
    int degree() const { return monomial_degree(mono) + word_degree(word); }
    friend bool operator==(const TermKey&, const TermKey&) = default;
    friend std::strong_ordering operator<=>(const TermKey& a, const TermKey& b) {
        if (auto c = a.mono <=> b.mono; c != 0) return c;
        if (auto c = a.word <=> b.word; c != 0) return c;
        return a.tau <=> b.tau;
    }
};

/* Formal sum sum_k c_k tau^{n_k} (scalar atoms) (word). Always kept merged. */
class Expr {
public:
    using Terms = std::map<TermKey, Rational>;

    Expr() = default;
    static Expr constant(Rational c, int tau = 0);
    static Expr term(TermKey key, Rational c);
    static Expr atom(const ScalarAtom& a, int exp = 1);
    static Expr symbol(Name n, int degree = 0, bool closed = false, bool integral = false);
    static Expr dsymbol(Name n, int base_degree = 0);
    static Expr unit(Name log, int exp = 1);
    static Expr factor(Name gen, Form form = Form::Plain);
    static Expr word(const Word& w);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add_term(const TermKey& k, const Rational& c);

    Expr operator-() const;
    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator*(const Rational& c, const Expr& e);
    Expr scaled(const Rational& c, int tau = 0) const;

    friend bool operator==(const Expr&, const Expr&) = default;

    /* True for c * units * (word without differentials) with a single term. */
    bool is_group_element() const;
    /* Highest total degree appearing, -1 for zero. */
    int max_degree() const;
    bool homogeneous(int& deg) const;

    std::string str() const;

private:
    Terms terms_;
};

Expr d(const Expr& e);
Expr tr(const Expr& e);
Expr pow(const Expr& e, int n);
/* Inverse of a group element; throws std::invalid_argument otherwise. */
Expr group_inverse(const Expr& g);

std::string term_str(const TermKey& k, const Rational& c, bool leading);
std::string word_str(const Word& w);
std::string atom_str(const ScalarAtom& a);

}  // namespace cf
