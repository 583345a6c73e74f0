#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cf/symcalc/expr.hpp"

namespace cf {

enum class GenClass { U1, U, S1 };

std::string class_name(GenClass c);

struct GeneratorDecl {
    Name name;
    GenClass cls = GenClass::U;
    Name log_symbol;
    std::vector<int> indices;
};

struct ScalarDecl {
    Name name;
    int degree = 0;
    bool closed = false;
    bool integral = false;
};

/* Declaration lookup. Implementations may create entries lazily. */
class SymbolEnv {
public:
    virtual ~SymbolEnv() = default;
    virtual const GeneratorDecl* generator(Name n) const = 0;
    virtual const ScalarDecl* scalar(Name n) const = 0;
};

/* Explicit declaration table. */
class Decls : public SymbolEnv {
public:
    /* Adds the generator, and its log symbol as a real degree-0 scalar. */
    void add_generator(GeneratorDecl g);
    void add_scalar(ScalarDecl s);
    const GeneratorDecl* generator(Name n) const override;
    const ScalarDecl* scalar(Name n) const override;
    const std::map<Name, GeneratorDecl>& generators() const { return gens_; }
    const std::map<Name, ScalarDecl>& scalars() const { return scalars_; }

private:
    std::map<Name, GeneratorDecl> gens_;
    std::map<Name, ScalarDecl> scalars_;
};

/* Expr for a declared generator in the given form; S1 generators become units. */
Expr gen_expr(const SymbolEnv& env, Name n, Form form = Form::Plain);
Expr scalar_expr(const SymbolEnv& env, Name n);

/* Rewrite rules, looked up by name. All hooks default to "no rule". */
class Rewriter {
public:
    virtual ~Rewriter() = default;
    /* Replacement of a plain generator by a group element. */
    virtual std::optional<Expr> generator_rule(Name) const { return std::nullopt; }
    virtual std::optional<Expr> symbol_rule(Name) const { return std::nullopt; }
    /* Replacement for d of a symbol that has no symbol rule. */
    virtual std::optional<Expr> dsymbol_rule(Name) const { return std::nullopt; }
    /* Replacement for a canonical trace atom. */
    virtual std::optional<Expr> trace_rule(const Word&) const { return std::nullopt; }
    /* Label used in firing statistics. */
    virtual std::string family_of(Name n) const { return n.str(); }
};

/* Explicit rule tables plus the det-log rule tr[g^-1 dg] -> tau d alpha for U1 generators. */
class RelationSet : public Rewriter {
public:
    RelationSet() = default;
    explicit RelationSet(const SymbolEnv* env) : env_(env) {}
    void set_env(const SymbolEnv* env) { env_ = env; }
    void add_generator_rule(Name n, Expr rhs);
    void add_symbol_rule(Name n, Expr rhs);
    void add_dsymbol_rule(Name n, Expr rhs);

    std::optional<Expr> generator_rule(Name n) const override;
    std::optional<Expr> symbol_rule(Name n) const override;
    std::optional<Expr> dsymbol_rule(Name n) const override;
    std::optional<Expr> trace_rule(const Word& w) const override;

private:
    const SymbolEnv* env_ = nullptr;
    std::map<Name, Expr> gen_rules_, sym_rules_, dsym_rules_;
};

/* Det-log rule for a canonical word, shared by all rewriters. */
std::optional<Expr> det_log_rule(const SymbolEnv& env, const Word& w);

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t steps) : std::runtime_error(what), steps_(steps) {}
    std::uint64_t steps() const { return steps_; }

private:
    std::uint64_t steps_;
};

struct NormalizeStats {
    std::uint64_t steps = 0;
    std::map<std::string, std::uint64_t> fired;
};

inline constexpr std::uint64_t kDefaultBudget = 1000000;

/* Applies a rule set to closure (recursive) or once (substitution). */
class Normalizer {
public:
    Normalizer(const Rewriter& rw, std::uint64_t budget = kDefaultBudget, bool recursive = true);
    Expr run(const Expr& e);
    const NormalizeStats& stats() const { return stats_; }

private:
    Expr atom_expr(const ScalarAtom& a);
    Expr symbol(const ScalarAtom& a);
    Expr dsymbol(const ScalarAtom& a);
    Expr unit(const ScalarAtom& a);
    Expr trace(const ScalarAtom& a);
    Expr generator(Name n);
    Expr dgenerator(Name n);
    Expr word_expr(const Word& w);
    Expr apply_trace_rules(const Expr& e);
    Expr maybe_run(const Expr& e) { return recursive_ ? run(e) : e; }
    void step();
    void fire(Name n);
    void enter(Name n);
    void leave(Name n);

    const Rewriter& rw_;
    std::uint64_t budget_;
    bool recursive_;
    NormalizeStats stats_;
    std::map<Name, Expr> gen_cache_, dgen_cache_, sym_cache_, dsym_cache_, unit_cache_;
    std::map<Word, Expr> trace_cache_;
    std::set<Name> active_;
};

Expr normalize(const Expr& e, const Rewriter& rw, std::uint64_t budget = kDefaultBudget,
               NormalizeStats* stats = nullptr);
/* Single simultaneous pass: replacement outputs are not rewritten again. */
Expr substitute(const Expr& e, const Rewriter& rw);

struct LintFlag {
    Word word;
    std::string reason;
};

struct LintReport {
    std::vector<LintFlag> flags;
    std::size_t atoms_checked = 0;
    bool clean() const { return flags.empty(); }
    std::string summary() const;
};

/* Flags trace atoms without a differential of a U1 generator. Words listed in
   allowed are treated as interpretable groupings. */
LintReport trace_class_lint(const Expr& e, const SymbolEnv& env, const std::vector<Word>& allowed = {});

}  // namespace cf
