#include "cf/symcalc/rewrite.hpp"

#include <sstream>

namespace cf {

std::string class_name(GenClass c) {
    switch (c) {
    case GenClass::U1: return "U1";
    case GenClass::U: return "U";
    case GenClass::S1: return "S1";
    }
    return "?";
}

void Decls::add_generator(GeneratorDecl g) {
    if (gens_.count(g.name) || scalars_.count(g.name))
        throw std::invalid_argument("duplicate declaration of " + g.name.str());
    if (!g.log_symbol.empty()) {
        if (g.cls == GenClass::U) throw std::invalid_argument("class U generator " + g.name.str() + " cannot carry a log symbol");
        if (!scalars_.count(g.log_symbol)) add_scalar(ScalarDecl{g.log_symbol, 0, false, false});
    } else if (g.cls == GenClass::S1) {
        g.log_symbol = Name("log_" + g.name.str());
        if (!scalars_.count(g.log_symbol)) add_scalar(ScalarDecl{g.log_symbol, 0, false, false});
    }
    gens_.emplace(g.name, g);
}

void Decls::add_scalar(ScalarDecl s) {
    if (gens_.count(s.name) || scalars_.count(s.name))
        throw std::invalid_argument("duplicate declaration of " + s.name.str());
    scalars_.emplace(s.name, s);
}

const GeneratorDecl* Decls::generator(Name n) const {
    auto it = gens_.find(n);
    return it == gens_.end() ? nullptr : &it->second;
}

const ScalarDecl* Decls::scalar(Name n) const {
    auto it = scalars_.find(n);
    return it == scalars_.end() ? nullptr : &it->second;
}

Expr gen_expr(const SymbolEnv& env, Name n, Form form) {
    const GeneratorDecl* g = env.generator(n);
    if (!g) throw std::invalid_argument("undeclared generator " + n.str());
    if (g->cls == GenClass::S1) {
        switch (form) {
        case Form::Plain: return Expr::unit(g->log_symbol, 1);
        case Form::Inverse: return Expr::unit(g->log_symbol, -1);
        case Form::Diff: return (Expr::unit(g->log_symbol, 1) * Expr::dsymbol(g->log_symbol)).scaled(1, 1);
        }
    }
    return Expr::factor(n, form);
}

Expr scalar_expr(const SymbolEnv& env, Name n) {
    const ScalarDecl* s = env.scalar(n);
    if (!s) throw std::invalid_argument("undeclared scalar " + n.str());
    return Expr::symbol(n, s->degree, s->closed, s->integral);
}

void RelationSet::add_generator_rule(Name n, Expr rhs) {
    if (!rhs.is_group_element()) throw std::invalid_argument("generator rule for " + n.str() + " is not a group element");
    gen_rules_[n] = std::move(rhs);
}
void RelationSet::add_symbol_rule(Name n, Expr rhs) { sym_rules_[n] = std::move(rhs); }
void RelationSet::add_dsymbol_rule(Name n, Expr rhs) { dsym_rules_[n] = std::move(rhs); }

std::optional<Expr> RelationSet::generator_rule(Name n) const {
    auto it = gen_rules_.find(n);
    if (it == gen_rules_.end()) return std::nullopt;
    return it->second;
}
std::optional<Expr> RelationSet::symbol_rule(Name n) const {
    auto it = sym_rules_.find(n);
    if (it == sym_rules_.end()) return std::nullopt;
    return it->second;
}
std::optional<Expr> RelationSet::dsymbol_rule(Name n) const {
    auto it = dsym_rules_.find(n);
    if (it == dsym_rules_.end()) return std::nullopt;
    return it->second;
}
std::optional<Expr> RelationSet::trace_rule(const Word& w) const {
    if (!env_) return std::nullopt;
    return det_log_rule(*env_, w);
}

std::optional<Expr> det_log_rule(const SymbolEnv& env, const Word& w) {
    if (w.size() != 2 || w[0].gen != w[1].gen || w[0].form != Form::Inverse || w[1].form != Form::Diff)
        return std::nullopt;
    const GeneratorDecl* g = env.generator(w[0].gen);
    if (!g || g->cls != GenClass::U1 || g->log_symbol.empty()) return std::nullopt;
    const ScalarDecl* s = env.scalar(g->log_symbol);
    if (!s) throw std::invalid_argument("undeclared det symbol " + g->log_symbol.str());
    return Expr::dsymbol(g->log_symbol, 0).scaled(1, 1);
}

Normalizer::Normalizer(const Rewriter& rw, std::uint64_t budget, bool recursive)
    : rw_(rw), budget_(budget), recursive_(recursive) {}

void Normalizer::step() {
    if (++stats_.steps > budget_)
        throw BudgetExceeded("rewrite step budget of " + std::to_string(budget_) + " exceeded", stats_.steps);
}

void Normalizer::fire(Name n) { ++stats_.fired[rw_.family_of(n)]; }

void Normalizer::enter(Name n) {
    if (!active_.insert(n).second)
        throw BudgetExceeded("non-terminating rule set: " + n.str() + " rewrites into itself", stats_.steps);
}

void Normalizer::leave(Name n) { active_.erase(n); }

Expr Normalizer::run(const Expr& e) {
    Expr out;
    for (const auto& [k, c] : e.terms()) {
        Expr r = Expr::constant(c, k.tau);
        for (const auto& p : k.mono) {
            step();
            Expr a = atom_expr(p.atom);
            r = r * pow(a, p.exp);
            if (r.is_zero()) break;
        }
        if (!r.is_zero() && !k.word.empty()) r = r * word_expr(k.word);
        out += r;
    }
    return out;
}

Expr Normalizer::atom_expr(const ScalarAtom& a) {
    switch (a.kind) {
    case AtomKind::Symbol: return symbol(a);
    case AtomKind::DSymbol: return dsymbol(a);
    case AtomKind::Unit: return unit(a);
    case AtomKind::Trace: return trace(a);
    }
    return {};
}

Expr Normalizer::symbol(const ScalarAtom& a) {
    if (auto it = sym_cache_.find(a.name); it != sym_cache_.end()) return it->second;
    Expr out;
    if (auto rule = rw_.symbol_rule(a.name)) {
        fire(a.name);
        enter(a.name);
        out = maybe_run(*rule);
        leave(a.name);
    } else {
        out = Expr::atom(a);
    }
    sym_cache_[a.name] = out;
    return out;
}

Expr Normalizer::dsymbol(const ScalarAtom& a) {
    if (auto it = dsym_cache_.find(a.name); it != dsym_cache_.end()) return it->second;
    Expr out;
    if (auto rule = rw_.symbol_rule(a.name)) {
        ScalarAtom base = a;
        base.kind = AtomKind::Symbol;
        base.degree = a.degree - 1;
        Expr s = recursive_ ? symbol(base) : *rule;
        out = maybe_run(d(s));
    } else if (auto drule = rw_.dsymbol_rule(a.name)) {
        fire(a.name);
        enter(a.name);
        out = maybe_run(*drule);
        leave(a.name);
    } else {
        out = Expr::atom(a);
    }
    dsym_cache_[a.name] = out;
    return out;
}

Expr Normalizer::unit(const ScalarAtom& a) {
    if (auto it = unit_cache_.find(a.name); it != unit_cache_.end()) return it->second;
    Expr out;
    if (auto rule = rw_.symbol_rule(a.name)) {
        ScalarAtom base = a;
        base.kind = AtomKind::Symbol;
        Expr lin = recursive_ ? symbol(base) : *rule;
        out = Expr::constant(1);
        for (const auto& [k, c] : lin.terms()) {
            bool constant_term = k.mono.empty() && k.word.empty() && k.tau == 0;
            if (constant_term) {
                if (!c.is_integer()) throw std::invalid_argument("exp of a non-integral constant in the log of " + a.name.str());
                continue;
            }
            bool linear = k.word.empty() && k.tau == 0 && k.mono.size() == 1 && k.mono[0].exp == 1 &&
                          k.mono[0].atom.kind == AtomKind::Symbol && k.mono[0].atom.degree == 0;
            if (!linear || !c.is_integer())
                throw std::invalid_argument("log of " + a.name.str() + " is not an integral linear combination");
            const ScalarAtom& s = k.mono[0].atom;
            if (s.integral) continue;
            out = out * Expr::unit(s.name, static_cast<int>(c.num()));
        }
    } else {
        out = Expr::atom(a);
    }
    unit_cache_[a.name] = out;
    return out;
}

Expr Normalizer::trace(const ScalarAtom& a) {
    if (auto it = trace_cache_.find(a.word); it != trace_cache_.end()) return it->second;
    Expr inner = word_expr(a.word);
    Expr out = apply_trace_rules(tr(inner));
    trace_cache_[a.word] = out;
    return out;
}

Expr Normalizer::apply_trace_rules(const Expr& e) {
    bool any = false;
    for (const auto& [k, c] : e.terms())
        for (const auto& p : k.mono)
            if (p.atom.kind == AtomKind::Trace && rw_.trace_rule(p.atom.word)) any = true;
    if (!any) return e;
    Expr out;
    for (const auto& [k, c] : e.terms()) {
        Expr r = Expr::constant(c, k.tau);
        for (const auto& p : k.mono) {
            Expr a = Expr::atom(p.atom);
            if (p.atom.kind == AtomKind::Trace) {
                if (auto rule = rw_.trace_rule(p.atom.word)) {
                    step();
                    ++stats_.fired["trace:" + word_str(p.atom.word)];
                    a = maybe_run(*rule);
                }
            }
            r = r * pow(a, p.exp);
        }
        if (!k.word.empty()) r = r * Expr::word(k.word);
        out += r;
    }
    return out;
}

Expr Normalizer::generator(Name n) {
    if (auto it = gen_cache_.find(n); it != gen_cache_.end()) return it->second;
    Expr out;
    if (auto rule = rw_.generator_rule(n)) {
        fire(n);
        enter(n);
        out = maybe_run(*rule);
        leave(n);
        if (!out.is_group_element())
            throw std::invalid_argument("rewrite of generator " + n.str() + " is not a group element");
    } else {
        out = Expr::factor(n);
    }
    gen_cache_[n] = out;
    return out;
}

Expr Normalizer::dgenerator(Name n) {
    if (auto it = dgen_cache_.find(n); it != dgen_cache_.end()) return it->second;
    Expr out;
    if (rw_.generator_rule(n)) out = maybe_run(d(generator(n)));
    else out = Expr::factor(n, Form::Diff);
    dgen_cache_[n] = out;
    return out;
}

Expr Normalizer::word_expr(const Word& w) {
    Expr r = Expr::constant(1);
    for (const auto& f : w) {
        step();
        switch (f.form) {
        case Form::Plain: r = r * generator(f.gen); break;
        case Form::Inverse: r = r * group_inverse(generator(f.gen)); break;
        case Form::Diff: r = r * dgenerator(f.gen); break;
        }
        if (r.is_zero()) break;
    }
    return r;
}

Expr normalize(const Expr& e, const Rewriter& rw, std::uint64_t budget, NormalizeStats* stats) {
    Normalizer n(rw, budget, true);
    Expr out = n.run(e);
    if (stats) *stats = n.stats();
    return out;
}

Expr substitute(const Expr& e, const Rewriter& rw) {
    Normalizer n(rw, kDefaultBudget * 100, false);
    return n.run(e);
}

std::string LintReport::summary() const {
    std::ostringstream os;
    os << flags.size() << " of " << atoms_checked << " trace atoms flagged";
    return os.str();
}

static void lint_collect(const Expr& e, std::set<Word>& words) {
    for (const auto& [k, c] : e.terms())
        for (const auto& p : k.mono)
            if (p.atom.kind == AtomKind::Trace) words.insert(p.atom.word);
}

LintReport trace_class_lint(const Expr& e, const SymbolEnv& env, const std::vector<Word>& allowed) {
    std::set<Word> words;
    lint_collect(e, words);
    LintReport rep;
    rep.atoms_checked = words.size();
    for (const auto& w : words) {
        bool ok = false;
        for (const auto& f : w) {
            if (f.form != Form::Diff) continue;
            const GeneratorDecl* g = env.generator(f.gen);
            if (g && g->cls == GenClass::U1) ok = true;
        }
        if (!ok) {
            auto canon = canonical_trace(w).second;
            for (const auto& a : allowed)
                if (canonical_trace(a).second == canon) ok = true;
        }
        if (!ok) rep.flags.push_back({w, "no differential of a U1 generator; trace is formal"});
    }
    return rep;
}

}  // namespace cf
