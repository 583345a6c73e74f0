#include "cf/symcalc/cochain_template.hpp"

#include <stdexcept>

namespace cf {

namespace {

class SlotRewriter : public Rewriter {
public:
    std::map<Name, Expr> map;
    std::optional<Expr> generator_rule(Name n) const override {
        auto it = map.find(n);
        if (it == map.end()) return std::nullopt;
        return it->second;
    }
};

}  // namespace

CochainTemplate make_template(const std::string& prefix, const std::vector<GenClass>& classes,
                              const std::function<Expr(const std::vector<Expr>&)>& body) {
    CochainTemplate k;
    std::vector<Expr> gens;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i] == GenClass::S1) throw std::invalid_argument("template slots must be operator valued");
        Name n(prefix + std::to_string(i + 1));
        k.slots.push_back(Slot{n, classes[i]});
        gens.push_back(Expr::factor(n));
    }
    k.body = body(gens);
    return k;
}

GenClass word_class(const Expr& g, const SymbolEnv& env) {
    if (!g.is_group_element()) throw std::invalid_argument("argument is not a group element: " + g.str());
    const auto& key = g.terms().begin()->first;
    if (!key.mono.empty()) return GenClass::U;
    for (const auto& f : key.word) {
        const GeneratorDecl* d = env.generator(f.gen);
        if (!d) throw std::invalid_argument("undeclared generator " + f.gen.str());
        if (d->cls != GenClass::U1) return GenClass::U;
    }
    return GenClass::U1;
}

Expr substitute(const CochainTemplate& k, const std::vector<Expr>& args, const SymbolEnv& env,
                std::vector<std::string>* violations) {
    if (args.size() != k.slots.size())
        throw std::invalid_argument("arity mismatch: template takes " + std::to_string(k.slots.size()) + " arguments, got " +
                                    std::to_string(args.size()));
    SlotRewriter rw;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!args[i].is_group_element()) throw std::invalid_argument("argument " + std::to_string(i + 1) + " is not a group word");
        if (violations && k.slots[i].cls == GenClass::U1 && word_class(args[i], env) != GenClass::U1)
            violations->push_back("slot " + k.slots[i].name.str() + " requires U1, argument " + args[i].str() + " is not");
        rw.map[k.slots[i].name] = args[i];
    }
    return substitute(k.body, rw);
}

CochainTemplate group_coboundary(const CochainTemplate& k, std::vector<std::string>* violations) {
    const int p = k.arity();
    std::vector<GenClass> cls(static_cast<std::size_t>(p + 1), GenClass::U);
    /* a new slot must be U1 if it feeds, alone or in a product, a U1 slot */
    for (int face = 0; face <= p + 1; ++face) {
        for (int j = 0; j < p; ++j) {
            if (k.slots[static_cast<std::size_t>(j)].cls != GenClass::U1) continue;
            int src = (face == 0 || (face <= p && j >= face)) ? j + 1 : j;
            cls[static_cast<std::size_t>(src)] = GenClass::U1;
            if (face >= 1 && face <= p && j == face - 1) cls[static_cast<std::size_t>(j + 1)] = GenClass::U1;
        }
    }
    CochainTemplate out;
    std::vector<Expr> f;
    for (int i = 0; i <= p; ++i) {
        Name n("f" + std::to_string(i + 1));
        out.slots.push_back(Slot{n, cls[static_cast<std::size_t>(i)]});
        f.push_back(Expr::factor(n));
    }
    Decls env;
    for (const auto& s : out.slots) env.add_generator(GeneratorDecl{s.name, s.cls, Name(), {}});
    for (int face = 0; face <= p + 1; ++face) {
        std::vector<Expr> args;
        if (face == 0) {
            args.assign(f.begin() + 1, f.end());
        } else if (face == p + 1) {
            args.assign(f.begin(), f.end() - 1);
        } else {
            for (int i = 0; i <= p; ++i) {
                if (i == face - 1) args.push_back(f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i + 1)]);
                else if (i != face) args.push_back(f[static_cast<std::size_t>(i)]);
            }
        }
        Expr term = substitute(k, args, env, violations);
        if (face & 1) out.body -= term;
        else out.body += term;
    }
    return out;
}

SlotEnv::SlotEnv(const CochainTemplate& k, const SymbolEnv* base) : base_(base) {
    for (const auto& s : k.slots) own_.add_generator(GeneratorDecl{s.name, s.cls, Name(), {}});
}

const GeneratorDecl* SlotEnv::generator(Name n) const {
    if (auto* g = own_.generator(n)) return g;
    return base_ ? base_->generator(n) : nullptr;
}

const ScalarDecl* SlotEnv::scalar(Name n) const { return base_ ? base_->scalar(n) : nullptr; }

}  // namespace cf
