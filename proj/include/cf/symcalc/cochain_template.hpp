#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cf/symcalc/expr.hpp"
#include "cf/symcalc/rewrite.hpp"

namespace cf {

struct Slot {
    Name name;
    GenClass cls = GenClass::U;
};

/* Group p-cochain: a body over slot generators. */
struct CochainTemplate {
    std::vector<Slot> slots;
    Expr body;
    int arity() const { return static_cast<int>(slots.size()); }
};

/* Template whose slots are fresh generators named prefix1..prefixN. */
CochainTemplate make_template(const std::string& prefix, const std::vector<GenClass>& classes,
                              const std::function<Expr(const std::vector<Expr>&)>& body);

/* Class of a product of declared generators; S1 factors make it class U. */
GenClass word_class(const Expr& g, const SymbolEnv& env);

/* Replaces every slot by the matching argument and expands. Arguments must be
   group elements over generators declared in env (slot names excluded). */
Expr substitute(const CochainTemplate& k, const std::vector<Expr>& args, const SymbolEnv& env,
                std::vector<std::string>* violations = nullptr);

/* (dK)(f_1..f_{p+1}) = K(f_2..) + sum (-1)^i K(..f_i f_{i+1}..) + (-1)^{p+1} K(f_1..f_p). */
CochainTemplate group_coboundary(const CochainTemplate& k, std::vector<std::string>* violations = nullptr);

/* Environment that declares the slots of a template on top of a base env. */
class SlotEnv : public SymbolEnv {
public:
    SlotEnv(const CochainTemplate& k, const SymbolEnv* base);
    const GeneratorDecl* generator(Name n) const override;
    const ScalarDecl* scalar(Name n) const override;

private:
    Decls own_;
    const SymbolEnv* base_;
};

}  // namespace cf
