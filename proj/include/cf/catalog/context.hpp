#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cf/symcalc/expr.hpp"
#include "cf/symcalc/rewrite.hpp"

namespace cf::cat {

using Idx = std::vector<int>;
using Builder = std::function<Expr(const Idx&)>;

/* "eta" + (0,1,2) -> "eta_012"; global symbols keep the bare family name. */
std::string mangle(const std::string& fam, const Idx& idx);

/* Indexed generator and scalar families over the generic simplex (0,1,...,p).
   Every index tuple is eliminated toward the minimal index 0:
     phi_ij  -> exp(eta_0ij) phi_0i^-1 phi_0j,   phi_ji -> phi_ij^-1
     g_j     -> phi_0j^-1 g_0 phi_0j
     c_I     -> (dc)_{0I} + sum_k (-1)^k c_{0, I minus i_k}   (c with a coboundary hypothesis)
   so normal forms only contain generators and symbols whose first index is 0. */
class Context : public SymbolEnv, public Rewriter {
public:
    struct ScalarSpec {
        int p = 0;          /* Cech degree; -1 for a global symbol, whose indices are ignored */
        int q = 0;          /* form degree */
        bool closed = false;
        bool integral = false;
    };

    void op_free(const std::string& fam, GenClass cls, const std::string& det = "");
    void op_transition(const std::string& fam, const std::string& log);
    void op_conjugate(const std::string& fam, const std::string& trans, const std::string& det = "");
    void op_defined(const std::string& fam, GenClass cls, Builder rule, const std::string& det = "");

    void scalar_free(const std::string& fam, ScalarSpec s);
    /* Cone family: (delta c)_J for |J| = p+2 is given by hyp. */
    void scalar_cone(const std::string& fam, ScalarSpec s, Builder hyp);
    void scalar_defined(const std::string& fam, ScalarSpec s, Builder rule);
    /* Extra rule for d of the base symbols of a family. */
    void set_d_rule(const std::string& fam, Builder rule);

    bool has(const std::string& fam) const;
    /* Plain group element for a generator. */
    Expr op(const std::string& fam, const Idx& idx) const;
    Expr sc(const std::string& fam, const Idx& idx = {}) const;
    Expr dsc(const std::string& fam, const Idx& idx = {}) const { return d(sc(fam, idx)); }

    const GeneratorDecl* generator(Name n) const override;
    const ScalarDecl* scalar(Name n) const override;

    std::optional<Expr> generator_rule(Name n) const override;
    std::optional<Expr> symbol_rule(Name n) const override;
    std::optional<Expr> dsymbol_rule(Name n) const override;
    std::optional<Expr> trace_rule(const Word& w) const override;
    std::string family_of(Name n) const override;

    /* Checks delta(hyp) = 0 for every cone family; returns the failing families. */
    std::vector<std::string> check_cone_hypotheses(std::uint64_t budget = kDefaultBudget) const;

private:
    enum class Kind { Free, Transition, Conjugate, Cone, Defined };
    struct OpFamily {
        GenClass cls = GenClass::U;
        Kind kind = Kind::Free;
        std::string aux;
        std::string det;
        Builder rule;
    };
    struct ScalarFamily {
        ScalarSpec spec;
        Kind kind = Kind::Free;
        Builder rule;
        Builder drule;
    };
    bool split(Name n, std::string& fam, Idx& idx) const;
    void claim(const std::string& fam);

    std::map<std::string, OpFamily> ops_;
    std::map<std::string, ScalarFamily> scalars_;
    mutable std::map<Name, GeneratorDecl> gen_cache_;
    mutable std::map<Name, ScalarDecl> sc_cache_;
};

/* Coboundary of an index builder at a tuple of length p+2. */
Expr delta(const Builder& c, const Idx& idx);
Idx simplex(int p);
Idx drop(const Idx& idx, std::size_t k);
Idx pick(const Idx& idx, std::initializer_list<int> positions);

}  // namespace cf::cat
