#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cf/symcalc/expr.hpp"
#include "cf/symcalc/rewrite.hpp"

namespace cf {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

/* Parses one expression against the given declarations. */
Expr parse_expr(const std::string& text, const SymbolEnv& env);

struct Assertion {
    int line = 0;
    Expr lhs, rhs;
};

/* A whole script: gen/scalar declarations, rel rules and assert statements.

     gen g0: U1 det a0;  gen phi01: U;  gen f012: S1 log eta012;
     scalar h0123: int;  scalar lam: form 2;  scalar x;
     rel g1 = phi01^-1 * g0 * phi01;
     assert d tr[(g1^-1 * d g1)^3] == 0;
*/
struct Script {
    Decls decls;
    RelationSet rels;
    std::vector<Assertion> assertions;
};

Script parse_script(const std::string& text);

struct AssertionResult {
    int line = 0;
    bool ok = false;
    bool budget_exceeded = false;
    Expr residue;
    std::uint64_t steps = 0;
    std::string error;
};

std::vector<AssertionResult> run_script(const Script& s, std::uint64_t budget = kDefaultBudget);

}  // namespace cf
