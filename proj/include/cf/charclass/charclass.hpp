#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cf/cech/group.hpp"

namespace cf::charclass {

using cech::Int;
using SignedSeries = std::vector<Int>;

/* prod_{i >= 0} (1 + t^{2i+1}) through t^N: partitions into distinct odd parts. */
SignedSeries distinct_odd_partitions(int n);
/* t^2 + t^3 + (1 - t^2) prod (1 + t^{2i+1}) through t^N. */
SignedSeries poincare_series(int n);
/* t^2 + (1 - t^2) prod (1 + t^{2i+1}) through t^N. */
SignedSeries kernel_series(int n);

/* Monomials x_{a1} ... x_{ak}, a1 < ... < ak odd, of weight n. */
using Monomial = std::vector<int>;
std::vector<Monomial> exterior_basis(int n);

/* d x1 = 0, d x_{2i+1} = x_{2i-1}, extended as a derivation; the matrix of d : L_{n+2} -> L_n. */
cech::IntMatrix exterior_differential(int n);

struct ExteriorRow {
    int n = 0;
    long dim = 0;
    long kernel = 0;             /* dim Ker(d) in L_n, d : L_n -> L_{n-2} */
    long coker = -1;             /* dim Coker(d : L_{n+2} -> L_n); -1 when n + 2 > N */
    bool dd_zero = true;         /* d o d vanishes on L_{n+2}; fails in general, e.g. d d x5 = x1 */
};

std::vector<ExteriorRow> exterior_brute_force(int n);

struct ClassRow {
    int p = 0;
    cech::FGAbelianGroup group;
    Int real_dim = 0;  /* coefficient of t^p in the Poincare series */
    bool consistent = false;
};

std::vector<ClassRow> classification_table();

nlohmann::json series_report(int n, bool brute_force);
std::string series_text(int n, bool brute_force);

}  // namespace cf::charclass
