#pragma once

#include <map>
#include <random>
#include <vector>

#include "cf/cech/complex.hpp"

namespace cf::cech {

/* Tensor values on C^p(K) (x) C^q(L), indexed by sK * |L_q| + sL. */
using Block = std::vector<Rat>;

std::size_t block_size(const SimplicialComplex& k, int p, const SimplicialComplex& l, int q);
Block delta_k(const SimplicialComplex& k, int p, const SimplicialComplex& l, int q, const Block& b);
Block delta_l(const SimplicialComplex& k, int p, const SimplicialComplex& l, int q, const Block& b);
/* Front face / back face product in both directions, without sign. */
Block block_cup(const SimplicialComplex& k, const SimplicialComplex& l, int p1, int q1, const Block& a, int p2, int q2,
                const Block& b);

/* Total-degree r cochain of the Cech-de Rham model C^p(K) (x) C^q(L; Q). */
class DoubleCochain {
public:
    DoubleCochain(ComplexPtr k, ComplexPtr l, int total);

    int total() const { return total_; }
    const ComplexPtr& k() const { return k_; }
    const ComplexPtr& l() const { return l_; }
    /* Cech degrees p with a nonempty component. */
    std::vector<int> degrees() const;
    Block& at(int p);
    const Block& at(int p) const;

    bool is_zero() const;
    DoubleCochain operator+(const DoubleCochain& o) const;
    DoubleCochain operator-(const DoubleCochain& o) const;
    DoubleCochain operator*(const Rat& c) const;

    static DoubleCochain random(ComplexPtr k, ComplexPtr l, int total, std::mt19937_64& rng, int range = 3);

private:
    ComplexPtr k_, l_;
    int total_;
    std::map<int, Block> comp_;
};

/* D = delta + (-1)^p d on component (p, q). */
DoubleCochain total_differential(const DoubleCochain& c);
/* (a ^ b)^{p,q} = sum (-1)^{q1 p2} a^{p1,q1} b^{p2,q2}. */
DoubleCochain dc_wedge(const DoubleCochain& a, const DoubleCochain& b);

/* Deligne cochain of weight n and degree m: an integral Cech m-cochain in slot 0 and,
   for 1 <= k <= n, a form slot of bidegree (m - k, k - 1). */
struct DeligneCochain {
    ComplexPtr k, l;
    int weight = 0, degree = 0;
    Block integral;
    std::vector<Block> forms;

    DeligneCochain(ComplexPtr k, ComplexPtr l, int weight, int degree);
    bool is_zero() const;
    DeligneCochain operator+(const DeligneCochain& o) const;
    DeligneCochain operator*(const Rat& c) const;
    static DeligneCochain random(ComplexPtr k, ComplexPtr l, int weight, int degree, std::mt19937_64& rng,
                                 int range = 3);
};

DeligneCochain deligne_differential(const DeligneCochain& c);
/* (a0 u b0, a0 u b1, ..., a0 u bn, a1 ^ d bn, ..., am ^ d bn) */
DeligneCochain deligne_cup(const DeligneCochain& a, const DeligneCochain& b);

}  // namespace cf::cech
