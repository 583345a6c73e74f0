#pragma once

#include <map>
#include <string>

#include "cf/catalog/context.hpp"

namespace cf::cat {

/* Cech-de Rham or Deligne cochain of a given total degree, stored by slot.
   Cech-de Rham: slot q is the q-form part. Deligne of order n: slot 0 is the
   integer part and slot k >= 1 the (k-1)-form part, k <= n. In both cases the
   Cech degree of slot s is total - s. D = delta + (-1)^p d on the (p, .) part. */
struct SymCochain {
    int total = 0;
    int order = -1;
    std::map<int, Builder> slots;

    bool deligne() const { return order >= 0; }
    int cech(int slot) const { return total - slot; }
    int form_degree(int slot) const { return deligne() ? slot - 1 : slot; }
    /* Component at a tuple; zero if the slot is empty. */
    Expr at(int slot, const Idx& idx) const;
    int max_slot() const { return slots.empty() ? -1 : slots.rbegin()->first; }
};

SymCochain D(const SymCochain& x);
SymCochain operator+(const SymCochain& a, const SymCochain& b);
SymCochain operator-(const SymCochain& a, const SymCochain& b);
SymCochain scale(const SymCochain& a, const Rational& c, int tau = 0);
/* Deligne cochain regarded in Z(n) for a larger order n. */
SymCochain with_order(const SymCochain& a, int n);

/* Cech-de Rham product: sum over splittings of (-1)^{q1 p2} x(i0..ip1) y(ip1..ip). */
SymCochain wedge(const SymCochain& x, const SymCochain& y);

/* Deligne product Z(m) x Z(n) -> Z(m+n):
   (a u b, a u y^[0], ..., a u y^[n-1], x^[0] u dy^[n-1], ..., x^[m-1] u dy^[n-1])
   with the Koszul sign (-1)^{k p2} on x-slot k times a y part of Cech degree p2. */
SymCochain deligne_cup(const SymCochain& x, const SymCochain& y);

/* Integer Cech cochain as a Deligne cochain of order 0. */
SymCochain integer_cochain(int p, Builder b);

/* Component-wise comparison a - b on generic simplices, one entry per slot. */
std::map<int, Expr> difference_components(const SymCochain& a, const SymCochain& b);

}  // namespace cf::cat
