#pragma once

#include <string>
#include <vector>

#include "cf/cech/matrix.hpp"

namespace cf::cech {

/* Z^rank + Z/t1 + ... + Z/tk + (R/Z)^torus with t1 | t2 | ... and every ti > 1. */
struct FGAbelianGroup {
    int rank = 0;
    std::vector<Int> torsion;
    int torus = 0;

    FGAbelianGroup() = default;
    FGAbelianGroup(int r, std::vector<Int> t = {}, int tor = 0);

    static FGAbelianGroup free(int r) { return FGAbelianGroup(r); }
    static FGAbelianGroup cyclic(const Int& n);
    /* Cokernel of an integer relation matrix (columns are relations). */
    static FGAbelianGroup cokernel(const IntMatrix& relations);

    bool trivial() const { return rank == 0 && torsion.empty() && torus == 0; }
    bool finite() const { return rank == 0 && torus == 0; }
    Int order() const; /* only for finite groups */
    std::string str() const;
    bool operator==(const FGAbelianGroup& o) const = default;

    FGAbelianGroup operator+(const FGAbelianGroup& o) const;
};

/* Coordinates with respect to a computed basis: torsion coordinates first, then free ones. */
struct GroupElement {
    std::vector<Int> coords;
    bool is_zero() const;
    bool operator==(const GroupElement& o) const = default;
};

}  // namespace cf::cech
