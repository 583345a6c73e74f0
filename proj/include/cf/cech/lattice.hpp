#pragma once

#include <optional>
#include <vector>

#include "cf/cech/group.hpp"

namespace cf::cech {

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix column_matrix(std::size_t rows, const std::vector<std::vector<Int>>& cols);
std::vector<Int> column(const IntMatrix& a, std::size_t j);

/* Basis (as columns) of the lattice spanned by the columns of g. */
IntMatrix lattice_basis(const IntMatrix& g);
/* Basis of the integer kernel of a. */
IntMatrix integer_kernel(const IntMatrix& a);
/* Generators of {x : m x lies in the lattice spanned by rel}. */
IntMatrix preimage(const IntMatrix& m, const IntMatrix& rel);
/* Integer solution c of g c = x if one exists. */
std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& g, const std::vector<Int>& x);

/* The subquotient L / N of Z^n for lattices N inside L, with a canonical generator basis. */
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const IntMatrix& l_gens, const IntMatrix& n_gens);
    static Subquotient quotient(const IntMatrix& n_gens);
    /* Z^n / diag(torsion) for a model group in its own coordinates. */
    static Subquotient of_group(const FGAbelianGroup& g);

    std::size_t ambient() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    const IntMatrix& relations() const { return rel_; }
    const FGAbelianGroup& group() const { return group_; }
    /* Ambient representatives of the generators, torsion first. */
    const std::vector<std::vector<Int>>& generators() const { return gens_; }
    bool contains(const std::vector<Int>& x) const;
    /* Coordinates of x in L; throws std::invalid_argument if x is not in L. */
    GroupElement coords(const std::vector<Int>& x) const;

private:
    IntMatrix basis_, rel_, U3_;
    std::vector<Int> diag3_;
    std::size_t rank3_ = 0;
    FGAbelianGroup group_;
    std::vector<std::vector<Int>> gens_;
};

}  // namespace cf::cech
