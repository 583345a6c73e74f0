#include "cf/cech/lattice.hpp"

#include <stdexcept>

namespace cf::cech {

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    IntMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

IntMatrix column_matrix(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
    IntMatrix r(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column of the wrong length");
        for (std::size_t i = 0; i < rows; ++i) r(i, j) = cols[j][i];
    }
    return r;
}

std::vector<Int> column(const IntMatrix& a, std::size_t j) {
    std::vector<Int> c(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) c[i] = a(i, j);
    return c;
}

IntMatrix lattice_basis(const IntMatrix& g) {
    /* G V = U^{-1} D */
    SNFResult s = smith(g);
    IntMatrix b(g.rows(), s.rank());
    for (std::size_t k = 0; k < s.rank(); ++k) {
        int sign = 0;
        for (std::size_t i = 0; i < g.rows() && !sign; ++i)
            if (s.Uinv(i, k) != 0) sign = s.Uinv(i, k) > 0 ? 1 : -1;
        for (std::size_t i = 0; i < g.rows(); ++i) b(i, k) = s.Uinv(i, k) * s.diag[k] * sign;
    }
    return b;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    SNFResult s = smith(a);
    IntMatrix k(a.cols(), a.cols() - s.rank());
    for (std::size_t j = s.rank(); j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) k(i, j - s.rank()) = s.V(i, j);
    return k;
}

IntMatrix preimage(const IntMatrix& m, const IntMatrix& rel) {
    IntMatrix k = integer_kernel(hcat(m, rel));
    IntMatrix x(m.cols(), k.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) x(i, j) = k(i, j);
    return lattice_basis(x);
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& g, const std::vector<Int>& x) {
    if (x.size() != g.rows()) throw std::invalid_argument("vector of the wrong length");
    SNFResult s = smith(g);
    std::vector<Int> y = s.U * x, z(g.cols());
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (k < s.rank()) {
            if (y[k] % s.diag[k] != 0) return std::nullopt;
            z[k] = y[k] / s.diag[k];
        } else if (y[k] != 0) {
            return std::nullopt;
        }
    }
    return s.V * z;
}

Subquotient::Subquotient(const IntMatrix& l_gens, const IntMatrix& n_gens) {
    if (l_gens.rows() != n_gens.rows()) throw std::invalid_argument("subquotient: ambient mismatch");
    basis_ = lattice_basis(l_gens);
    rel_ = n_gens;
    IntMatrix c(basis_.cols(), n_gens.cols());
    for (std::size_t j = 0; j < n_gens.cols(); ++j) {
        auto sol = solve_in_lattice(basis_, column(n_gens, j));
        if (!sol) throw std::invalid_argument("subquotient: N is not contained in L");
        for (std::size_t i = 0; i < c.rows(); ++i) c(i, j) = (*sol)[i];
    }
    SNFResult s = smith(c);
    U3_ = s.U;
    diag3_ = s.diag;
    rank3_ = s.rank();
    group_.rank = static_cast<int>(c.rows() - rank3_);
    /* generators with a positive leading entry; flipping one negates its coordinate row */
    auto add_gen = [&](std::size_t k) {
        std::vector<Int> v(c.rows());
        for (std::size_t i = 0; i < c.rows(); ++i) v[i] = s.Uinv(i, k);
        std::vector<Int> g = basis_ * v;
        for (const auto& x : g) {
            if (x == 0) continue;
            if (x < 0) {
                for (auto& y : g) y = -y;
                for (std::size_t j = 0; j < U3_.cols(); ++j) U3_(k, j) = -U3_(k, j);
            }
            break;
        }
        gens_.push_back(std::move(g));
    };
    for (std::size_t k = 0; k < rank3_; ++k)
        if (diag3_[k] > 1) {
            group_.torsion.push_back(diag3_[k]);
            add_gen(k);
        }
    for (std::size_t k = rank3_; k < c.rows(); ++k) add_gen(k);
}

Subquotient Subquotient::quotient(const IntMatrix& n_gens) {
    return Subquotient(IntMatrix::identity(n_gens.rows()), n_gens);
}

Subquotient Subquotient::of_group(const FGAbelianGroup& g) {
    const std::size_t t = g.torsion.size(), n = t + static_cast<std::size_t>(g.rank);
    IntMatrix rel(n, t);
    for (std::size_t i = 0; i < t; ++i) rel(i, i) = g.torsion[i];
    return quotient(rel);
}

bool Subquotient::contains(const std::vector<Int>& x) const { return solve_in_lattice(basis_, x).has_value(); }

GroupElement Subquotient::coords(const std::vector<Int>& x) const {
    auto c = solve_in_lattice(basis_, x);
    if (!c) throw std::invalid_argument("element does not lie in the subgroup");
    std::vector<Int> y = U3_ * *c;
    GroupElement e;
    for (std::size_t k = 0; k < rank3_; ++k)
        if (diag3_[k] > 1) {
            Int r = y[k] % diag3_[k];
            e.coords.push_back(r < 0 ? r + diag3_[k] : r);
        }
    for (std::size_t k = rank3_; k < y.size(); ++k) e.coords.push_back(y[k]);
    return e;
}

}  // namespace cf::cech
