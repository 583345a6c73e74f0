#include "cf/cech/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cf::cech {

namespace {

/* Row and column operations applied to D while keeping U, V and their inverses in step. */
struct Smith {
    IntMatrix D, U, V, Ui, Vi;
    std::size_t m, n;

    explicit Smith(const IntMatrix& a)
        : D(a), U(IntMatrix::identity(a.rows())), V(IntMatrix::identity(a.cols())), Ui(U), Vi(V), m(a.rows()),
          n(a.cols()) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(D(i, c), D(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(U(i, c), U(j, c));
        for (std::size_t r = 0; r < m; ++r) std::swap(Ui(r, i), Ui(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(D(r, i), D(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(V(r, i), V(r, j));
        for (std::size_t c = 0; c < n; ++c) std::swap(Vi(i, c), Vi(j, c));
    }
    /* row i += c * row j */
    void add_row(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t k = 0; k < n; ++k)
            if (D(j, k) != 0) D(i, k) += c * D(j, k);
        for (std::size_t k = 0; k < m; ++k)
            if (U(j, k) != 0) U(i, k) += c * U(j, k);
        for (std::size_t r = 0; r < m; ++r)
            if (Ui(r, i) != 0) Ui(r, j) -= c * Ui(r, i);
    }
    /* col i += c * col j */
    void add_col(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t r = 0; r < m; ++r)
            if (D(r, j) != 0) D(r, i) += c * D(r, j);
        for (std::size_t r = 0; r < n; ++r)
            if (V(r, j) != 0) V(r, i) += c * V(r, j);
        for (std::size_t k = 0; k < n; ++k)
            if (Vi(i, k) != 0) Vi(j, k) -= c * Vi(i, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) D(i, k) = -D(i, k);
        for (std::size_t k = 0; k < m; ++k) U(i, k) = -U(i, k);
        for (std::size_t r = 0; r < m; ++r) Ui(r, i) = -Ui(r, i);
    }

    /* Smallest nonzero |entry| in the trailing block; false if the block is zero. */
    bool pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& x = D(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                    if (best == 1) return true;
                }
            }
        return found;
    }

    void run() {
        std::size_t t = 0;
        while (t < m && t < n) {
            std::size_t pi = 0, pj = 0;
            if (!pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (D(i, t) == 0) continue;
                    add_row(i, t, -(D(i, t) / D(t, t)));
                    if (D(i, t) != 0) dirty = true;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (D(t, j) == 0) continue;
                    add_col(j, t, -(D(t, j) / D(t, t)));
                    if (D(t, j) != 0) dirty = true;
                }
                if (dirty) {
                    /* a remainder is smaller than the pivot: move it into place */
                    std::size_t bi = t, bj = t;
                    Int best = abs(D(t, t));
                    for (std::size_t i = t + 1; i < m; ++i)
                        if (D(i, t) != 0 && abs(D(i, t)) < best) best = abs(D(i, t)), bi = i, bj = t;
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (D(t, j) != 0 && abs(D(t, j)) < best) best = abs(D(t, j)), bi = t, bj = j;
                    swap_rows(t, bi);
                    swap_cols(t, bj);
                    continue;
                }
                /* divisibility of the remaining block */
                bool fixed = false;
                for (std::size_t i = t + 1; i < m && !fixed; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (D(i, j) % D(t, t) != 0) {
                            add_row(t, i, 1);
                            fixed = true;
                            break;
                        }
                if (!fixed) break;
            }
            if (D(t, t) < 0) negate_row(t);
            ++t;
        }
    }
};

}  // namespace

SNFResult smith(const IntMatrix& a) {
    Smith s(a);
    s.run();
    SNFResult r;
    for (std::size_t t = 0; t < s.m && t < s.n; ++t)
        if (s.D(t, t) != 0) r.diag.push_back(s.D(t, t));
    r.D = std::move(s.D);
    r.U = std::move(s.U);
    r.V = std::move(s.V);
    r.Uinv = std::move(s.Ui);
    r.Vinv = std::move(s.Vi);
    return r;
}

std::size_t rank(const IntMatrix& a) {
    /* fraction-free (Bareiss) echelon form */
    IntMatrix m = a;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(p, k));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t k = c + 1; k < m.cols(); ++k) m(i, k) = (m(i, k) * m(r, c) - m(r, k) * m(i, c)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    /* Bareiss */
    IntMatrix m = a;
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
        os << "]\n";
    }
    return os.str();
}

}  // namespace cf::cech
