#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace cf::cech {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Dense row-major matrix. */
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& b) const {
        Matrix r(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
            }
        return r;
    }
    std::vector<T> operator*(const std::vector<T>& v) const {
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
        return r;
    }
    bool operator==(const Matrix& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_; }
    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

/* U * A * V = D, D diagonal with d1 | d2 | ... (all >= 0), U and V unimodular. */
struct SNFResult {
    IntMatrix U, V, D;
    IntMatrix Uinv, Vinv;
    std::vector<Int> diag; /* nonzero diagonal entries */
    std::size_t rank() const { return diag.size(); }
};

SNFResult smith(const IntMatrix& a);

/* Rank over Q. */
std::size_t rank(const IntMatrix& a);

Int determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

}  // namespace cf::cech
