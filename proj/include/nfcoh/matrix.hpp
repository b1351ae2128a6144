#ifndef NFCOH_MATRIX_HPP
#define NFCOH_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>
#include "nfcoh/arith.hpp"

namespace nfc {

template <class T>
class Matrix {
    size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
  public:
    Matrix() = default;
    Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, T(0)) {}
    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; i++) m(i, i) = 1;
        return m;
    }
    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    T & operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    T const & operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    std::vector<T> row(size_t i) const {
        return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    }
    void set_row(size_t i, std::vector<T> const & v) {
        assert(v.size() == c_);
        for (size_t j = 0; j < c_; j++) (*this)(i, j) = v[j];
    }
    void append_row(std::vector<T> const & v) {
        if (r_ == 0 && c_ == 0) c_ = v.size();
        assert(v.size() == c_);
        a_.insert(a_.end(), v.begin(), v.end());
        r_++;
    }
    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < c_; k++) std::swap((*this)(i, k), (*this)(j, k));
    }
    Matrix transpose() const {
        Matrix t(c_, r_);
        for (size_t i = 0; i < r_; i++)
            for (size_t j = 0; j < c_; j++) t(j, i) = (*this)(i, j);
        return t;
    }
    bool operator==(Matrix const & o) const {
        return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
    }
    bool operator!=(Matrix const & o) const { return !(*this == o); }
};

using ZMatrix = Matrix<Z>;
using QMatrix = Matrix<Q>;
using ZVec = std::vector<Z>;
using QVec = std::vector<Q>;

template <class T>
Matrix<T> operator*(Matrix<T> const & a, Matrix<T> const & b)
{
    assert(a.cols() == b.rows());
    Matrix<T> c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++)
        for (size_t k = 0; k < a.cols(); k++) {
            if (a(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); j++) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

/* row vector times matrix */
template <class T>
std::vector<T> operator*(std::vector<T> const & v, Matrix<T> const & m)
{
    assert(v.size() == m.rows());
    std::vector<T> r(m.cols(), T(0));
    for (size_t i = 0; i < m.rows(); i++) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < m.cols(); j++) r[j] += v[i] * m(i, j);
    }
    return r;
}

QMatrix to_q(ZMatrix const & m);

Z det(ZMatrix m);                 // Bareiss
Q det(QMatrix const & m);
QMatrix inverse(QMatrix const & m);   // throws on singular
size_t rank(QMatrix m);
/* solve x*A = b for a row vector x; false if inconsistent */
bool solve_left(QMatrix const & A, QVec const & b, QVec & x);

/* Hermite normal form of the lattice spanned by the rows: upper echelon,
 * positive pivots, entries above a pivot reduced into [0, pivot) */
ZMatrix hnf(ZMatrix const & rows);
/* same, square, for a full-rank lattice known to contain D*Z^n */
ZMatrix hnf_mod(ZMatrix const & rows, Z const & D);
/* nonzero HNF rows H with H = U*rows */
ZMatrix hnf_transform(ZMatrix const & rows, ZMatrix & U);
/* integer x with x*A = b, false if none */
bool solve_int_left(ZMatrix const & A, ZVec const & b, ZVec & x);
/* rows spanning { x : x*A = 0 } over Z */
ZMatrix left_kernel(ZMatrix const & A);

/* Smith form of Z^n / rowspan(A) for A square nonsingular:
 * diag[i] and V with  e -> (e*V)_i mod diag[i]  an isomorphism onto the
 * product of Z/diag[i]; Vinv rows map back (unit vectors of the product
 * come from row i of Vinv) */
struct Smith {
    ZVec diag;
    ZMatrix V, Vinv;
};
Smith smith(ZMatrix const & A);

/* linear algebra over F_p, p a word-size prime */
using UMat = std::vector<std::vector<uint64_t>>;
/* basis of { x : x*A = 0 } */
UMat left_kernel_mod(UMat A, size_t nrows, size_t ncols, uint64_t p);
/* reduced row echelon basis of the row span, returns pivots */
UMat row_echelon_mod(UMat A, uint64_t p, std::vector<size_t> * pivots = nullptr);

}

#endif
