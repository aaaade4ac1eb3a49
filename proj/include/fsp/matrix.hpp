#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fsp/field.hpp"

namespace fsp {

// Dense row-major matrix over a Field. 0 x n and n x 0 are ordinary values.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);  // zero matrix
    static Matrix identity(Field f, std::size_t n);
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
    static Matrix from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& entries);
    static Matrix from_rows(Field f, const std::vector<std::vector<long long>>& rows);

    Field field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    bool is_zero() const;
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const std::vector<Scalar>& entries() const { return a_; }

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix row_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, c_); }
    Matrix col_range(std::size_t c0, std::size_t nc) const { return block(0, c0, r_, nc); }
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix operator*(const Matrix& b) const;
    Matrix operator-() const;

    // "<r>x<c>" header then one line per row
    std::string str() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.f_ == b.f_ && a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    // deterministic order: shape, then entries
    friend bool operator<(const Matrix& a, const Matrix& b);

private:
    Field f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Scalar& s, const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns are the canonical null-space basis: one column per free variable,
// 1 in that variable, 0 in the other free variables.
Matrix kernel_basis(const Matrix& m);
// Canonical particular solution of a X = b (free variables 0), or nothing.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
// Columns of m at the rref pivot positions: a basis of the column space.
Matrix column_space(const Matrix& m);
// Rows spanning the annihilator of the column space: Q with Q m = 0 and
// rank Q = m.rows - rank m.
Matrix left_annihilator(const Matrix& m);
// Canonical basis of the column span (transpose of the nonzero rows of the
// rref of the transpose). Equal spans give equal matrices.
Matrix canonical_span(const Matrix& m);

// Matrix constructors for the block pictures: zero row above / below I_n,
// zero column right / left of I_n.
Matrix i_up(Field f, std::size_t n);
Matrix i_down(Field f, std::size_t n);
Matrix i_right(Field f, std::size_t n);
Matrix i_left(Field f, std::size_t n);
// Companion matrix of p^s: ones on the subdiagonal, last column -coeffs.
Matrix companion(const Poly& p, int s);
Matrix companion_of(const Poly& m);  // same layout for an arbitrary monic m
Matrix jordan_plus(Field f, std::size_t n);

Matrix eval_poly(const Poly& p, const Matrix& m);
Poly min_poly(const Matrix& m);
Matrix power(const Matrix& m, unsigned e);

}  // namespace fsp
