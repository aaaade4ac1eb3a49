#include "fsp/matrix.hpp"

#include <algorithm>

#include "fsp/error.hpp"

namespace fsp {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), r_(rows), c_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& entries) {
    if (entries.size() != rows * cols) fail("DimensionMismatch", "entry count does not match shape");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.a_[i] = f.from_int(entries[i]);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    std::vector<long long> flat;
    for (auto& r : rows) {
        if (r.size() != c) fail("DimensionMismatch", "ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_ints(f, rows.size(), c, flat);
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > r_ || c0 + nc > c_) fail("DimensionMismatch", "block out of range");
    Matrix b(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix b(f_, r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = (*this)(i, idx[j]);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    check_same(f_, m.f_);
    if (r0 + m.r_ > r_ || c0 + m.c_ > c_) fail("DimensionMismatch", "block out of range");
    for (std::size_t i = 0; i < m.r_; ++i)
        for (std::size_t j = 0; j < m.c_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::operator+(const Matrix& b) const {
    check_same(f_, b.f_);
    if (r_ != b.r_ || c_ != b.c_) fail("DimensionMismatch", "sum of differently shaped matrices");
    Matrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + b.a_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& b) const {
    check_same(f_, b.f_);
    if (r_ != b.r_ || c_ != b.c_) fail("DimensionMismatch", "difference of differently shaped matrices");
    Matrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - b.a_[i];
    return s;
}

Matrix Matrix::operator-() const {
    Matrix s = *this;
    for (auto& x : s.a_) x = -x;
    return s;
}

Matrix Matrix::operator*(const Matrix& b) const {
    check_same(f_, b.f_);
    if (c_ != b.r_)
        fail("DimensionMismatch", "product " + std::to_string(r_) + "x" + std::to_string(c_) + " * " +
                                      std::to_string(b.r_) + "x" + std::to_string(b.c_));
    Matrix p(f_, r_, b.c_);
    if (f_.is_prime()) {
        const std::uint64_t q = f_.p();
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < c_; ++k) acc = (acc + std::uint64_t((*this)(i, k).residue()) * b(k, j).residue()) % q;
                p(i, j) = Scalar::from_residue(f_.p(), acc);
            }
        return p;
    }
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j) p(i, j) = p(i, j) + x * b(k, j);
        }
    return p;
}

std::string Matrix::str() const {
    std::string out = std::to_string(r_) + "x" + std::to_string(c_) + "\n";
    if (c_ == 0) return out;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) {
            if (j) out += ' ';
            out += (*this)(i, j).str();
        }
        out += '\n';
    }
    return out;
}

bool operator<(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_;
    if (a.c_ != b.c_) return a.c_ < b.c_;
    return a.a_ < b.a_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix scalar_mul(const Scalar& s, const Matrix& m) {
    Matrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
    return r;
}

Matrix transpose(const Matrix& m) { return m.transpose(); }

Matrix hstack(const Matrix& a, const Matrix& b) {
    check_same(a.field(), b.field());
    if (a.rows() != b.rows()) fail("DimensionMismatch", "hstack needs equal row counts");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    check_same(a.field(), b.field());
    if (a.cols() != b.cols()) fail("DimensionMismatch", "vstack needs equal column counts");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix hstack(const std::vector<Matrix>& parts, Field f, std::size_t rows) {
    Matrix m(f, rows, 0);
    for (auto& p : parts) m = hstack(m, p);
    return m;
}

Matrix vstack(const std::vector<Matrix>& parts, Field f, std::size_t cols) {
    Matrix m(f, 0, cols);
    for (auto& p : parts) m = vstack(m, p);
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    check_same(a.field(), b.field());
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// ---------------------------------------------------------------- elimination

namespace {

Rref rref_prime(const Matrix& m) {
    const std::uint32_t p = m.field().p();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::uint32_t> a(R * C);
    for (std::size_t i = 0; i < R * C; ++i) a[i] = m.entries()[i].residue();
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && a[piv * C + col] == 0) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[row * C + j]);
        std::uint64_t s = inv_mod(a[row * C + col], p);
        for (std::size_t j = col; j < C; ++j) a[row * C + j] = static_cast<std::uint32_t>(a[row * C + j] * s % p);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row) continue;
            std::uint64_t f = a[i * C + col];
            if (!f) continue;
            std::uint64_t nf = p - f;
            for (std::size_t j = col; j < C; ++j)
                a[i * C + j] = static_cast<std::uint32_t>((a[i * C + j] + nf * a[row * C + j]) % p);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = Matrix(m.field(), R, C);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) out.reduced(i, j) = Scalar::from_residue(p, a[i * C + j]);
    return out;
}

Rref rref_generic(const Matrix& m) {
    Matrix a = m;
    const std::size_t R = m.rows(), C = m.cols();
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && a(piv, col).is_zero()) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (std::size_t j = 0; j < C; ++j) std::swap(a(piv, j), a(row, j));
        Scalar s = a(row, col).inv();
        for (std::size_t j = col; j < C; ++j) a(row, j) = a(row, j) * s;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Scalar f = a(i, col);
            for (std::size_t j = col; j < C; ++j) a(i, j) = a(i, j) - f * a(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = std::move(a);
    return out;
}

}  // namespace

Rref rref(const Matrix& m) { return m.field().is_prime() ? rref_prime(m) : rref_generic(m); }

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    Rref r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix k(m.field(), n, n - r.rank);
    std::size_t col = 0;
    for (std::size_t fcol = 0; fcol < n; ++fcol) {
        if (is_pivot[fcol]) continue;
        k(fcol, col) = m.field().one();
        for (std::size_t i = 0; i < r.rank; ++i) k(r.pivots[i], col) = -r.reduced(i, fcol);
        ++col;
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    check_same(a.field(), b.field());
    if (a.rows() != b.rows()) fail("DimensionMismatch", "solve: a and b need equal row counts");
    Rref r = rref(hstack(a, b));
    if (r.rank > 0 && r.pivots[r.rank - 1] >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) fail("NotSquare", std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix column_space(const Matrix& m) { return m.select_cols(rref(m).pivots); }

Matrix left_annihilator(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

Matrix canonical_span(const Matrix& m) {
    Rref r = rref(m.transpose());
    return r.reduced.row_range(0, r.rank).transpose();
}

// ---------------------------------------------------------------- constructors

Matrix i_up(Field f, std::size_t n) {
    Matrix m(f, n + 1, n);
    for (std::size_t i = 0; i < n; ++i) m(i + 1, i) = f.one();
    return m;
}

Matrix i_down(Field f, std::size_t n) {
    Matrix m(f, n + 1, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix i_right(Field f, std::size_t n) {
    Matrix m(f, n, n + 1);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix i_left(Field f, std::size_t n) {
    Matrix m(f, n, n + 1);
    for (std::size_t i = 0; i < n; ++i) m(i, i + 1) = f.one();
    return m;
}

Matrix companion_of(const Poly& mp) {
    if (!mp.is_monic() || mp.degree() < 1) fail("InvalidArgument", "companion matrix needs a monic polynomial of degree >= 1");
    const std::size_t n = mp.degree();
    Matrix m(mp.field(), n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = mp.field().one();
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -mp.coeff(static_cast<int>(i));
    return m;
}

Matrix companion(const Poly& p, int s) {
    if (s < 1) fail("InvalidArgument", "exponent must be positive");
    if (!p.is_monic()) fail("InvalidArgument", "polynomial must be monic");
    if (!is_irreducible(p)) fail("ReducibleModulus", p.str() + " is not irreducible over " + p.field().str());
    return companion_of(poly_power(p, s));
}

Matrix jordan_plus(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = f.one();
    return m;
}

Matrix eval_poly(const Poly& p, const Matrix& m) {
    if (!m.is_square()) fail("NotSquare", "polynomial evaluation needs a square matrix");
    Matrix r(m.field(), m.rows(), m.cols());
    Matrix id = Matrix::identity(m.field(), m.rows());
    for (int i = p.degree(); i >= 0; --i) r = r * m + scalar_mul(p.coeff(i), id);
    return r;
}

Matrix power(const Matrix& m, unsigned e) {
    Matrix r = Matrix::identity(m.field(), m.rows());
    for (unsigned i = 0; i < e; ++i) r = r * m;
    return r;
}

Poly min_poly(const Matrix& m) {
    if (!m.is_square()) fail("NotSquare", "minimal polynomial needs a square matrix");
    const Field f = m.field();
    const std::size_t n = m.rows();
    auto vec = [&](const Matrix& x) {
        Matrix v(f, n * n, 1);
        for (std::size_t i = 0; i < n * n; ++i) v(i, 0) = x.entries()[i];
        return v;
    };
    Matrix powers(f, n * n, 0);
    Matrix cur = Matrix::identity(f, n);
    for (std::size_t k = 0; k <= n; ++k) {
        Matrix v = vec(cur);
        if (auto x = solve(powers, v)) {
            std::vector<Scalar> c(k + 1, f.zero());
            for (std::size_t i = 0; i < k; ++i) c[i] = -(*x)(i, 0);
            c[k] = f.one();
            return Poly(f, std::move(c));
        }
        powers = hstack(powers, v);
        cur = cur * m;
    }
    fail("Internal", "minimal polynomial degree exceeded n");
}

}  // namespace fsp
