#pragma once

#include "cgh/error.hpp"
#include "cgh/padic.hpp"
#include "cgh/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cgh {

// Dense row-major matrix over a ring R with the same helper interface as
// Poly and LaurentSeries.
template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& proto) : r_(rows), c_(cols), proto_(zero_like(proto)), a_(rows * cols, zero_like(proto)) {}
    static Matrix identity(std::size_t n, const R& proto) {
        Matrix m(n, n, proto);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(proto);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<R>>& rows, const R& proto) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), proto);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.c_) throw InputError("ragged matrix rows");
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const R& proto() const { return proto_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::vector<R> row(std::size_t i) const { return std::vector<R>(a_.begin() + static_cast<std::ptrdiff_t>(i * c_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_)); }

    Matrix transpose() const {
        Matrix t(c_, r_, proto_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw InputError("matrix shape mismatch");
        Matrix m(a.r_, b.c_, a.proto_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += a(i, k) * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != c_) throw InputError("matrix-vector shape mismatch");
        std::vector<R> out(r_, proto_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    template <class S, class F>
    Matrix<S> map(const S& proto, F f) const {
        Matrix<S> m(r_, c_, proto);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    R proto_{};
    std::vector<R> a_;
};

// Solves M X = B by Gaussian elimination. The pivot in each column is the
// entry with the best pivot_score: any nonzero rational, or the entry of
// minimal valuation for p-adics. Throws DomainError if M is singular.
template <class R>
Matrix<R> solve_linear(Matrix<R> m, Matrix<R> b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.rows() != n) throw InputError("solve_linear needs a square system");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        int score = 1 << 30;
        for (std::size_t i = col; i < n; ++i) {
            int s = pivot_score(m(i, col));
            if (s < score) {
                score = s;
                best = i;
            }
        }
        if (best == n || !is_invertible(m(best, col))) throw DomainError("singular matrix");
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(best, j), m(col, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(best, j), b(col, j));
        }
        R inv = one_like(m.proto()) / m(col, col);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(m(i, col))) continue;
            R f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(col, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        R inv = one_like(m.proto()) / m(i, i);
        for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) *= inv;
    }
    return b;
}

template <class R>
std::vector<R> solve_linear(const Matrix<R>& m, const std::vector<R>& rhs) {
    Matrix<R> b(rhs.size(), 1, m.proto());
    for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
    Matrix<R> x = solve_linear(m, b);
    std::vector<R> out;
    for (std::size_t i = 0; i < rhs.size(); ++i) out.push_back(x(i, 0));
    return out;
}

template <class R>
Matrix<R> inverse(const Matrix<R>& m) {
    return solve_linear(m, Matrix<R>::identity(m.rows(), m.proto()));
}

template <class R>
R determinant(Matrix<R> m) {
    const std::size_t n = m.rows();
    R det = one_like(m.proto());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        int score = 1 << 30;
        for (std::size_t i = col; i < n; ++i) {
            int s = pivot_score(m(i, col));
            if (s < score) {
                score = s;
                best = i;
            }
        }
        if (best == n) return zero_like(m.proto());
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(best, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        R inv = one_like(m.proto()) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            R f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

// Coefficients of det(T*I - M), constant term first.
template <class R>
std::vector<R> charpoly(const Matrix<R>& m);

// Basis of the right kernel of a rational matrix (vectors v with M v = 0).
std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m);

// True when the row spans of A and B agree modulo p^N. Rows are first
// rescaled by powers of p so the spans are read as saturated lattices, then
// each reduced basis is tested for membership against the other.
bool span_equal_mod_pN(const Matrix<PadicNumber>& a, const Matrix<PadicNumber>& b, int N);

// Echelon basis of the row span over Q_p with full minimal-valuation
// pivoting; each returned row has a 1 in its pivot column and zeros in the
// other pivot columns, so the rows form a saturated lattice basis.
std::pair<Matrix<PadicNumber>, std::vector<std::size_t>> saturated_row_basis(const Matrix<PadicNumber>& a);

std::string to_string(const Matrix<Rational>& m);
std::string to_string(const Matrix<PadicNumber>& m);

// Berkowitz recursion; it needs no division, so p-adic precision is only
// lost to the valuations of the entries.
template <class R>
std::vector<R> charpoly(const Matrix<R>& m) {
    const std::size_t n = m.rows();
    const R& z = m.proto();
    // c holds coefficients of the characteristic polynomial of the leading
    // principal k x k block, highest degree first.
    std::vector<R> c{one_like(z)};
    for (std::size_t k = 0; k < n; ++k) {
        // Toeplitz column for block k+1: [1, -a_kk, -R C, -R A C, ...]
        std::vector<R> col;
        col.push_back(one_like(z));
        col.push_back(-m(k, k));
        std::vector<R> v(k, z); // v = C, the column above the diagonal
        for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
        for (std::size_t step = 0; step < k; ++step) {
            R acc = z;
            for (std::size_t j = 0; j < k; ++j) acc += m(k, j) * v[j];
            col.push_back(-acc);
            std::vector<R> w(k, z);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) w[i] += m(i, j) * v[j];
            v = std::move(w);
        }
        std::vector<R> next(k + 2, z);
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j)
                if (i - j < col.size()) next[i] += col[i - j] * c[j];
        c = std::move(next);
    }
    std::vector<R> out(c.rbegin(), c.rend());
    return out;
}

} // namespace cgh
