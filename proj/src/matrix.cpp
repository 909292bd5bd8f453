#include "cgh/matrix.hpp"

#include <algorithm>

namespace cgh {

std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m0) {
    Matrix<Rational> m = m0;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(m(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<Matrix<PadicNumber>, std::vector<std::size_t>> saturated_row_basis(const Matrix<PadicNumber>& a) {
    Matrix<PadicNumber> m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<bool> row_used(rows, false), col_used(cols, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (;;) {
        int best = 1 << 30;
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_used[i]) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_used[j]) continue;
                int s = pivot_score(m(i, j));
                if (s < best) {
                    best = s;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi == rows) break;
        PadicNumber inv = m(bi, bj).inverse();
        for (std::size_t j = 0; j < cols; ++j) m(bi, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == bi || m(i, bj).is_zero()) continue;
            PadicNumber f = m(i, bj);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(bi, j);
        }
        row_used[bi] = col_used[bj] = true;
        pivots.emplace_back(bi, bj);
    }
    std::sort(pivots.begin(), pivots.end(), [](auto x, auto y) { return x.second < y.second; });
    Matrix<PadicNumber> out(pivots.size(), cols, m.proto());
    std::vector<std::size_t> pc;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        for (std::size_t j = 0; j < cols; ++j) out(k, j) = m(pivots[k].first, j);
        pc.push_back(pivots[k].second);
    }
    return {out, pc};
}

namespace {

bool contained_mod(const Matrix<PadicNumber>& basis, const std::vector<std::size_t>& pcols, const Matrix<PadicNumber>& other, int N) {
    for (std::size_t r = 0; r < other.rows(); ++r) {
        std::vector<PadicNumber> v = other.row(r);
        for (std::size_t k = 0; k < basis.rows(); ++k) {
            PadicNumber f = v[pcols[k]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis(k, j);
        }
        for (const auto& e : v) {
            if (e.precision() < N) throw PrecisionError("span comparison needs " + std::to_string(N) + " digits but only " + std::to_string(e.precision()) + " are known");
            if (!e.with_precision(N).is_zero()) return false;
        }
    }
    return true;
}

} // namespace

bool span_equal_mod_pN(const Matrix<PadicNumber>& a, const Matrix<PadicNumber>& b, int N) {
    if (a.cols() != b.cols()) throw InputError("span comparison of different ambient dimensions");
    auto [sa, ca] = saturated_row_basis(a);
    auto [sb, cb] = saturated_row_basis(b);
    if (sa.rows() != sb.rows()) return false;
    return contained_mod(sa, ca, sb, N) && contained_mod(sb, cb, sa, N);
}

std::string to_string(const Matrix<Rational>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).get_str();
        out += "]";
    }
    return out + "]";
}

std::string to_string(const Matrix<PadicNumber>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
        out += "]\n";
    }
    return out;
}

} // namespace cgh
