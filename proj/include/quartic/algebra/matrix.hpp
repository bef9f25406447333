#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quartic/algebra/error.hpp"
#include "quartic/algebra/field.hpp"

namespace quartic {

/// Dense row-major matrix over a field.
template <Field F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0L)) {}
    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }
    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw PreconditionError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1L);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<F>& data() const { return a_; }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
    }
    std::vector<F> column(std::size_t j) const {
        std::vector<F> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix m(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw PreconditionError("matrix dimensions do not match");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const F& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
            }
        return r;
    }
    friend std::vector<F> operator*(const Matrix& x, const std::vector<F>& v) {
        if (x.cols_ != v.size()) throw PreconditionError("matrix-vector dimensions do not match");
        std::vector<F> r(x.rows_, F(0L));
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) {
                if (!v[j].is_zero()) r[i] = r[i] + x(i, j) * v[j];
            }
        return r;
    }
    friend Matrix operator*(const Matrix& x, const F& s) {
        Matrix r = x;
        for (auto& e : r.a_) e = e * s;
        return r;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> a_;
};

/// Row echelon form obtained by fraction-free (Bareiss) elimination.
template <Field F>
struct Echelon {
    Matrix<F> reduced;                  ///< first `rank` rows are the echelon rows
    std::vector<std::size_t> pivots;    ///< pivot column of each echelon row
    std::size_t rank() const { return pivots.size(); }
};

template <Field F>
Echelon<F> echelon(Matrix<F> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    F prev(1L);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const F piv = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const F f = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = (piv * m(i, j) - f * m(r, j)) / prev;
            m(i, c) = F(0L);
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
    return echelon(m).rank();
}

/// Nullspace of `m` with its rank; rank + basis.size() == m.cols().
template <Field F>
struct Kernel {
    std::size_t rank = 0;
    std::vector<std::vector<F>> basis;
};

template <Field F>
Kernel<F> kernel(const Matrix<F>& m) {
    const auto ech = echelon(m);
    const std::size_t n = m.cols();
    const std::size_t r = ech.rank();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    Kernel<F> out;
    out.rank = r;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> x(n, F(0L));
        x[free] = F(1L);
        for (std::size_t k = r; k-- > 0;) {
            const std::size_t pc = ech.pivots[k];
            F acc(0L);
            for (std::size_t j = pc + 1; j < n; ++j) {
                if (!x[j].is_zero()) acc = acc + ech.reduced(k, j) * x[j];
            }
            x[pc] = -acc / ech.reduced(k, pc);
        }
        out.basis.push_back(std::move(x));
    }
    return out;
}

/// Determinant by Bareiss elimination.
template <Field F>
F determinant(Matrix<F> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    if (n == 0) return F(1L);
    F prev(1L);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return F(0L);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Adjugate (transposed cofactor matrix): m * adj(m) = det(m) * I.
template <Field F>
Matrix<F> adjugate(const Matrix<F>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw PreconditionError("adjugate of a non-square matrix");
    Matrix<F> adj(n, n);
    if (n == 1) {
        adj(0, 0) = F(1L);
        return adj;
    }
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rs.clear();
            cs.clear();
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) rs.push_back(k);
                if (k != j) cs.push_back(k);
            }
            F cof = determinant(m.submatrix(rs, cs));
            adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

/// Solves the square system m x = b; throws GeneralPositionError when m is
/// singular.
template <Field F>
std::vector<F> solve(const Matrix<F>& m, const std::vector<F>& b) {
    const std::size_t n = m.rows();
    if (n != m.cols() || b.size() != n) throw PreconditionError("solve needs a square system");
    Matrix<F> aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = -b[i];
    }
    auto k = kernel(aug);
    if (k.rank != n || k.basis.size() != 1 || k.basis[0][n].is_zero()) {
        throw GeneralPositionError("singular linear system");
    }
    const F s = k.basis[0][n].inv();
    std::vector<F> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = k.basis[0][i] * s;
    return x;
}

}  // namespace quartic
