#include "gkmod/matrix.hpp"

#include <stdexcept>

namespace gkmod {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += x * o.at(k, j);
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
}

Matrix Matrix::row_slice(std::size_t r0, std::size_t r1) const {
    if (r0 > r1 || r1 > rows_) throw std::out_of_range("row slice out of range");
    Matrix s(r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.at(i - r0, j) = at(i, j);
    return s;
}

Matrix Matrix::col_slice(std::size_t c0, std::size_t c1) const {
    if (c0 > c1 || c1 > cols_) throw std::out_of_range("column slice out of range");
    Matrix s(rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j) s.at(i, j - c0) = at(i, j);
    return s;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) cols += b.cols();
    if (!blocks.empty()) rows = blocks.front().rows();
    for (const auto& b : blocks)
        if (b.rows() != rows) throw std::invalid_argument("hstack row count mismatch");
    Matrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, off + j) = b.at(i, j);
        off += b.cols();
    }
    return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) rows += b.rows();
    if (!blocks.empty()) cols = blocks.front().cols();
    for (const auto& b : blocks)
        if (b.cols() != cols) throw std::invalid_argument("vstack column count mismatch");
    Matrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

// Gauss-Jordan elimination. The pivot of each step is the first row with a
// nonzero entry in the current column, so identical inputs give identical
// echelon forms. Row elimination steps are independent of one another; the
// parallel variant distributes them and produces the same matrix bit for bit.
namespace {

Echelon rref_impl(Matrix m, bool parallel) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m.at(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) swap(m.at(r, j), m.at(p, j));
        if (m.at(r, c) != 1) {
            Scalar inv = 1 / m.at(r, c);
            m.at(r, c) = 1;
            for (std::size_t j = c + 1; j < cols; ++j) m.at(r, j) *= inv;
        }
#pragma omp parallel for schedule(static) if (parallel && rows >= 48)
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m.at(i, c)) == 0) continue;
            Scalar f = m.at(i, c);
            m.at(i, c) = 0;
            for (std::size_t j = c + 1; j < cols; ++j)
                if (sgn(m.at(r, j)) != 0) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

Echelon rref(Matrix m) { return rref_impl(std::move(m), true); }

Echelon rref_serial(Matrix m) { return rref_impl(std::move(m), false); }

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

RankKernel rank_and_kernel(const Matrix& m) {
    Echelon e = rref(m);
    const std::size_t cols = m.cols(), rk = e.pivots.size();
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pi < rk && e.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Matrix kernel(cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        kernel.at(free_cols[k], k) = 1;
        for (std::size_t i = 0; i < rk; ++i) kernel.at(e.pivots[i], k) = -e.mat.at(i, free_cols[k]);
    }
    return RankKernel{rk, std::move(kernel)};
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    Echelon e = rref(Matrix::hstack({a, b}));
    for (std::size_t c : e.pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(e.pivots[i], j) = e.mat.at(i, a.cols() + j);
    return x;
}

QuotientBasis quotient_basis(const Matrix& basis, std::size_t ambient_dim) {
    if (basis.cols() > 0 && basis.rows() != ambient_dim)
        throw std::invalid_argument("quotient_basis: vector length differs from ambient dimension");
    Echelon e = rref(basis.transpose());
    if (e.pivots.size() != basis.cols())
        throw std::invalid_argument("quotient_basis: input vectors are linearly dependent");
    std::vector<std::size_t> complement;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < ambient_dim; ++c) {
            if (pi < e.pivots.size() && e.pivots[pi] == c)
                ++pi;
            else
                complement.push_back(c);
        }
    }
    // Coordinates of a vector w modulo the subspace, in the basis of standard
    // vectors at the complement coordinates: read w at the pivot coordinates,
    // subtract the corresponding echelon rows.
    Matrix proj(complement.size(), ambient_dim);
    for (std::size_t row = 0; row < complement.size(); ++row) {
        std::size_t c = complement[row];
        proj.at(row, c) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) proj.at(row, e.pivots[i]) = -e.mat.at(i, c);
    }
    return QuotientBasis{std::move(complement), std::move(proj)};
}

Matrix complement_section(const std::vector<std::size_t>& complement, std::size_t ambient_dim) {
    Matrix s(ambient_dim, complement.size());
    for (std::size_t j = 0; j < complement.size(); ++j) s.at(complement[j], j) = 1;
    return s;
}

}  // namespace gkmod
