#pragma once

#include "gkmod/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gkmod {

// Dense row-major matrix over exact rationals. Zero-row and zero-column
// matrices are legal; they represent maps to or from the zero space.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;

    // Rows [r0, r1) as a new matrix; likewise for columns.
    Matrix row_slice(std::size_t r0, std::size_t r1) const;
    Matrix col_slice(std::size_t c0, std::size_t c1) const;

    // Blocks side by side (equal row counts) / stacked (equal column counts).
    static Matrix hstack(const std::vector<Matrix>& blocks);
    static Matrix vstack(const std::vector<Matrix>& blocks);

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Reduced row echelon form: pivot = leftmost nonzero entry of its row, scaled
// to 1, pivot columns cleared. Pivot rows are chosen first-come, so the result
// is canonical.
struct Echelon {
    Matrix mat;
    std::vector<std::size_t> pivots;  // pivot column of row i
};
Echelon rref(Matrix m);
Echelon rref_serial(Matrix m);  // single-threaded reference, used by tests and bench

std::size_t rank(const Matrix& m);

// Kernel basis read off the echelon form: one vector per free column f, with a
// 1 at f and the negated echelon entries at the pivot coordinates. Columns of
// `kernel` are the basis vectors, ordered by increasing f.
struct RankKernel {
    std::size_t rank;
    Matrix kernel;
};
RankKernel rank_and_kernel(const Matrix& m);

// An exact solution of a x = b with all free variables set to zero, or nullopt
// when the system is inconsistent. b may have several columns. Throws on a row
// count mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Echelonize the subspace spanned by the columns of `basis` inside an ambient
// space. `complement` lists the non-pivot coordinates; `projection` maps the
// ambient space onto those coordinates with the subspace as its kernel.
// Throws if the input vectors are linearly dependent.
struct QuotientBasis {
    std::vector<std::size_t> complement;
    Matrix projection;  // complement.size() x ambient_dim
};
QuotientBasis quotient_basis(const Matrix& basis, std::size_t ambient_dim);

// Right inverse of quotient_basis(...).projection: standard basis columns at
// the complement coordinates.
Matrix complement_section(const std::vector<std::size_t>& complement, std::size_t ambient_dim);

}  // namespace gkmod
