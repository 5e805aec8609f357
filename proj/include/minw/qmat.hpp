#pragma once

#include <vector>
#include "minw/rat.hpp"

namespace minw {

using QVec = std::vector<Rat>;

/// Dense matrix over Q. Sizes here stay small (a few hundred rows at most),
/// so plain fraction-based Gaussian elimination is enough.
class QMat {
public:
    QMat() = default;
    QMat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows, QVec(cols, Rat(0))) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Rat& operator()(size_t i, size_t j) { return a_[i][j]; }
    const Rat& operator()(size_t i, size_t j) const { return a_[i][j]; }
    QVec& row(size_t i) { return a_[i]; }
    const QVec& row(size_t i) const { return a_[i]; }

    static QMat identity(size_t n);

    QMat operator*(const QMat& o) const;
    QVec apply(const QVec& v) const;

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref();

    size_t rank() const;
    QMat inverse() const;  // throws std::runtime_error if singular
    std::vector<QVec> nullspace() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<QVec> a_;
};

/// Solves A x = b. Returns false if inconsistent; otherwise x is the particular
/// solution with all free variables set to zero and *null_basis (if non-null)
/// receives a basis of the homogeneous solution space.
bool qmat_solve(const QMat& A, const QVec& b, QVec& x, std::vector<QVec>* null_basis = nullptr);

}  // namespace minw
