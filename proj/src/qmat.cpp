#include "minw/qmat.hpp"

#include <stdexcept>

namespace minw {

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("QMat: size mismatch");
    QMat m(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            if (a_[i][k] == 0) continue;
            for (size_t j = 0; j < o.c_; ++j)
                if (o.a_[k][j] != 0) m(i, j) += a_[i][k] * o.a_[k][j];
        }
    return m;
}

QVec QMat::apply(const QVec& v) const {
    if (v.size() != c_) throw std::invalid_argument("QMat: size mismatch");
    QVec w(r_, Rat(0));
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            if (a_[i][j] != 0 && v[j] != 0) w[i] += a_[i][j] * v[j];
    return w;
}

std::vector<size_t> QMat::rref() {
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t col = 0; col < c_ && lead < r_; ++col) {
        size_t piv = lead;
        while (piv < r_ && a_[piv][col] == 0) ++piv;
        if (piv == r_) continue;
        std::swap(a_[piv], a_[lead]);
        Rat inv = 1 / a_[lead][col];
        for (size_t j = col; j < c_; ++j) a_[lead][j] *= inv;
        for (size_t i = 0; i < r_; ++i) {
            if (i == lead || a_[i][col] == 0) continue;
            Rat f = a_[i][col];
            for (size_t j = col; j < c_; ++j) a_[i][j] -= f * a_[lead][j];
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

size_t QMat::rank() const {
    QMat m = *this;
    return m.rref().size();
}

QMat QMat::inverse() const {
    if (r_ != c_) throw std::invalid_argument("QMat: not square");
    QMat aug(r_, 2 * c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug(i, j) = a_[i][j];
        aug(i, c_ + i) = 1;
    }
    auto piv = aug.rref();
    if (piv.size() != r_ || piv.back() != r_ - 1) throw std::runtime_error("QMat: singular");
    QMat inv(r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
}

std::vector<QVec> QMat::nullspace() const {
    QMat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (size_t free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        QVec v(c_, Rat(0));
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool qmat_solve(const QMat& A, const QVec& b, QVec& x, std::vector<QVec>* null_basis) {
    QMat aug(A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == A.cols()) return false;  // inconsistent
    x.assign(A.cols(), Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, A.cols());
    if (null_basis) {
        std::vector<bool> is_pivot(A.cols(), false);
        for (size_t p : pivots) is_pivot[p] = true;
        null_basis->clear();
        for (size_t free = 0; free < A.cols(); ++free) {
            if (is_pivot[free]) continue;
            QVec v(A.cols(), Rat(0));
            v[free] = 1;
            for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug(k, free);
            null_basis->push_back(std::move(v));
        }
    }
    return true;
}

}  // namespace minw
