#include "cdim/matrix.hpp"

#include <stdexcept>

namespace cdim {

Matrix Matrix::from_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QVec Matrix::row(size_t i) const {
    QVec r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

QVec Matrix::col(size_t j) const {
    QVec c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = 1 / m.at(r, c);
        for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(const Matrix& m) {
    Matrix copy = m;
    return rref(copy).size();
}

std::vector<QVec> kernel_basis(const Matrix& m) {
    Matrix red = m;
    std::vector<size_t> pivots = rref(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<QVec> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVec v(m.cols(), Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    Matrix a = m;
    size_t n = a.rows();
    Rational d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a.at(p, c) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Rational inv = 1 / a.at(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            Rational f = a.at(i, c) * inv;
            for (size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

size_t affine_dim(const std::vector<QVec>& points) {
    if (points.empty()) throw std::invalid_argument("affine_dim of empty set");
    std::vector<QVec> diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    if (diffs.empty()) return 0;
    return rank(Matrix::from_rows(diffs));
}

}  // namespace cdim
