#include "lk/matrix.hpp"

#include <stdexcept>

namespace lk {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("Mat: ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<std::vector<Scalar>>& cols) {
    size_t c = cols.size(), r = c ? cols[0].size() : 0;
    Mat m(r, c);
    for (size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw std::invalid_argument("Mat: ragged cols");
        for (size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Scalar> Mat::col(size_t j) const {
    std::vector<Scalar> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Scalar> Mat::row(size_t i) const {
    std::vector<Scalar> v(c_);
    for (size_t j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Mat: size mismatch in *");
    Mat m(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Mat: size mismatch in +");
    Mat m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Mat: size mismatch in -");
    Mat m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (v.size() != c_) throw std::invalid_argument("Mat: size mismatch in apply");
    std::vector<Scalar> out(r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<size_t> Mat::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
        size_t sel = row;
        while (sel < r_ && at(sel, col).is_zero()) ++sel;
        if (sel == r_) continue;
        if (sel != row)
            for (size_t j = 0; j < c_; ++j) std::swap(at(sel, j), at(row, j));
        Scalar inv = at(row, col).inverse();
        for (size_t j = col; j < c_; ++j) at(row, j) = at(row, j) * inv;
        for (size_t i = 0; i < r_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar f = at(i, col);
            for (size_t j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Mat::rank() const {
    Mat m(*this);
    return m.rref().size();
}

std::vector<std::vector<Scalar>> Mat::kernel_basis() const {
    Mat m(*this);
    auto pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(c_);
        v[free] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<size_t> Mat::column_pivots() const {
    Mat m(*this);
    return m.rref();
}

std::optional<std::vector<Scalar>> Mat::solve(const std::vector<Scalar>& b) const {
    if (b.size() != r_) throw std::invalid_argument("Mat: size mismatch in solve");
    Mat aug(r_, c_ + 1);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(c_);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, c_);
    return x;
}

Mat Mat::inverse() const {
    if (r_ != c_) throw std::invalid_argument("Mat: inverse of non-square");
    Mat aug(r_, 2 * c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = Scalar(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != r_ || pivots.back() != r_ - 1)
        throw std::domain_error("Mat: singular");
    Mat inv(r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
    return inv;
}

std::vector<Scalar> operator*(const Scalar& c, std::vector<Scalar> v) {
    for (auto& x : v) x = c * x;
    return v;
}

std::vector<Scalar> operator+(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec: size mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<Scalar> operator-(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec: size mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

bool is_zero_vec(const std::vector<Scalar>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace lk
