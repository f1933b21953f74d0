#ifndef LK_MATRIX_HPP
#define LK_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lk/scalar.hpp"

namespace lk {

/// Dense matrix over the exact scalar field.  Row-major; desk-scale sizes.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Mat identity(size_t n);
    static Mat from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Mat from_cols(const std::vector<std::vector<Scalar>>& cols);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Scalar& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    std::vector<Scalar> col(size_t j) const;
    std::vector<Scalar> row(size_t i) const;

    Mat transpose() const;
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    /// Reduced row echelon form (leftmost pivots); returns pivot columns.
    std::vector<size_t> rref();
    size_t rank() const;
    /// Basis of the right kernel, as columns.
    std::vector<std::vector<Scalar>> kernel_basis() const;
    /// Pivot columns of the column space (leftmost-pivot convention).
    std::vector<size_t> column_pivots() const;
    /// Solves A x = b exactly; nullopt if inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    Mat inverse() const;  // throws if singular

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

std::vector<Scalar> operator*(const Scalar& c, std::vector<Scalar> v);
std::vector<Scalar> operator+(std::vector<Scalar> a, const std::vector<Scalar>& b);
std::vector<Scalar> operator-(std::vector<Scalar> a, const std::vector<Scalar>& b);
bool is_zero_vec(const std::vector<Scalar>& v);

}  // namespace lk

#endif
