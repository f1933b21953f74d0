#ifndef LK_SCALAR_HPP
#define LK_SCALAR_HPP

#include <gmpxx.h>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lk {

/// Exact scalars: elements of the real multiquadratic field Q(sqrt2, sqrt3, ...).
///
/// A value is stored as a map  {square-free d >= 1  ->  rational coefficient},
/// meaning  sum_d  c_d * sqrt(d).  The key d = 1 is the rational part.  Square
/// roots of distinct square-free integers are Q-linearly independent, so this
/// representation is canonical once zero coefficients are dropped.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) { if (n != 0) parts_[1] = mpq_class(n); }
    Scalar(const mpq_class& q) { if (q != 0) parts_[1] = q; }
    Scalar(long num, long den);

    static Scalar sqrt_of(long n);              // sqrt(n), n >= 0, canonicalized
    static Scalar parse(const std::string& s);  // inverse of str()

    bool is_zero() const { return parts_.empty(); }
    bool is_rational() const;
    /// Rational part (throws if irrational terms are present and strict).
    mpq_class rational_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar inverse() const;  // throws std::domain_error on zero
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    bool operator==(const Scalar& o) const { return parts_ == o.parts_; }
    bool operator!=(const Scalar& o) const { return parts_ != o.parts_; }

    /// Exact sign (-1, 0, +1), decided by interval refinement with rational
    /// endpoints; never consults floating point.
    int sign() const;
    bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const;
    std::string str() const;

    /// Square-free tags (keys != 1) appearing in this value.
    std::set<long> tags() const;

    const std::map<long, mpq_class>& parts() const { return parts_; }

private:
    std::map<long, mpq_class> parts_;
    void prune();
};

/// A declared scalar field Q(tags...); used to validate documents.
struct ScalarField {
    std::set<long> tags;  // square-free integers, e.g. {2} for Q(sqrt2)

    bool contains(const Scalar& s) const;
    static ScalarField parse(const std::string& name);  // "Q", "Q(sqrt2)", "Q(sqrt2,sqrt3)"
    std::string str() const;
};

}  // namespace lk

#endif
