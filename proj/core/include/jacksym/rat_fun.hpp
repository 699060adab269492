#pragma once

#include <string>

#include "jacksym/alpha_poly.hpp"

namespace jacksym {

/// Rational function in alpha, kept in the canonical form
///   gcd(num, den) = 1, den primitive over the integers, leading
///   coefficient of den positive,
/// so equality of values is equality of representations.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const BigRat& c) : num_(c), den_(1) {} // NOLINT: scalars embed
    RatFun(long c) : num_(c), den_(1) {}          // NOLINT
    RatFun(const AlphaPoly& p) : num_(p), den_(1) {} // NOLINT: polynomials embed
    RatFun(AlphaPoly num, AlphaPoly den);

    static RatFun alpha() { return RatFun(AlphaPoly::alpha()); }

    const AlphaPoly& num() const { return num_; }
    const AlphaPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// True when the value is a polynomial in alpha with nonnegative
    /// integer coefficients.
    bool is_nonneg_int_poly() const {
        return den_.is_one() && num_.all_coeffs_nonneg_integers();
    }

    RatFun operator-() const;
    RatFun inverse() const;

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// Exact evaluation at alpha = a; throws SpecializationPole when the
    /// denominator vanishes there.
    BigRat eval(const BigRat& a) const;

    std::string to_string(const std::string& symbol = "alpha") const;
    std::string to_latex() const;

private:
    void normalize();

    AlphaPoly num_;
    AlphaPoly den_;
};

RatFun pow(const RatFun& base, long e);

} // namespace jacksym
