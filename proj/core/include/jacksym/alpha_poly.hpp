#pragma once

#include <string>
#include <vector>

#include "jacksym/rational.hpp"

namespace jacksym {

/// Univariate polynomial in the formal parameter alpha with exact rational
/// coefficients, stored dense in ascending degree with no trailing zeros.
/// The empty coefficient list is the zero polynomial.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(const BigRat& c) { // NOLINT: constants embed
        if (!c.is_zero()) c_.push_back(c);
    }
    AlphaPoly(long c) : AlphaPoly(BigRat(c)) {} // NOLINT

    /// The generator alpha itself.
    static AlphaPoly alpha() { return from_coeffs({BigRat(0), BigRat(1)}); }

    /// c1 * alpha + c0.
    static AlphaPoly linear(const BigRat& c1, const BigRat& c0) {
        return from_coeffs({c0, c1});
    }

    static AlphaPoly from_coeffs(std::vector<BigRat> coeffs) {
        AlphaPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Coefficient of alpha^k (zero outside the stored range).
    const BigRat& coeff(int k) const {
        static const BigRat kZero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(k)];
    }
    const BigRat& leading() const { return c_.back(); }
    const std::vector<BigRat>& coeffs() const { return c_; }

    AlphaPoly operator-() const;
    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    AlphaPoly& operator*=(const AlphaPoly& o) { return *this = *this * o; }
    AlphaPoly& scale(const BigRat& c);

    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const AlphaPoly& a, const AlphaPoly& b) { return !(a == b); }

    /// Exact evaluation at a rational point (Horner).
    BigRat eval(const BigRat& a) const;

    /// Quotient and remainder of division over the rationals.
    std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& d) const;

    /// Exact quotient; throws std::logic_error if the division leaves a
    /// remainder (used only where divisibility is an invariant).
    AlphaPoly divided_exactly_by(const AlphaPoly& d) const;

    /// The rational gamma with sign of the leading coefficient such that
    /// (*this)/gamma has coprime integer coefficients and positive leading
    /// coefficient. Zero polynomial yields 1.
    BigRat signed_content() const;
    AlphaPoly primitive_part() const;

    /// Polynomial gcd by the primitive Euclidean algorithm; the result is
    /// primitive over the integers with positive leading coefficient.
    /// gcd(0,0) = 0, gcd(a,0) = primitive_part(a).
    static AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

    bool all_coeffs_nonneg_integers() const;

    std::string to_string(const std::string& symbol = "alpha") const;
    std::string to_latex() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<BigRat> c_;
};

AlphaPoly pow(const AlphaPoly& base, unsigned long e);

} // namespace jacksym
