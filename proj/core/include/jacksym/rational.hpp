#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "jacksym/errors.hpp"

namespace jacksym {

/// Arbitrary-precision rational number.
///
/// Invariant: always stored reduced (gcd of numerator and denominator is 1)
/// with a positive denominator, so equality of values is equality of
/// representations. All arithmetic is exact; there is no floating point
/// anywhere in this library.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {} // NOLINT: implicit by design, integers embed
    BigRat(long n, long d) {
        if (d == 0) throw DivisionByZero("BigRat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit BigRat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit BigRat(const mpz_class& n) : v_(n) {}
    BigRat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DivisionByZero("BigRat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    /// Parse from decimal strings (as used by the JSON wire format).
    static BigRat from_strings(const std::string& num, const std::string& den) {
        mpz_class n, d;
        if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
            throw ParseError("BigRat: invalid decimal integer");
        return BigRat(n, d);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }

    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw DivisionByZero("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    /// Multiplicative inverse; throws DivisionByZero on 0.
    BigRat inverse() const {
        if (is_zero()) throw DivisionByZero("BigRat: inverse of zero");
        return BigRat(mpq_class(1) / v_);
    }

    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const {
        if (is_integer()) return num_string();
        return num_string() + "/" + den_string();
    }

private:
    mpq_class v_;
};

inline BigRat pow(const BigRat& base, unsigned long e) {
    BigRat r(1), b = base;
    while (e > 0) {
        if (e & 1UL) r *= b;
        b *= b;
        e >>= 1UL;
    }
    return r;
}

inline BigRat abs(const BigRat& x) { return x.sign() < 0 ? -x : x; }

} // namespace jacksym
