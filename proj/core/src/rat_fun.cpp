#include "jacksym/rat_fun.hpp"

#include <sstream>

namespace jacksym {

RatFun::RatFun(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = AlphaPoly(1);
        return;
    }
    AlphaPoly g = AlphaPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divided_exactly_by(g);
        den_ = den_.divided_exactly_by(g);
    }
    const BigRat s = den_.signed_content();
    num_.scale(s.inverse());
    den_.scale(s.inverse());
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::inverse() const { return RatFun(den_, num_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero("division of rational functions by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

BigRat RatFun::eval(const BigRat& a) const {
    const BigRat d = den_.eval(a);
    if (d.is_zero())
        throw SpecializationPole("denominator " + den_.to_string() + " vanishes at alpha = " +
                                 a.to_string());
    return num_.eval(a) / d;
}

std::string RatFun::to_string(const std::string& symbol) const {
    if (den_.is_one()) return num_.to_string(symbol);
    std::ostringstream os;
    os << "(" << num_.to_string(symbol) << ")/(" << den_.to_string(symbol) << ")";
    return os.str();
}

std::string RatFun::to_latex() const {
    if (den_.is_one()) return num_.to_latex();
    std::ostringstream os;
    os << "\\frac{" << num_.to_latex() << "}{" << den_.to_latex() << "}";
    return os.str();
}

RatFun pow(const RatFun& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    RatFun r(1);
    RatFun b = base;
    auto k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) r *= b;
        b *= b;
        k >>= 1UL;
    }
    return r;
}

} // namespace jacksym
