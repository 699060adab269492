#include "jacksym/alpha_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jacksym {

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    AlphaPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

AlphaPoly& AlphaPoly::scale(const BigRat& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

BigRat AlphaPoly::eval(const BigRat& a) const {
    BigRat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
    return r;
}

std::pair<AlphaPoly, AlphaPoly> AlphaPoly::divmod(const AlphaPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    AlphaPoly rem = *this;
    AlphaPoly quot;
    const int dd = d.degree();
    if (rem.degree() >= dd) quot.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, BigRat(0));
    const BigRat lead_inv = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int k = rem.degree() - dd;
        const BigRat q = rem.leading() * lead_inv;
        quot.c_[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= dd; ++i)
            rem.c_[static_cast<size_t>(k + i)] -= q * d.c_[static_cast<size_t>(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

AlphaPoly AlphaPoly::divided_exactly_by(const AlphaPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

BigRat AlphaPoly::signed_content() const {
    if (is_zero()) return BigRat(1);
    mpz_class num_gcd(0);
    mpz_class den_lcm(1);
    for (const auto& c : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    BigRat content(num_gcd, den_lcm);
    if (leading().sign() < 0) content = -content;
    return content;
}

AlphaPoly AlphaPoly::primitive_part() const {
    if (is_zero()) return {};
    AlphaPoly r = *this;
    r.scale(signed_content().inverse());
    return r;
}

AlphaPoly AlphaPoly::gcd(const AlphaPoly& a, const AlphaPoly& b) {
    AlphaPoly f = a.primitive_part();
    AlphaPoly g = b.primitive_part();
    while (!g.is_zero()) {
        AlphaPoly r = f.divmod(g).second;
        f = std::move(g);
        g = r.primitive_part();
    }
    return f;
}

bool AlphaPoly::all_coeffs_nonneg_integers() const {
    for (const auto& c : c_)
        if (!c.is_integer() || c.sign() < 0) return false;
    return true;
}

namespace {

// One printed term, shared by the plain and latex writers.
void append_term(std::ostream& os, const BigRat& c, int k, bool first,
                 const std::string& symbol, bool latex) {
    BigRat a = c;
    if (first) {
        if (a.sign() < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a.sign() < 0 ? " - " : " + ");
        if (a.sign() < 0) a = -a;
    }
    const bool unit = a.is_one() && k > 0;
    if (!unit) {
        if (latex && !a.is_integer())
            os << "\\frac{" << a.num_string() << "}{" << a.den_string() << "}";
        else
            os << a.to_string();
    }
    if (k > 0) {
        if (!unit && !latex) os << "*";
        os << symbol;
        if (k > 1) {
            if (latex)
                os << "^{" << k << "}";
            else
                os << "^" << k;
        }
    }
}

std::string render(const std::vector<BigRat>& c, const std::string& symbol, bool latex) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        const BigRat& a = c[static_cast<size_t>(k)];
        if (a.is_zero()) continue;
        append_term(os, a, k, first, symbol, latex);
        first = false;
    }
    return os.str();
}

} // namespace

std::string AlphaPoly::to_string(const std::string& symbol) const {
    return render(c_, symbol, false);
}

std::string AlphaPoly::to_latex() const { return render(c_, "\\alpha", true); }

AlphaPoly pow(const AlphaPoly& base, unsigned long e) {
    AlphaPoly r(1);
    AlphaPoly b = base;
    while (e > 0) {
        if (e & 1UL) r *= b;
        b *= b;
        e >>= 1UL;
    }
    return r;
}

} // namespace jacksym
