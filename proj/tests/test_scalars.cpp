#include <doctest.h>

#include <random>

#include "jacksym/rat_fun.hpp"

using namespace jacksym;

namespace {

AlphaPoly plus_one() { return AlphaPoly::linear(BigRat(1), BigRat(1)); }   // alpha + 1
AlphaPoly minus_one() { return AlphaPoly::linear(BigRat(1), BigRat(-1)); } // alpha - 1

std::mt19937 rng(20240817);

BigRat random_rat() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return {num(rng), den(rng)};
}

AlphaPoly random_poly(bool nonzero) {
    std::uniform_int_distribution<int> deg(0, 3);
    for (;;) {
        std::vector<BigRat> coeffs;
        const int d = deg(rng);
        for (int k = 0; k <= d; ++k) coeffs.push_back(random_rat());
        AlphaPoly p = AlphaPoly::from_coeffs(std::move(coeffs));
        if (!nonzero || !p.is_zero()) return p;
    }
}

RatFun random_rat_fun(bool nonzero) {
    for (;;) {
        RatFun f(random_poly(false), random_poly(true));
        if (!nonzero || !f.is_zero()) return f;
    }
}

} // namespace

TEST_CASE("rationals canonicalize on construction") {
    CHECK(BigRat(2, 4) == BigRat(1, 2));
    CHECK(BigRat(-3, -6) == BigRat(1, 2));
    CHECK(BigRat(3, -6) == BigRat(-1, 2));
    CHECK(BigRat(3, -6).den_string() == "2");
    CHECK(BigRat(0, 5) == BigRat(0));
    CHECK_THROWS_AS(BigRat(1, 0), DivisionByZero);
}

TEST_CASE("rational arithmetic, parsing, printing") {
    CHECK(BigRat::from_strings("22", "7").to_string() == "22/7");
    CHECK(BigRat::from_strings("-10", "4") == BigRat(-5, 2));
    CHECK_THROWS_AS(BigRat::from_strings("x", "1"), ParseError);
    CHECK(BigRat(1, 3) + BigRat(1, 6) == BigRat(1, 2));
    CHECK(BigRat(2, 3) * BigRat(9, 4) == BigRat(3, 2));
    CHECK(BigRat(1) / BigRat(1, 7) == BigRat(7));
    CHECK_THROWS_AS(BigRat(1) / BigRat(0), DivisionByZero);
    CHECK_THROWS_AS(BigRat(0).inverse(), DivisionByZero);
    CHECK(pow(BigRat(2, 3), 3) == BigRat(8, 27));
    CHECK(abs(BigRat(-5, 2)) == BigRat(5, 2));
    CHECK_FALSE(BigRat(7, 2).is_integer());
    CHECK(BigRat(-4, 2).is_integer());
}

TEST_CASE("polynomials store no trailing zeros") {
    CHECK(AlphaPoly().degree() == -1);
    CHECK(AlphaPoly::from_coeffs({BigRat(3), BigRat(0), BigRat(0)}).degree() == 0);
    CHECK((plus_one() - plus_one()).is_zero());
    CHECK(AlphaPoly::alpha().degree() == 1);
    CHECK(AlphaPoly::linear(BigRat(2), BigRat(-3)).coeff(1) == BigRat(2));
    CHECK(AlphaPoly::linear(BigRat(2), BigRat(-3)).coeff(0) == BigRat(-3));
    CHECK(AlphaPoly(5).coeff(7) == BigRat(0));
}

TEST_CASE("polynomial arithmetic") {
    CHECK(plus_one() * minus_one() ==
          AlphaPoly::from_coeffs({BigRat(-1), BigRat(0), BigRat(1)}));
    const AlphaPoly cube = pow(AlphaPoly::alpha(), 3) - AlphaPoly(1);
    auto [q, r] = cube.divmod(minus_one());
    CHECK(r.is_zero());
    CHECK(q == AlphaPoly::from_coeffs({BigRat(1), BigRat(1), BigRat(1)}));
    CHECK(cube.divided_exactly_by(minus_one()) == q);
    CHECK_THROWS_AS(cube.divided_exactly_by(plus_one()), std::logic_error);
    CHECK_THROWS_AS(cube.divmod(AlphaPoly()), DivisionByZero);
    CHECK(cube.eval(BigRat(2)) == BigRat(7));
    CHECK(plus_one().eval(BigRat(-1, 2)) == BigRat(1, 2));
}

TEST_CASE("content, primitive part, gcd") {
    const AlphaPoly p = AlphaPoly::from_coeffs({BigRat(-6), BigRat(-3)}); // -3a - 6
    CHECK(p.signed_content() == BigRat(-3));
    CHECK(p.primitive_part() == AlphaPoly::linear(BigRat(1), BigRat(2)));

    const AlphaPoly half = AlphaPoly::from_coeffs({BigRat(1, 2), BigRat(3, 2)});
    CHECK(half.signed_content() == BigRat(1, 2));

    const AlphaPoly a = plus_one() * minus_one();              // a^2 - 1
    const AlphaPoly b = plus_one() * plus_one();               // (a+1)^2
    CHECK(AlphaPoly::gcd(a, b) == plus_one());
    AlphaPoly scaled = a;
    scaled.scale(BigRat(-2));
    CHECK(AlphaPoly::gcd(scaled, b) == plus_one()); // content-blind
    CHECK(AlphaPoly::gcd(AlphaPoly(), AlphaPoly()).is_zero());
    CHECK(AlphaPoly::gcd(AlphaPoly(), plus_one()) == plus_one());
}

TEST_CASE("polynomial rendering") {
    const AlphaPoly p =
        AlphaPoly::from_coeffs({BigRat(1, 2), BigRat(-1), BigRat(2)}); // 2a^2 - a + 1/2
    CHECK(p.to_string() == "2*alpha^2 - alpha + 1/2");
    CHECK(AlphaPoly().to_string() == "0");
    CHECK(AlphaPoly(-7).to_string() == "-7");
    CHECK(plus_one().to_latex() == "\\alpha + 1");
    CHECK(p.to_latex() == "2\\alpha^{2} - \\alpha + \\frac{1}{2}");
}

TEST_CASE("rational functions reduce to canonical form") {
    // (2a + 2)/(4a + 4) is the constant 1/2.
    const RatFun f(AlphaPoly::from_coeffs({BigRat(2), BigRat(2)}),
                   AlphaPoly::from_coeffs({BigRat(4), BigRat(4)}));
    CHECK(f == RatFun(BigRat(1, 2)));

    // Denominator is forced primitive with positive leading coefficient.
    const RatFun g(AlphaPoly(1), AlphaPoly::linear(BigRat(-1), BigRat(1))); // 1/(1 - a)
    CHECK(g.den() == minus_one());
    CHECK(g.num() == AlphaPoly(-1));

    const RatFun h(AlphaPoly::linear(BigRat(1, 3), BigRat(0)),
                   AlphaPoly::from_coeffs({BigRat(2, 3)}));
    CHECK(h.is_polynomial());
    CHECK(h.num() == AlphaPoly::linear(BigRat(1, 2), BigRat(0)));

    CHECK_THROWS_AS(RatFun(AlphaPoly(1), AlphaPoly()), DivisionByZero);
    CHECK_THROWS_AS(RatFun(1) / RatFun(), DivisionByZero);
}

TEST_CASE("rational function field axioms hold exactly on random triples") {
    for (int trial = 0; trial < 60; ++trial) {
        const RatFun f = random_rat_fun(false);
        const RatFun g = random_rat_fun(false);
        const RatFun h = random_rat_fun(false);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK(f - f == RatFun());
    }
}

TEST_CASE("canonical representations are identical however computed") {
    for (int trial = 0; trial < 40; ++trial) {
        const RatFun f = random_rat_fun(false);
        const RatFun g = random_rat_fun(true);
        const RatFun left = (f * g) * g.inverse();
        const RatFun right = f * (g * g.inverse());
        CHECK(left == f);
        CHECK(right == f);
        CHECK(left.to_string() == f.to_string());
    }
}

TEST_CASE("evaluation is a ring homomorphism away from poles") {
    const std::vector<BigRat> points{BigRat(0), BigRat(1), BigRat(-2), BigRat(3, 7)};
    for (int trial = 0; trial < 40; ++trial) {
        const RatFun f = random_rat_fun(false);
        const RatFun g = random_rat_fun(false);
        for (const BigRat& a : points) {
            if (f.den().eval(a).is_zero() || g.den().eval(a).is_zero() ||
                (f * g).den().eval(a).is_zero() || (f + g).den().eval(a).is_zero())
                continue;
            CHECK((f * g).eval(a) == f.eval(a) * g.eval(a));
            CHECK((f + g).eval(a) == f.eval(a) + g.eval(a));
        }
    }
}

TEST_CASE("evaluation at a pole is loud") {
    const RatFun f(AlphaPoly(1), minus_one());
    CHECK(f.eval(BigRat(2)) == BigRat(1));
    CHECK_THROWS_AS(f.eval(BigRat(1)), SpecializationPole);
}

TEST_CASE("nonnegative integer polynomial detection") {
    CHECK(RatFun(plus_one() + AlphaPoly(1)).is_nonneg_int_poly()); // alpha + 2
    CHECK_FALSE(RatFun(AlphaPoly(1), plus_one()).is_nonneg_int_poly());
    CHECK_FALSE(RatFun(minus_one()).is_nonneg_int_poly());
    CHECK_FALSE(RatFun(BigRat(1, 2)).is_nonneg_int_poly());
    CHECK(RatFun().is_nonneg_int_poly());
}

TEST_CASE("rational function rendering") {
    const RatFun f(AlphaPoly::linear(BigRat(2), BigRat(0)), plus_one());
    CHECK(f.to_string() == "(2*alpha)/(alpha + 1)");
    CHECK(f.to_latex() == "\\frac{2\\alpha}{\\alpha + 1}");
    CHECK(RatFun(BigRat(-3, 2)).to_string() == "-3/2");
    CHECK(pow(f, 0) == RatFun(1));
    CHECK(pow(f, 2) == f * f);
    CHECK(pow(f, -1) == f.inverse());
}
