#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "jacksym/jack.hpp"
#include "jacksym/oracles.hpp"

using namespace jacksym;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

RatFun alpha() { return RatFun::alpha(); }

} // namespace

TEST_CASE("small members in closed form") {
    CHECK(jack_P(Partition()) == SymFunc::unit(Basis::Monomial));

    const SymFunc p1 = jack_P(P({1}));
    CHECK(p1.term_count() == 1);
    CHECK(p1.coeff(P({1})) == RatFun(1));

    const SymFunc p2 = jack_P(P({2}));
    CHECK(p2.coeff(P({2})) == RatFun(1));
    CHECK(p2.coeff(P({1, 1})) == RatFun(2) / (alpha() + RatFun(1)));

    const SymFunc p11 = jack_P(P({1, 1}));
    CHECK(p11.term_count() == 1);
    CHECK(p11.coeff(P({1, 1})) == RatFun(1));

    const SymFunc p21 = jack_P(P({2, 1}));
    CHECK(p21.coeff(P({2, 1})) == RatFun(1));
    CHECK(p21.coeff(P({1, 1, 1})) == RatFun(6) / (alpha() + RatFun(2)));
}

TEST_CASE("scaling factors and integral forms") {
    CHECK(c_lambda(Partition()).is_one());
    CHECK(c_lambda(P({2})) == AlphaPoly::linear(1, 1));
    CHECK(c_lambda(P({1, 1})) == AlphaPoly(2));
    CHECK(c_lambda(P({2, 1})) == AlphaPoly::linear(1, 2));

    const SymFunc j2 = jack_J(P({2}));
    CHECK(j2.coeff(P({2})) == RatFun(AlphaPoly::linear(1, 1)));
    CHECK(j2.coeff(P({1, 1})) == RatFun(1));

    const SymFunc j11 = jack_J(P({1, 1}));
    CHECK(j11.term_count() == 1);
    CHECK(j11.coeff(P({1, 1})) == RatFun(1));

    const SymFunc j21 = jack_J(P({2, 1}));
    CHECK(j21.coeff(P({2, 1})) == RatFun(AlphaPoly::linear(1, 2)));
    CHECK(j21.coeff(P({1, 1, 1})) == RatFun(1));
}

TEST_CASE("norms match the hook-product closed form") {
    CHECK(norm_closed_form(P({1})) == alpha());
    CHECK(norm_closed_form(P({2})) == RatFun(2) * alpha() * alpha() / (alpha() + RatFun(1)));
    CHECK(norm_closed_form(P({1, 1})) == (alpha() * alpha() + alpha()) / RatFun(2));
    CHECK(norm_closed_form(P({2, 1})) ==
          alpha() * alpha() * (RatFun(2) * alpha() + RatFun(1)) / (alpha() + RatFun(2)));

    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto table = jack_table(n);
            const JackEntry& e = table->entries.at(lambda);
            CHECK(e.norm == norm_closed_form(lambda));
            CHECK(inner_product(e.P, e.P) == e.norm);
        }
}

TEST_CASE("the table does not depend on the linear extension chosen") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<Partition> canonical = enumerate_partitions(n);
        std::reverse(canonical.begin(), canonical.end());

        // Alternative extension of dominance: ascending enumeration index of
        // the conjugate. Conjugation reverses dominance, so this is again a
        // valid order, and for n >= 6 a genuinely different one.
        const std::vector<Partition> enum_order = enumerate_partitions(n);
        std::map<Partition, size_t, CanonicalLess> index;
        for (size_t i = 0; i < enum_order.size(); ++i) index.emplace(enum_order[i], i);
        std::vector<Partition> by_conjugate = enum_order;
        std::sort(by_conjugate.begin(), by_conjugate.end(),
                  [&](const Partition& a, const Partition& b) {
                      return index.at(a.conjugate()) < index.at(b.conjugate());
                  });
        if (n >= 6) CHECK(by_conjugate != canonical);

        const JackTable t1 = build_jack_table(n, canonical);
        const JackTable t2 = build_jack_table(n, by_conjugate);
        REQUIRE(t1.entries.size() == t2.entries.size());
        for (const auto& [lambda, e1] : t1.entries) {
            const JackEntry& e2 = t2.entries.at(lambda);
            CHECK(e1.P == e2.P);
            CHECK(e1.J == e2.J);
            CHECK(e1.norm == e2.norm);
            CHECK(e1.c == e2.c);
        }
    }
}

namespace {

/// Gram-Schmidt over plain rationals at a fixed alpha value, sharing no
/// symbolic machinery with the library path beyond the transition matrix.
std::map<Partition, std::vector<BigRat>, CanonicalLess> numeric_tables(int n, const BigRat& a) {
    const auto t = transition_matrix(n);
    const size_t sz = t->order.size();

    std::vector<std::vector<BigRat>> m_in_p(sz, std::vector<BigRat>(sz));
    std::vector<BigRat> weight(sz);
    for (size_t r = 0; r < sz; ++r) {
        for (size_t k = 0; k < sz; ++k) {
            const RatFun& entry = t->m_in_p[r][k];
            m_in_p[r][k] = entry.eval(a);
        }
        weight[r] = BigRat(z_factor(t->order[r])) *
                    pow(a, static_cast<unsigned long>(t->order[r].length()));
    }
    const auto pair_p = [&](const std::vector<BigRat>& u, const std::vector<BigRat>& v) {
        BigRat acc;
        for (size_t k = 0; k < sz; ++k) acc += u[k] * v[k] * weight[k];
        return acc;
    };

    std::vector<std::vector<BigRat>> done;
    std::vector<BigRat> done_norm;
    std::vector<size_t> done_row;
    for (size_t step = 0; step < sz; ++step) {
        const size_t r = sz - 1 - step; // reversed enumeration order
        std::vector<BigRat> v = m_in_p[r];
        for (size_t j = 0; j < done.size(); ++j) {
            const BigRat c = pair_p(m_in_p[r], done[j]) / done_norm[j];
            for (size_t k = 0; k < sz; ++k) v[k] -= c * done[j][k];
        }
        done_norm.push_back(pair_p(v, v));
        done.push_back(std::move(v));
        done_row.push_back(r);
    }

    // back to monomial coordinates: column c of p_in_m evaluated at a
    std::map<Partition, std::vector<BigRat>, CanonicalLess> out;
    for (size_t j = 0; j < done.size(); ++j) {
        std::vector<BigRat> m_coords(sz);
        for (size_t k = 0; k < sz; ++k) {
            if (done[j][k].is_zero()) continue;
            for (size_t c = 0; c < sz; ++c)
                m_coords[c] += done[j][k] * t->p_in_m[k][c].eval(a);
        }
        out.emplace(t->order[done_row[j]], std::move(m_coords));
    }
    return out;
}

} // namespace

TEST_CASE("specializing alpha commutes with the construction") {
    const std::vector<BigRat> values = {BigRat(1), BigRat(2), BigRat(1, 2)};
    for (const BigRat& a : values)
        for (int n = 0; n <= 6; ++n) {
            const auto numeric = numeric_tables(n, a);
            const auto t = transition_matrix(n);
            const auto table = jack_table(n);
            for (const auto& [lambda, entry] : table->entries) {
                const auto& m_coords = numeric.at(lambda);
                for (size_t c = 0; c < t->order.size(); ++c)
                    CHECK(entry.P.coeff(t->order[c]).eval(a) == m_coords[c]);
            }
        }
}

TEST_CASE("integral-form coefficients are nonnegative integer polynomials") {
    const CheckReport rep = positivity_check(6);
    const CheckItem* bad = rep.first_failure();
    INFO((bad ? bad->name + ": " + bad->detail : std::string("all passed")));
    CHECK(rep.all_passed());
    CHECK(rep.items.size() > 20);

    CHECK(positivity_check(0).all_passed());
    CHECK_THROWS_AS(positivity_check(-1), std::invalid_argument);
}

TEST_CASE("at alpha = 1 the P family reduces to Schur polynomials") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            const SymFunc p = jack_P(lambda);
            std::map<Partition, BigRat, CanonicalLess> m_coeffs;
            for (const auto& [mu, coeff] : p.terms()) {
                const BigRat v = coeff.eval(BigRat(1));
                if (!v.is_zero()) m_coeffs.emplace(mu, v);
            }
            CHECK(jacksym::oracle::schur_matches(lambda, m_coeffs));
        }
}
