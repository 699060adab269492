#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "jacksym/partition.hpp"
#include "jacksym/rat_fun.hpp"

namespace jacksym {

/// Formal character in two torus variables: finite multiset of weights
/// (p, q) with positive multiplicities.
struct LaurentChar {
    std::map<std::pair<int, int>, int> terms;

    void add(int p, int q, int mult = 1) { terms[{p, q}] += mult; }
    long total_multiplicity() const {
        long n = 0;
        for (const auto& [pq, m] : terms) n += m;
        return n;
    }
    friend bool operator==(const LaurentChar& a, const LaurentChar& b) {
        return a.terms == b.terms;
    }
};

/// Tangent character at the fixed point of lambda: each cell contributes
/// the weights (l+1, -a) and (-l, a+1).
LaurentChar tangent_character(const Partition& lambda);

/// Circle-action weight of the torus weight (p, q): -p + alpha*q.
AlphaPoly s1_weight(int p, int q);

/// Product of circle weights with the power of the generator u tracked as
/// an explicit integer exponent.
struct EulerClass {
    RatFun coeff;
    int u_power = 0;

    friend bool operator==(const EulerClass& a, const EulerClass& b) {
        return a.u_power == b.u_power && a.coeff == b.coeff;
    }
};

/// Euler data at one fixed point: the full tangent product and its split
/// into the positive-q and nonpositive-q halves.
struct FixedPointData {
    Partition lambda;
    LaurentChar character;
    EulerClass euler_total;
    EulerClass euler_pos;
    EulerClass euler_nonpos;
};

/// Weight-by-weight Euler classes from the tangent character. Checks the
/// products against the closed forms below and the factorization
/// total = pos * nonpos, throwing std::logic_error on any mismatch.
/// Throws ZeroWeight if a character term has identically zero weight.
FixedPointData euler_classes(const Partition& lambda);

/// u^{2n} * prod_cells(-alpha*a - l - 1) * prod_cells(alpha*(a+1) + l).
EulerClass euler_total_closed_form(const Partition& lambda);
/// u^{n} * prod_cells(alpha*(a+1) + l).
EulerClass euler_pos_closed_form(const Partition& lambda);
/// u^{n} * prod_cells(-alpha*a - l - 1).
EulerClass euler_nonpos_closed_form(const Partition& lambda);

/// Localized self-pairing of the distinguished middle-degree classes:
/// zero off the diagonal, euler_total/euler_nonpos^2 on it (the u powers
/// cancel exactly). Throws DegreeMismatch when |lambda| != |mu|.
RatFun f_pairing(const Partition& lambda, const Partition& mu);

/// Coefficients of q^0..q^{n_max} of prod_{m>=1} (1 - q^m)^{-1}.
std::vector<mpz_class> goettsche_dim(int n_max);

} // namespace jacksym
