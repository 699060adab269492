#pragma once

#include <map>
#include <vector>

#include "jacksym/partition.hpp"
#include "jacksym/rational.hpp"

namespace jacksym::oracle {

/// Honest dense multivariate polynomials in a fixed number of variables,
/// keyed by exponent vectors. Deliberately naive: this code must share no
/// algorithm with the symmetric-function module it cross-checks.
using Monomial = std::vector<int>;
using MultiPoly = std::map<Monomial, BigRat>;

/// Sum of the distinct permutations of the exponent vector of lambda,
/// padded with zeros to nvars. Empty when lambda has more parts than nvars.
MultiPoly monomial_symmetric(const Partition& lambda, int nvars);

/// x_1^i + ... + x_nvars^i.
MultiPoly power_sum(int i, int nvars);

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);

/// Rewrites a symmetric polynomial as a combination of monomial symmetric
/// functions by repeated orbit subtraction; throws std::logic_error if the
/// input is not symmetric in its nvars variables.
std::map<Partition, BigRat, CanonicalLess> collect_monomials(MultiPoly f, int nvars);

/// p_i * m_lambda expanded from scratch in i + |lambda| variables, enough
/// for the recollection to be faithful in degree i + |lambda|.
std::map<Partition, BigRat, CanonicalLess> p_times_m_expanded(int i, const Partition& lambda);

/// Alternant: sum over permutations sigma of sign(sigma) * x^{sigma(exps)},
/// for strictly decreasing nonnegative exponents.
MultiPoly alternant(const std::vector<int>& exponents);

/// True when the monomial-basis coefficients describe the Schur polynomial
/// of lambda, tested in |lambda| variables through cross-multiplication:
/// alternant(delta) * f == alternant(lambda + delta), delta the staircase.
bool schur_matches(const Partition& lambda,
                   const std::map<Partition, BigRat, CanonicalLess>& m_coeffs);

} // namespace jacksym::oracle
