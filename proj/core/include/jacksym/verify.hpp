#pragma once

#include "jacksym/report.hpp"

namespace jacksym::verify {

/// Named verification suites over all degrees <= n_max. Each drives only
/// public module operations and reports one item per checked statement
/// with the first counterexample on failure.

/// <P_lambda, P_mu> = 0 for lambda != mu within each degree.
CheckReport orthogonality(int n_max);

/// Support of P_lambda is {mu <= lambda}, unit leading coefficient, and
/// the p-to-m matrix stays inside the dominance triangle.
CheckReport triangularity(int n_max);

/// The localized self-pairing equals (-1)^n times the inner-product norm,
/// the Gram-Schmidt norm equals its closed form, and the Euler classes
/// match their closed forms.
CheckReport norms_bridge(int n_max);

/// Integral-form coefficients lie in the nonnegative-integer polynomials.
CheckReport positivity(int n_max);

/// Commutation relations plus adjointness of multiplication by p_i and
/// annihilation under the geometric pairing.
CheckReport heisenberg(int n_max);

/// Series coefficients of prod (1-q^m)^{-1} against direct enumeration.
CheckReport goettsche(int n_max);

/// p-times-m expansion against the brute-force multivariate oracle for
/// i + |lambda| <= n_max, and the alpha = 1 specialization against the
/// ratio-of-alternants oracle for |lambda| <= n_max.
CheckReport oracle(int n_max);

CheckReport run_suite(const std::string& name, int n_max);

/// Pre-builds transition matrices and orthogonal tables for all degrees
/// <= n_max across the given number of worker threads.
void warm_caches(int n_max, int threads);

} // namespace jacksym::verify
