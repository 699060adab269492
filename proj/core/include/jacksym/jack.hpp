#pragma once

#include <map>
#include <memory>
#include <vector>

#include "jacksym/sym_func.hpp"

namespace jacksym {

/// One orthogonal-basis member of a fixed degree: P normalized with unit
/// coefficient on m_lambda, the integral form J = c*P in the augmented
/// monomial basis, the self inner product, and the scaling factor c.
struct JackEntry {
    SymFunc P{Basis::Monomial};
    SymFunc J{Basis::AugmentedMonomial};
    RatFun norm;
    AlphaPoly c;
};

struct JackTable {
    int degree = 0;
    std::map<Partition, JackEntry, CanonicalLess> entries;
};

/// Gram-Schmidt over one degree, processing the given linear extension of
/// dominance from smallest to largest. Orthogonality is built in; the
/// triangularity of the outcome is a theorem checked by the test suite,
/// not assumed here.
JackTable build_jack_table(int n, const std::vector<Partition>& processing_order);

/// build_jack_table under the canonical extension (reversed enumeration
/// order, so dominance-smaller partitions are processed first).
JackTable build_jack_table(int n);

/// Memoized build_jack_table(n); concurrent readers are safe.
std::shared_ptr<const JackTable> jack_table(int n);

/// P_lambda: unit m_lambda coefficient, orthogonal to every other degree
/// member under inner_product. Monomial basis.
SymFunc jack_P(const Partition& lambda);

/// Product over cells of (alpha*a(s) + l(s) + 1).
AlphaPoly c_lambda(const Partition& lambda);

/// J_lambda = c_lambda * P_lambda in the augmented monomial basis.
SymFunc jack_J(const Partition& lambda);

/// Product over cells of (alpha*(a(s)+1) + l(s)) / (alpha*a(s) + l(s) + 1),
/// a closed form for inner_product(P_lambda, P_lambda).
RatFun norm_closed_form(const Partition& lambda);

/// Every coefficient of every J_lambda with |lambda| <= n_max is a
/// polynomial in alpha with nonnegative integer coefficients.
CheckReport positivity_check(int n_max);

} // namespace jacksym
