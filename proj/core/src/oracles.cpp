#include "jacksym/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacksym::oracle {

MultiPoly monomial_symmetric(const Partition& lambda, int nvars) {
    MultiPoly out;
    if (lambda.length() > nvars) return out;
    Monomial exps(static_cast<size_t>(nvars), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    do {
        out[exps] = BigRat(1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

MultiPoly power_sum(int i, int nvars) {
    MultiPoly out;
    for (int k = 0; k < nvars; ++k) {
        Monomial exps(static_cast<size_t>(nvars), 0);
        exps[static_cast<size_t>(k)] = i;
        out[exps] = BigRat(1);
    }
    return out;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Monomial e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

std::map<Partition, BigRat, CanonicalLess> collect_monomials(MultiPoly f, int nvars) {
    std::map<Partition, BigRat, CanonicalLess> out;
    size_t guard = f.size() + 1;
    while (!f.empty()) {
        if (guard-- == 0) throw std::logic_error("polynomial is not symmetric");
        const auto& [exps, c] = *f.begin();
        Monomial sorted = exps;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        const Partition mu(sorted);
        const BigRat coeff = c;
        for (const auto& [e, v] : monomial_symmetric(mu, nvars)) {
            auto it = f.find(e);
            if (it == f.end()) {
                f.emplace(e, -coeff * v);
            } else {
                it->second -= coeff * v;
                if (it->second.is_zero()) f.erase(it);
            }
        }
        out[mu] += coeff;
        if (out[mu].is_zero()) out.erase(mu);
    }
    return out;
}

std::map<Partition, BigRat, CanonicalLess> p_times_m_expanded(int i, const Partition& lambda) {
    const int nvars = i + lambda.weight();
    return collect_monomials(multiply(power_sum(i, nvars), monomial_symmetric(lambda, nvars)),
                             nvars);
}

MultiPoly alternant(const std::vector<int>& exponents) {
    for (size_t k = 0; k + 1 < exponents.size(); ++k)
        if (exponents[k] <= exponents[k + 1])
            throw std::invalid_argument("alternant needs strictly decreasing exponents");
    const size_t n = exponents.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    MultiPoly out;
    do {
        int inversions = 0;
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
        Monomial e(n);
        for (size_t k = 0; k < n; ++k) e[k] = exponents[perm[k]];
        out[e] = BigRat(inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool schur_matches(const Partition& lambda,
                   const std::map<Partition, BigRat, CanonicalLess>& m_coeffs) {
    const int n = lambda.weight();
    if (n == 0) {
        std::map<Partition, BigRat, CanonicalLess> unit;
        unit.emplace(Partition(), BigRat(1));
        return m_coeffs == unit;
    }
    MultiPoly f;
    for (const auto& [mu, c] : m_coeffs)
        for (const auto& [e, v] : monomial_symmetric(mu, n)) {
            f[e] += c * v;
            if (f[e].is_zero()) f.erase(e);
        }

    std::vector<int> staircase(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) staircase[static_cast<size_t>(k)] = n - 1 - k;
    std::vector<int> shifted = staircase;
    for (int k = 0; k < lambda.length(); ++k) shifted[static_cast<size_t>(k)] += lambda.part(k + 1);

    return multiply(alternant(staircase), f) == alternant(shifted);
}

} // namespace jacksym::oracle
