#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jacksym/partition.hpp"
#include "jacksym/rat_fun.hpp"
#include "jacksym/report.hpp"

namespace jacksym {

/// Bases of the ring of symmetric functions handled here: monomial m,
/// power-sum p, and augmented monomial (aug_factor times m).
enum class Basis { Monomial, PowerSum, AugmentedMonomial };

std::string basis_tag(Basis b); // "m", "p", "mtilde"
std::optional<Basis> basis_from_tag(const std::string& tag);

/// Element of the symmetric-function ring over the rational functions in
/// alpha, expressed in a single basis. Terms may mix degrees; zero
/// coefficients are never stored, so equal elements in the same basis have
/// identical term maps.
class SymFunc {
public:
    using TermMap = std::map<Partition, RatFun, CanonicalLess>;

    explicit SymFunc(Basis b) : basis_(b) {}
    static SymFunc unit(Basis b) {
        SymFunc f(b);
        f.add_term(Partition(), RatFun(1));
        return f;
    }

    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    RatFun coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? RatFun() : it->second;
    }

    /// Accumulates; a resulting zero coefficient is dropped.
    void add_term(const Partition& lambda, const RatFun& c);

    /// Common weight of all terms; nullopt when zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const RatFun& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const RatFun& c) { return a *= c; }
    friend SymFunc operator*(const RatFun& c, SymFunc a) { return a *= c; }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string to_string() const;

private:
    Basis basis_;
    TermMap terms_;
};

/// Coefficients of p_i * m_lambda in the monomial basis: add i to one part
/// value v of lambda (v = 0 adds a new part), re-sort to mu, and weight by
/// the multiplicity of v + i in mu.
std::map<Partition, long, CanonicalLess> p_mult_m(int i, const Partition& lambda);

/// Change of basis between p and m in one degree. Rows and columns follow
/// enumerate_partitions(degree); row lambda of p_in_m expands p_lambda over
/// {m_mu} and m_in_p is its exact inverse. Construction checks that p_in_m
/// is lower triangular with diagonal aug_factor and throws std::logic_error
/// otherwise.
struct TransitionMatrix {
    int degree = 0;
    std::vector<Partition> order;
    std::map<Partition, int, CanonicalLess> index;
    std::vector<std::vector<RatFun>> p_in_m;
    std::vector<std::vector<RatFun>> m_in_p;
};

TransitionMatrix build_transition(int n);

/// Memoized build_transition; concurrent readers are safe and duplicate
/// concurrent builds of the same degree produce identical values.
std::shared_ptr<const TransitionMatrix> transition_matrix(int n);

/// Same element in the target basis, canonical.
SymFunc convert(const SymFunc& f, Basis target);

/// Bilinear form with <p_lambda, p_mu> = alpha^{length} z_lambda delta.
RatFun inner_product(const SymFunc& f, const SymFunc& g);

/// (-1)^n times inner_product on homogeneous degree-n arguments; this is
/// the intersection pairing of the geometric model. Throws DegreeMismatch
/// on inhomogeneous or degree-mixed input (zero pairs with anything as 0).
RatFun geometric_pairing(const SymFunc& f, const SymFunc& g);

/// Multiplication by p_i, i >= 1; result in the p basis.
SymFunc p_multiply(int i, const SymFunc& f);

/// The degree-lowering half of the Heisenberg action, i >= 1:
/// (-1)^{i-1} * i * (-alpha) * d/dp_i with the p_k as free generators.
SymFunc annihilation(int i, const SymFunc& f);

/// Signed-mode Heisenberg operator: negative k creates (multiplies by
/// p_{-k}), positive k annihilates; k = 0 is invalid.
SymFunc heisenberg_op(int k, const SymFunc& f);

/// Verifies the Heisenberg commutation relation on every p_lambda with
/// |lambda| <= n_max for all 1 <= |i|,|j| <= n_max, and the power identity
/// [A_i^m, B_j^n] for m*i, n*j <= n_max on states free of p_i (where the
/// identity holds in the stated form). Reports the first counterexample.
CheckReport heisenberg_commutator_check(int n_max);

} // namespace jacksym
