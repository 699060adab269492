#include "jacksym/verify.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "jacksym/jack.hpp"
#include "jacksym/localization.hpp"
#include "jacksym/oracles.hpp"

namespace jacksym::verify {

CheckReport orthogonality(int n_max) {
    CheckReport rep;
    rep.title = "Pairwise orthogonality to degree " + std::to_string(n_max);
    for (int d = 0; d <= n_max; ++d) {
        const auto table = jack_table(d);
        bool ok = true;
        std::string detail;
        for (auto it = table->entries.begin(); it != table->entries.end() && ok; ++it)
            for (auto jt = std::next(it); jt != table->entries.end(); ++jt) {
                const RatFun v = inner_product(it->second.P, jt->second.P);
                if (!v.is_zero()) {
                    ok = false;
                    detail = "<P" + it->first.to_string() + ", P" + jt->first.to_string() +
                             "> = " + v.to_string();
                    break;
                }
            }
        rep.add("degree " + std::to_string(d), ok, detail);
    }
    return rep;
}

CheckReport triangularity(int n_max) {
    CheckReport rep;
    rep.title = "Dominance triangularity to degree " + std::to_string(n_max);
    for (int d = 0; d <= n_max; ++d) {
        const auto tm = transition_matrix(d);
        bool ok = true;
        std::string detail;
        for (size_t r = 0; r < tm->order.size() && ok; ++r)
            for (size_t c = 0; c < tm->order.size(); ++c)
                if (!tm->p_in_m[r][c].is_zero() &&
                    !dominance_leq(tm->order[r], tm->order[c])) {
                    ok = false;
                    detail = "p" + tm->order[r].to_string() + " reaches m" +
                             tm->order[c].to_string();
                    break;
                }
        rep.add("p-to-m degree " + std::to_string(d), ok, detail);

        const auto table = jack_table(d);
        ok = true;
        detail.clear();
        for (const auto& [lambda, entry] : table->entries) {
            if (entry.P.coeff(lambda) != RatFun(1)) {
                ok = false;
                detail = "P" + lambda.to_string() + " lacks a unit leading coefficient";
                break;
            }
            for (const auto& [mu, c] : entry.P.terms())
                if (!dominance_leq(mu, lambda)) {
                    ok = false;
                    detail = "P" + lambda.to_string() + " has coefficient " + c.to_string() +
                             " on the non-dominated m" + mu.to_string();
                    break;
                }
            if (!ok) break;
        }
        rep.add("orthogonal basis degree " + std::to_string(d), ok, detail);
    }
    return rep;
}

CheckReport norms_bridge(int n_max) {
    CheckReport rep;
    rep.title = "Fixed-point pairing against inner-product norms to degree " +
                std::to_string(n_max);
    for (int d = 0; d <= n_max; ++d) {
        const auto table = jack_table(d);
        for (const auto& [lambda, entry] : table->entries) {
            const RatFun algebraic =
                d % 2 == 0 ? inner_product(entry.P, entry.P) : -inner_product(entry.P, entry.P);
            const RatFun localized = f_pairing(lambda, lambda);
            rep.add("bridge " + lambda.to_string(), localized == algebraic,
                    "localized " + localized.to_string() + " vs algebraic " +
                        algebraic.to_string());

            rep.add("norm closed form " + lambda.to_string(),
                    norm_closed_form(lambda) == entry.norm,
                    "closed form " + norm_closed_form(lambda).to_string() + " vs " +
                        entry.norm.to_string());

            const FixedPointData fp = euler_classes(lambda);
            const bool euler_ok = fp.euler_total == euler_total_closed_form(lambda) &&
                                  fp.euler_pos == euler_pos_closed_form(lambda) &&
                                  fp.euler_nonpos == euler_nonpos_closed_form(lambda);
            rep.add("euler closed forms " + lambda.to_string(), euler_ok, "");
        }
    }
    return rep;
}

CheckReport positivity(int n_max) { return positivity_check(n_max); }

CheckReport heisenberg(int n_max) {
    CheckReport rep = heisenberg_commutator_check(n_max);
    rep.title = "Heisenberg relations and adjointness to degree " + std::to_string(n_max);
    for (int i = 1; i <= n_max; ++i) {
        bool ok = true;
        std::string detail;
        for (int d = 0; d + i <= n_max && ok; ++d)
            for (const auto& mu : enumerate_partitions(d)) {
                SymFunc f(Basis::PowerSum);
                f.add_term(mu, RatFun(1));
                for (const auto& nu : enumerate_partitions(d + i)) {
                    SymFunc g(Basis::PowerSum);
                    g.add_term(nu, RatFun(1));
                    const RatFun lhs = geometric_pairing(p_multiply(i, f), g);
                    const RatFun rhs = geometric_pairing(f, annihilation(i, g));
                    if (lhs != rhs) {
                        ok = false;
                        detail = "<p_" + std::to_string(i) + " p" + mu.to_string() + ", p" +
                                 nu.to_string() + "> = " + lhs.to_string() + " but adjoint gives " +
                                 rhs.to_string();
                        break;
                    }
                }
                if (!ok) break;
            }
        rep.add("adjointness i=" + std::to_string(i), ok, detail);
    }
    return rep;
}

CheckReport goettsche(int n_max) {
    CheckReport rep;
    rep.title = "Generating-series dimensions to degree " + std::to_string(n_max);
    const auto dims = goettsche_dim(n_max);
    for (int d = 0; d <= n_max; ++d) {
        const auto count = enumerate_partitions(d).size();
        rep.add("degree " + std::to_string(d),
                dims[static_cast<size_t>(d)] == mpz_class(static_cast<unsigned long>(count)),
                "series " + dims[static_cast<size_t>(d)].get_str() + " vs enumeration " +
                    std::to_string(count));
    }
    return rep;
}

CheckReport oracle(int n_max) {
    CheckReport rep;
    rep.title = "Independent oracles to degree " + std::to_string(n_max);
    for (int i = 1; i <= n_max; ++i)
        for (int d = 0; i + d <= n_max; ++d)
            for (const auto& lambda : enumerate_partitions(d)) {
                std::map<Partition, BigRat, CanonicalLess> fast;
                for (const auto& [mu, c] : p_mult_m(i, lambda)) fast.emplace(mu, BigRat(c));
                const auto brute = jacksym::oracle::p_times_m_expanded(i, lambda);
                rep.add("p_" + std::to_string(i) + " * m" + lambda.to_string(), fast == brute,
                        "rule and expansion disagree");
            }

    for (int d = 0; d <= n_max; ++d) {
        const auto table = jack_table(d);
        for (const auto& [lambda, entry] : table->entries) {
            std::map<Partition, BigRat, CanonicalLess> at_one;
            for (const auto& [mu, c] : entry.P.terms()) {
                const BigRat v = c.eval(BigRat(1));
                if (!v.is_zero()) at_one.emplace(mu, v);
            }
            rep.add("alpha=1 reduction " + lambda.to_string(),
                    jacksym::oracle::schur_matches(lambda, at_one),
                    "specialized coefficients fail the alternant identity");
        }
    }
    return rep;
}

CheckReport run_suite(const std::string& name, int n_max) {
    if (name == "orthogonality") return orthogonality(n_max);
    if (name == "triangularity") return triangularity(n_max);
    if (name == "norms-bridge") return norms_bridge(n_max);
    if (name == "positivity") return positivity(n_max);
    if (name == "heisenberg") return heisenberg(n_max);
    if (name == "goettsche") return goettsche(n_max);
    if (name == "oracle") return oracle(n_max);
    throw std::invalid_argument("unknown verification suite \"" + name + "\"");
}

void warm_caches(int n_max, int threads) {
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    std::atomic<int> next{0};
    auto work = [&] {
        for (int d = next.fetch_add(1); d <= n_max; d = next.fetch_add(1)) {
            transition_matrix(d);
            jack_table(d);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

} // namespace jacksym::verify
