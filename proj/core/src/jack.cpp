#include "jacksym/jack.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace jacksym {

namespace {

// <f, g> for p-coordinate vectors over the degree's partition order, with
// precomputed diagonal weights z_nu * alpha^{length(nu)}.
RatFun pairing(const std::vector<RatFun>& f, const std::vector<RatFun>& g,
               const std::vector<RatFun>& weight) {
    RatFun sum;
    for (size_t k = 0; k < weight.size(); ++k) {
        if (f[k].is_zero() || g[k].is_zero()) continue;
        sum += f[k] * g[k] * weight[k];
    }
    return sum;
}

} // namespace

JackTable build_jack_table(int n, const std::vector<Partition>& processing_order) {
    const auto tm = transition_matrix(n);
    const size_t sz = tm->order.size();
    if (processing_order.size() != sz)
        throw std::invalid_argument("processing order must list every partition of the degree");

    std::vector<RatFun> weight(sz);
    for (size_t k = 0; k < sz; ++k) {
        AlphaPoly w = pow(AlphaPoly::alpha(), static_cast<unsigned long>(tm->order[k].length()));
        w.scale(BigRat(z_factor(tm->order[k])));
        weight[k] = RatFun(w);
    }

    JackTable table;
    table.degree = n;

    std::vector<std::vector<RatFun>> done_m; // m coordinates of finished P
    std::vector<std::vector<RatFun>> done_p; // p coordinates of finished P
    std::vector<RatFun> done_norm;

    for (const Partition& lambda : processing_order) {
        const auto row = static_cast<size_t>(tm->index.at(lambda));

        std::vector<RatFun> pm(sz);   // m coordinates, start at m_lambda
        pm[row] = RatFun(1);
        std::vector<RatFun> pp = tm->m_in_p[row]; // p coordinates of m_lambda

        for (size_t t = 0; t < done_p.size(); ++t) {
            const RatFun c = pairing(tm->m_in_p[row], done_p[t], weight) / done_norm[t];
            if (c.is_zero()) continue;
            for (size_t k = 0; k < sz; ++k) {
                if (!done_m[t][k].is_zero()) pm[k] -= c * done_m[t][k];
                if (!done_p[t][k].is_zero()) pp[k] -= c * done_p[t][k];
            }
        }

        JackEntry entry;
        entry.norm = pairing(pp, pp, weight);
        entry.c = c_lambda(lambda);
        for (size_t k = 0; k < sz; ++k) {
            if (pm[k].is_zero()) continue;
            entry.P.add_term(tm->order[k], pm[k]);
            entry.J.add_term(tm->order[k],
                             pm[k] * RatFun(entry.c) / RatFun(BigRat(aug_factor(tm->order[k]))));
        }

        done_m.push_back(std::move(pm));
        done_p.push_back(std::move(pp));
        done_norm.push_back(entry.norm);
        table.entries.emplace(lambda, std::move(entry));
    }
    return table;
}

JackTable build_jack_table(int n) {
    std::vector<Partition> order = enumerate_partitions(n);
    std::reverse(order.begin(), order.end());
    return build_jack_table(n, order);
}

namespace {

std::shared_mutex g_jack_mutex;
std::map<int, std::shared_ptr<const JackTable>> g_jack_cache;

} // namespace

std::shared_ptr<const JackTable> jack_table(int n) {
    {
        std::shared_lock lock(g_jack_mutex);
        auto it = g_jack_cache.find(n);
        if (it != g_jack_cache.end()) return it->second;
    }
    auto built = std::make_shared<const JackTable>(build_jack_table(n));
    std::unique_lock lock(g_jack_mutex);
    auto [it, inserted] = g_jack_cache.emplace(n, std::move(built));
    return it->second;
}

SymFunc jack_P(const Partition& lambda) {
    return jack_table(lambda.weight())->entries.at(lambda).P;
}

AlphaPoly c_lambda(const Partition& lambda) {
    AlphaPoly c(1);
    for (const Cell& s : lambda.cells()) {
        const ArmLeg al = arm_leg(lambda, s);
        c *= AlphaPoly::linear(BigRat(al.arm), BigRat(al.leg + 1));
    }
    return c;
}

SymFunc jack_J(const Partition& lambda) {
    return jack_table(lambda.weight())->entries.at(lambda).J;
}

RatFun norm_closed_form(const Partition& lambda) {
    AlphaPoly num(1);
    AlphaPoly den(1);
    for (const Cell& s : lambda.cells()) {
        const ArmLeg al = arm_leg(lambda, s);
        num *= AlphaPoly::linear(BigRat(al.arm + 1), BigRat(al.leg));
        den *= AlphaPoly::linear(BigRat(al.arm), BigRat(al.leg + 1));
    }
    return RatFun(num, den);
}

CheckReport positivity_check(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    CheckReport rep;
    rep.title = "Integral-form coefficient positivity to degree " + std::to_string(n_max);
    for (int d = 0; d <= n_max; ++d) {
        const auto table = jack_table(d);
        for (const auto& [lambda, entry] : table->entries) {
            bool ok = true;
            std::string detail;
            for (const auto& [mu, c] : entry.J.terms())
                if (!c.is_nonneg_int_poly()) {
                    ok = false;
                    detail = "coefficient of mtilde" + mu.to_string() + " is " + c.to_string();
                    break;
                }
            rep.add("J" + lambda.to_string(), ok, detail);
        }
    }
    return rep;
}

} // namespace jacksym
