#include "jacksym/sym_func.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace jacksym {

std::string basis_tag(Basis b) {
    switch (b) {
    case Basis::Monomial: return "m";
    case Basis::PowerSum: return "p";
    case Basis::AugmentedMonomial: return "mtilde";
    }
    throw std::logic_error("unknown basis");
}

std::optional<Basis> basis_from_tag(const std::string& tag) {
    if (tag == "m") return Basis::Monomial;
    if (tag == "p") return Basis::PowerSum;
    if (tag == "mtilde") return Basis::AugmentedMonomial;
    return std::nullopt;
}

void SymFunc::add_term(const Partition& lambda, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> SymFunc::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.weight();
    for (const auto& [lambda, c] : terms_)
        if (lambda.weight() != d) return std::nullopt;
    return d;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(basis_);
    for (const auto& [lambda, c] : terms_) r.terms_.emplace(lambda, -c);
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_)
        throw std::invalid_argument("cannot add elements expressed in different bases");
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_)
        throw std::invalid_argument("cannot subtract elements expressed in different bases");
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const RatFun& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, v] : terms_) v *= c;
    return *this;
}

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "(" << c.to_string() << ")*";
        os << basis_tag(basis_) << lambda.to_string();
    }
    return os.str();
}

std::map<Partition, long, CanonicalLess> p_mult_m(int i, const Partition& lambda) {
    if (i <= 0) throw std::invalid_argument("p_mult_m expects a positive part size");
    std::map<Partition, long, CanonicalLess> out;
    std::vector<int> values{0};
    for (int p : lambda.parts())
        if (values.back() != p) values.push_back(p); // parts are sorted, dedup adjacents
    for (int v : values) {
        std::vector<int> parts = lambda.parts();
        if (v == 0) {
            parts.push_back(i);
        } else {
            auto it = std::find(parts.begin(), parts.end(), v);
            *it = v + i;
        }
        Partition mu = Partition::from_unsorted(std::move(parts));
        out[mu] += mu.multiplicity(v + i);
    }
    return out;
}

TransitionMatrix build_transition(int n) {
    TransitionMatrix t;
    t.degree = n;
    t.order = enumerate_partitions(n);
    const size_t sz = t.order.size();
    for (size_t r = 0; r < sz; ++r) t.index.emplace(t.order[r], static_cast<int>(r));

    t.p_in_m.assign(sz, std::vector<RatFun>(sz));
    for (size_t r = 0; r < sz; ++r) {
        std::map<Partition, BigRat, CanonicalLess> acc;
        acc.emplace(Partition(), BigRat(1));
        for (int k : t.order[r].parts()) {
            std::map<Partition, BigRat, CanonicalLess> next;
            for (const auto& [mu, c] : acc)
                for (const auto& [nu, mult] : p_mult_m(k, mu)) {
                    auto [it, inserted] = next.emplace(nu, c * BigRat(mult));
                    if (!inserted) it->second += c * BigRat(mult);
                }
            acc = std::move(next);
        }
        for (const auto& [mu, c] : acc) {
            if (c.is_zero()) continue;
            const auto col = static_cast<size_t>(t.index.at(mu));
            if (col > r)
                throw std::logic_error("power-sum expansion escapes the dominance triangle at " +
                                       t.order[r].to_string());
            t.p_in_m[r][col] = RatFun(AlphaPoly(c));
        }
        if (t.p_in_m[r][r] != RatFun(AlphaPoly(BigRat(aug_factor(t.order[r])))))
            throw std::logic_error("diagonal of the p-to-m matrix differs from aug_factor at " +
                                   t.order[r].to_string());
    }

    // Invert the lower-triangular matrix row by row, back to front.
    t.m_in_p.assign(sz, std::vector<RatFun>(sz));
    for (size_t r = 0; r < sz; ++r) {
        for (size_t jj = r + 1; jj-- > 0;) {
            RatFun sum;
            for (size_t k = jj + 1; k <= r; ++k) sum += t.m_in_p[r][k] * t.p_in_m[k][jj];
            RatFun rhs = (r == jj) ? RatFun(1) : RatFun();
            t.m_in_p[r][jj] = (rhs - sum) / t.p_in_m[jj][jj];
        }
    }
    return t;
}

namespace {

std::shared_mutex g_transition_mutex;
std::map<int, std::shared_ptr<const TransitionMatrix>> g_transition_cache;

} // namespace

std::shared_ptr<const TransitionMatrix> transition_matrix(int n) {
    {
        std::shared_lock lock(g_transition_mutex);
        auto it = g_transition_cache.find(n);
        if (it != g_transition_cache.end()) return it->second;
    }
    auto built = std::make_shared<const TransitionMatrix>(build_transition(n));
    std::unique_lock lock(g_transition_mutex);
    auto [it, inserted] = g_transition_cache.emplace(n, std::move(built));
    return it->second;
}

namespace {

SymFunc to_monomial(const SymFunc& f) {
    if (f.basis() == Basis::Monomial) return f;
    SymFunc out(Basis::Monomial);
    if (f.basis() == Basis::AugmentedMonomial) {
        for (const auto& [lambda, c] : f.terms())
            out.add_term(lambda, c * RatFun(BigRat(aug_factor(lambda))));
        return out;
    }
    for (const auto& [lambda, c] : f.terms()) {
        const auto tm = transition_matrix(lambda.weight());
        const auto row = static_cast<size_t>(tm->index.at(lambda));
        for (size_t col = 0; col < tm->order.size(); ++col) {
            const RatFun& e = tm->p_in_m[row][col];
            if (!e.is_zero()) out.add_term(tm->order[col], c * e);
        }
    }
    return out;
}

SymFunc from_monomial(const SymFunc& f, Basis target) {
    if (target == Basis::Monomial) return f;
    SymFunc out(target);
    if (target == Basis::AugmentedMonomial) {
        for (const auto& [lambda, c] : f.terms())
            out.add_term(lambda, c / RatFun(BigRat(aug_factor(lambda))));
        return out;
    }
    for (const auto& [lambda, c] : f.terms()) {
        const auto tm = transition_matrix(lambda.weight());
        const auto row = static_cast<size_t>(tm->index.at(lambda));
        for (size_t col = 0; col < tm->order.size(); ++col) {
            const RatFun& e = tm->m_in_p[row][col];
            if (!e.is_zero()) out.add_term(tm->order[col], c * e);
        }
    }
    return out;
}

} // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    return from_monomial(to_monomial(f), target);
}

RatFun inner_product(const SymFunc& f, const SymFunc& g) {
    const SymFunc fp = convert(f, Basis::PowerSum);
    const SymFunc gp = convert(g, Basis::PowerSum);
    RatFun sum;
    const auto& small = fp.term_count() <= gp.term_count() ? fp : gp;
    const auto& large = fp.term_count() <= gp.term_count() ? gp : fp;
    for (const auto& [lambda, c] : small.terms()) {
        const RatFun d = large.coeff(lambda);
        if (d.is_zero()) continue;
        AlphaPoly w = pow(AlphaPoly::alpha(), static_cast<unsigned long>(lambda.length()));
        w.scale(BigRat(z_factor(lambda)));
        sum += c * d * RatFun(w);
    }
    return sum;
}

RatFun geometric_pairing(const SymFunc& f, const SymFunc& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto df = f.homogeneous_degree();
    const auto dg = g.homogeneous_degree();
    if (!df || !dg)
        throw DegreeMismatch("geometric pairing requires homogeneous arguments");
    if (*df != *dg)
        throw DegreeMismatch("geometric pairing requires equal degrees, got " +
                             std::to_string(*df) + " and " + std::to_string(*dg));
    RatFun r = inner_product(f, g);
    if (*df % 2 != 0) r = -r;
    return r;
}

SymFunc p_multiply(int i, const SymFunc& f) {
    if (i <= 0) throw std::invalid_argument("p_multiply expects a positive index");
    const SymFunc fp = convert(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    const Partition pi({i});
    for (const auto& [lambda, c] : fp.terms()) out.add_term(union_of(lambda, pi), c);
    return out;
}

namespace {

// (-1)^{i-1} * i * (-alpha) for i >= 1: the scalar in front of d/dp_i.
AlphaPoly annihilation_scalar(int i) {
    const long c1 = (i % 2 == 1) ? -static_cast<long>(i) : static_cast<long>(i);
    return AlphaPoly::linear(BigRat(c1), BigRat(0));
}

Partition remove_one_part(const Partition& lambda, int i) {
    std::vector<int> parts = lambda.parts();
    parts.erase(std::find(parts.begin(), parts.end(), i));
    return Partition(std::move(parts));
}

} // namespace

SymFunc annihilation(int i, const SymFunc& f) {
    if (i <= 0) throw std::invalid_argument("annihilation expects a positive index");
    const SymFunc fp = convert(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    const RatFun scalar{annihilation_scalar(i)};
    for (const auto& [lambda, c] : fp.terms()) {
        const int mult = lambda.multiplicity(i);
        if (mult == 0) continue;
        out.add_term(remove_one_part(lambda, i), c * scalar * RatFun(mult));
    }
    return out;
}

SymFunc heisenberg_op(int k, const SymFunc& f) {
    if (k == 0) throw std::invalid_argument("Heisenberg mode 0 is not an operator here");
    return k > 0 ? annihilation(k, f) : p_multiply(-k, f);
}

namespace {

SymFunc state_of(const Partition& lambda) {
    SymFunc f(Basis::PowerSum);
    f.add_term(lambda, RatFun(1));
    return f;
}

} // namespace

CheckReport heisenberg_commutator_check(int n_max) {
    if (n_max <= 0) throw std::invalid_argument("n_max must be positive");
    CheckReport rep;
    rep.title = "Heisenberg relations to degree " + std::to_string(n_max);

    std::vector<Partition> states;
    for (int d = 0; d <= n_max; ++d) {
        auto part = enumerate_partitions(d);
        states.insert(states.end(), part.begin(), part.end());
    }

    // [H_i, H_j] = (-1)^{i-1} i delta_{i+j,0} (-alpha) id on every state.
    for (int i = -n_max; i <= n_max; ++i) {
        if (i == 0) continue;
        for (int j = -n_max; j <= n_max; ++j) {
            if (j == 0) continue;
            bool ok = true;
            std::string detail;
            for (const auto& lambda : states) {
                const SymFunc f = state_of(lambda);
                const SymFunc lhs =
                    heisenberg_op(i, heisenberg_op(j, f)) - heisenberg_op(j, heisenberg_op(i, f));
                SymFunc rhs(Basis::PowerSum);
                if (i + j == 0) {
                    const long s = (std::abs(i) % 2 == 1) ? i : -i;
                    rhs = f * RatFun(AlphaPoly::linear(BigRat(-s), BigRat(0)));
                }
                if (lhs != rhs) {
                    ok = false;
                    detail = "fails on p" + lambda.to_string() + ": got " + lhs.to_string() +
                             ", expected " + rhs.to_string();
                    break;
                }
            }
            rep.add("commutator i=" + std::to_string(i) + " j=" + std::to_string(j), ok, detail);
        }
    }

    // Power identity [A_i^m, B_j^n] = n(n-1)...(n-m+1) delta_{ij} s^m B_j^{n-m}
    // with s the annihilation scalar; for i = j it holds on p_i-free states.
    for (int i = 1; i <= n_max; ++i) {
        for (int m = 1; m * i <= n_max; ++m) {
            for (int j = 1; j <= n_max; ++j) {
                for (int n = 1; n * j <= n_max; ++n) {
                    bool ok = true;
                    std::string detail;
                    for (const auto& mu : states) {
                        if (mu.weight() + n * j > n_max) continue;
                        if (i == j && mu.multiplicity(i) > 0) continue;
                        const SymFunc f = state_of(mu);
                        SymFunc up = f;
                        for (int t = 0; t < n; ++t) up = p_multiply(j, up);
                        for (int t = 0; t < m; ++t) up = annihilation(i, up);
                        SymFunc down = f;
                        for (int t = 0; t < m; ++t) down = annihilation(i, down);
                        for (int t = 0; t < n; ++t) down = p_multiply(j, down);
                        const SymFunc lhs = up - down;

                        SymFunc rhs(Basis::PowerSum);
                        if (i == j && m <= n) {
                            long falling = 1;
                            for (int t = 0; t < m; ++t) falling *= (n - t);
                            RatFun scalar{BigRat(falling)};
                            scalar *= pow(RatFun(annihilation_scalar(i)), m);
                            rhs = f * scalar;
                            for (int t = 0; t < n - m; ++t) rhs = p_multiply(j, rhs);
                        }
                        if (lhs != rhs) {
                            ok = false;
                            detail = "fails on p" + mu.to_string() + ": got " + lhs.to_string() +
                                     ", expected " + rhs.to_string();
                            break;
                        }
                    }
                    rep.add("power commutator i=" + std::to_string(i) + " m=" + std::to_string(m) +
                                " j=" + std::to_string(j) + " n=" + std::to_string(n),
                            ok, detail);
                }
            }
        }
    }
    return rep;
}

} // namespace jacksym
