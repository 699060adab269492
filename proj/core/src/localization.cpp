#include "jacksym/localization.hpp"

#include <stdexcept>
#include <string>

namespace jacksym {

LaurentChar tangent_character(const Partition& lambda) {
    LaurentChar ch;
    for (const Cell& s : lambda.cells()) {
        const ArmLeg al = arm_leg(lambda, s);
        ch.add(al.leg + 1, -al.arm);
        ch.add(-al.leg, al.arm + 1);
    }
    return ch;
}

AlphaPoly s1_weight(int p, int q) { return AlphaPoly::linear(BigRat(q), BigRat(-p)); }

namespace {

AlphaPoly cell_product(const Partition& lambda, bool shift_arm) {
    // shift_arm: alpha*(a+1) + l; otherwise -alpha*a - l - 1.
    AlphaPoly prod(1);
    for (const Cell& s : lambda.cells()) {
        const ArmLeg al = arm_leg(lambda, s);
        if (shift_arm)
            prod *= AlphaPoly::linear(BigRat(al.arm + 1), BigRat(al.leg));
        else
            prod *= AlphaPoly::linear(BigRat(-al.arm), BigRat(-al.leg - 1));
    }
    return prod;
}

} // namespace

EulerClass euler_total_closed_form(const Partition& lambda) {
    return {RatFun(cell_product(lambda, false) * cell_product(lambda, true)),
            2 * lambda.weight()};
}

EulerClass euler_pos_closed_form(const Partition& lambda) {
    return {RatFun(cell_product(lambda, true)), lambda.weight()};
}

EulerClass euler_nonpos_closed_form(const Partition& lambda) {
    return {RatFun(cell_product(lambda, false)), lambda.weight()};
}

FixedPointData euler_classes(const Partition& lambda) {
    FixedPointData data;
    data.lambda = lambda;
    data.character = tangent_character(lambda);

    AlphaPoly pos(1);
    AlphaPoly nonpos(1);
    int pos_power = 0;
    int nonpos_power = 0;
    for (const auto& [pq, mult] : data.character.terms) {
        const AlphaPoly w = s1_weight(pq.first, pq.second);
        if (w.is_zero())
            throw ZeroWeight("character term (" + std::to_string(pq.first) + "," +
                             std::to_string(pq.second) + ") of " + lambda.to_string() +
                             " has zero circle weight");
        AlphaPoly& half = pq.second > 0 ? pos : nonpos;
        int& power = pq.second > 0 ? pos_power : nonpos_power;
        for (int t = 0; t < mult; ++t) half *= w;
        power += mult;
    }
    data.euler_pos = {RatFun(pos), pos_power};
    data.euler_nonpos = {RatFun(nonpos), nonpos_power};
    data.euler_total = {data.euler_pos.coeff * data.euler_nonpos.coeff,
                        pos_power + nonpos_power};

    if (!(data.euler_total == euler_total_closed_form(lambda)) ||
        !(data.euler_pos == euler_pos_closed_form(lambda)) ||
        !(data.euler_nonpos == euler_nonpos_closed_form(lambda)))
        throw std::logic_error("Euler class of " + lambda.to_string() +
                               " disagrees with its closed form");
    return data;
}

RatFun f_pairing(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw DegreeMismatch("fixed-point classes pair within one degree, got " +
                             std::to_string(lambda.weight()) + " and " +
                             std::to_string(mu.weight()));
    if (lambda != mu) return {};
    const FixedPointData data = euler_classes(lambda);
    const int u_power = data.euler_total.u_power - 2 * data.euler_nonpos.u_power;
    if (u_power != 0)
        throw std::logic_error("u powers fail to cancel in the self-pairing of " +
                               lambda.to_string());
    return data.euler_total.coeff / (data.euler_nonpos.coeff * data.euler_nonpos.coeff);
}

std::vector<mpz_class> goettsche_dim(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    std::vector<mpz_class> c(static_cast<size_t>(n_max) + 1, mpz_class(0));
    c[0] = 1;
    for (int m = 1; m <= n_max; ++m)
        for (int j = m; j <= n_max; ++j)
            c[static_cast<size_t>(j)] += c[static_cast<size_t>(j - m)];
    return c;
}

} // namespace jacksym
