#include "jacksym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jacksym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(weight_));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
    return out;
}

int Partition::multiplicity(int k) const {
    int m = 0;
    for (int p : parts_) m += (p == k) ? 1 : 0;
    return m;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(n, n == 0 ? 1 : n, stack, out);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw DegreeMismatch("dominance compares partitions of equal weight");
    long sum_mu = 0;
    long sum_la = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        sum_mu += mu.part(i);
        sum_la += lambda.part(i);
        if (sum_mu > sum_la) return false;
    }
    return true;
}

ArmLeg arm_leg(const Partition& lambda, const Cell& s) {
    if (s.row < 1 || s.row > lambda.length() || s.col < 1 || s.col > lambda.part(s.row))
        throw CellOutOfDiagram("cell (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                               ") is not in " + lambda.to_string());
    const int arm = lambda.part(s.row) - s.col;
    int leg = 0;
    for (int i = s.row + 1; i <= lambda.length(); ++i)
        leg += (lambda.part(i) >= s.col) ? 1 : 0;
    return {arm, leg};
}

mpz_class z_factor(const Partition& lambda) {
    mpz_class z(1);
    const auto& parts = lambda.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto m = static_cast<unsigned long>(j - i);
        mpz_class kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
        mpz_class mfact;
        mpz_fac_ui(mfact.get_mpz_t(), m);
        z *= kpow * mfact;
        i = j;
    }
    return z;
}

mpz_class aug_factor(const Partition& lambda) {
    mpz_class f(1);
    const auto& parts = lambda.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        mpz_class mfact;
        mpz_fac_ui(mfact.get_mpz_t(), static_cast<unsigned long>(j - i));
        f *= mfact;
        i = j;
    }
    return f;
}

Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end(), std::greater<>());
}

} // namespace jacksym
