#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "jacksym/errors.hpp"

namespace jacksym {

/// Box of a Young diagram, 1-based: row i, column j.
struct Cell {
    int row;
    int col;
};

/// Integer partition stored as a weakly decreasing vector of positive parts.
/// The empty partition is allowed and denotes the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    /// Sorts descending and drops zeros; negative entries are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }

    Partition conjugate() const;
    std::vector<Cell> cells() const;

    /// Multiplicity of the part value k.
    int multiplicity(int k) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string to_string() const; // "(3,1)" and "()" for the empty partition

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in canonical order: weight n fixed, parts compared
/// lexicographically with larger first, so (n) comes first and (1^n) last.
/// This order is a linear extension of dominance.
std::vector<Partition> enumerate_partitions(int n);

/// mu <= lambda in dominance order: equal weights and every prefix sum of
/// mu is at most the matching prefix sum of lambda. Throws DegreeMismatch
/// when the weights differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Arm and leg of a cell: boxes strictly right in the row, strictly below
/// in the column. Throws CellOutOfDiagram when the cell is not in lambda.
struct ArmLeg {
    int arm;
    int leg;
};
ArmLeg arm_leg(const Partition& lambda, const Cell& s);

/// z_lambda = prod_k k^{m_k} m_k!.
mpz_class z_factor(const Partition& lambda);

/// prod_k m_k! over the part multiplicities m_k.
mpz_class aug_factor(const Partition& lambda);

/// Multiset union of parts, re-sorted decreasing.
Partition union_of(const Partition& a, const Partition& b);

/// Strict total order: weight ascending, then lexicographic with larger
/// parts first. Matches the order of enumerate_partitions within a weight.
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

} // namespace jacksym
