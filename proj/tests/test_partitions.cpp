#include <doctest.h>

#include <algorithm>

#include "jacksym/partition.hpp"

using namespace jacksym;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<Partition> all_up_to(int n_max) {
    std::vector<Partition> out;
    for (int n = 0; n <= n_max; ++n) {
        auto degree = enumerate_partitions(n);
        out.insert(out.end(), degree.begin(), degree.end());
    }
    return out;
}

} // namespace

TEST_CASE("constructor validates shape") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
    CHECK(Partition::from_unsorted({0, 1, 3, 0, 2}) == P({3, 2, 1}));
    CHECK_THROWS_AS(Partition::from_unsorted({1, -2}), std::invalid_argument);
    CHECK(P({3, 1}).weight() == 4);
    CHECK(P({3, 1}).length() == 2);
    CHECK(P({3, 1}).part(1) == 3);
    CHECK(P({3, 1}).part(5) == 0);
    CHECK(P({2, 2, 1}).multiplicity(2) == 2);
    CHECK(P({3, 1}).to_string() == "(3,1)");
    CHECK(Partition().to_string() == "()");
}

TEST_CASE("enumeration is complete and canonically ordered") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_partitions(4) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    CHECK(enumerate_partitions(8).size() == 22);

    for (int n = 0; n <= 9; ++n) {
        const auto list = enumerate_partitions(n);
        for (size_t k = 0; k + 1 < list.size(); ++k)
            CHECK(canonical_less(list[k], list[k + 1]));
    }
}

TEST_CASE("canonical order refines dominance") {
    for (int n = 0; n <= 9; ++n) {
        const auto list = enumerate_partitions(n);
        for (size_t a = 0; a < list.size(); ++a)
            for (size_t b = 0; b < list.size(); ++b) {
                if (a == b) continue;
                if (dominance_leq(list[b], list[a])) CHECK(a < b);
            }
    }
}

TEST_CASE("conjugation is an involution and transposes arms with legs") {
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(P({2, 2}).conjugate() == P({2, 2}));

    for (const auto& lambda : all_up_to(12)) CHECK(lambda.conjugate().conjugate() == lambda);

    for (const auto& lambda : all_up_to(8)) {
        const Partition conj = lambda.conjugate();
        for (const Cell& s : lambda.cells()) {
            const ArmLeg here = arm_leg(lambda, s);
            const ArmLeg there = arm_leg(conj, {s.col, s.row});
            CHECK(here.arm == there.leg);
            CHECK(here.leg == there.arm);
        }
    }
}

TEST_CASE("dominance order basics") {
    CHECK(dominance_leq(P({2, 2}), P({3, 1})));
    CHECK_FALSE(dominance_leq(P({3, 1, 1, 1}), P({2, 2, 2})));
    CHECK_FALSE(dominance_leq(P({2, 2, 2}), P({3, 1, 1, 1})));
    CHECK(dominance_leq(P({2, 1}), P({2, 1})));
    CHECK_THROWS_AS(dominance_leq(P({2}), P({1})), DegreeMismatch);
}

TEST_CASE("dominance is a partial order on each degree") {
    for (int n = 0; n <= 9; ++n) {
        const auto list = enumerate_partitions(n);
        for (const auto& a : list) CHECK(dominance_leq(a, a));
        for (const auto& a : list)
            for (const auto& b : list) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : list)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
    }
}

TEST_CASE("conjugation anti-commutes with dominance") {
    for (int n = 0; n <= 9; ++n) {
        const auto list = enumerate_partitions(n);
        for (const auto& lambda : list)
            for (const auto& mu : list)
                CHECK(dominance_leq(mu, lambda) ==
                      dominance_leq(lambda.conjugate(), mu.conjugate()));
    }
}

TEST_CASE("arms and legs") {
    CHECK(arm_leg(P({2}), {1, 1}).arm == 1);
    CHECK(arm_leg(P({2}), {1, 1}).leg == 0);
    CHECK(arm_leg(P({1, 1}), {1, 1}).arm == 0);
    CHECK(arm_leg(P({1, 1}), {1, 1}).leg == 1);
    CHECK(arm_leg(P({2, 1}), {1, 1}).arm == 1);
    CHECK(arm_leg(P({2, 1}), {1, 1}).leg == 1);
    CHECK_THROWS_AS(arm_leg(P({2, 1}), {2, 2}), CellOutOfDiagram);
    CHECK_THROWS_AS(arm_leg(P({2, 1}), {3, 1}), CellOutOfDiagram);
    CHECK(P({3, 1}).cells().size() == 4);
}

TEST_CASE("counting factors") {
    CHECK(z_factor(P({2})) == 2);
    CHECK(z_factor(P({1, 1})) == 2);
    CHECK(z_factor(P({2, 1, 1})) == 4);
    CHECK(z_factor(Partition()) == 1);
    CHECK(aug_factor(P({1, 1, 1})) == 6);
    CHECK(aug_factor(P({3, 2, 1})) == 1);
    CHECK(aug_factor(P({2, 2, 1})) == 2);
}

TEST_CASE("multiset union") {
    CHECK(union_of(P({2, 1}), P({3})) == P({3, 2, 1}));
    CHECK(union_of(P({2, 1}), Partition()) == P({2, 1}));
    CHECK(union_of(P({2}), P({2})) == P({2, 2}));
}
