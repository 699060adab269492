#include <doctest.h>

#include <memory>
#include <thread>
#include <vector>

#include "jacksym/jack.hpp"
#include "jacksym/verify.hpp"

using namespace jacksym;

TEST_CASE("memoized tables are safe under concurrent first access") {
    constexpr int kMaxDegree = 6;
    constexpr int kThreads = 4;

    std::vector<std::shared_ptr<const TransitionMatrix>> trans(kThreads * (kMaxDegree + 1));
    std::vector<std::shared_ptr<const JackTable>> jacks(kThreads * (kMaxDegree + 1));
    std::vector<std::thread> pool;
    pool.reserve(kThreads);
    for (int t = 0; t < kThreads; ++t)
        pool.emplace_back([&, t] {
            for (int n = 0; n <= kMaxDegree; ++n) {
                trans[t * (kMaxDegree + 1) + n] = transition_matrix(n);
                jacks[t * (kMaxDegree + 1) + n] = jack_table(n);
            }
        });
    for (auto& th : pool) th.join();

    for (int n = 0; n <= kMaxDegree; ++n) {
        // all threads observed one shared instance per degree
        for (int t = 1; t < kThreads; ++t) {
            CHECK(trans[t * (kMaxDegree + 1) + n] == trans[n]);
            CHECK(jacks[t * (kMaxDegree + 1) + n] == jacks[n]);
        }
        // and that instance matches a fresh serial construction
        const TransitionMatrix fresh_t = build_transition(n);
        CHECK(trans[n]->p_in_m == fresh_t.p_in_m);
        CHECK(trans[n]->m_in_p == fresh_t.m_in_p);
        const JackTable fresh_j = build_jack_table(n);
        REQUIRE(jacks[n]->entries.size() == fresh_j.entries.size());
        for (const auto& [lambda, e] : fresh_j.entries) {
            const JackEntry& cached = jacks[n]->entries.at(lambda);
            CHECK(cached.P == e.P);
            CHECK(cached.J == e.J);
            CHECK(cached.norm == e.norm);
        }
    }
}

TEST_CASE("warming the caches in parallel leaves them consistent") {
    verify::warm_caches(6, 4);
    CHECK(jack_table(6)->entries.size() == enumerate_partitions(6).size());
    CHECK(jack_P(Partition({2, 1})).coeff(Partition({1, 1, 1})) ==
          RatFun(6) / (RatFun::alpha() + RatFun(2)));
}
