#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "specrange/parallel.hpp"

using namespace specrange;

TEST_CASE("every index runs exactly once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);
    parallel_for(0, [](std::size_t) { FAIL("called for empty range"); });
}

TEST_CASE("exceptions propagate") {
    CHECK_THROWS_AS(parallel_for(64,
                                 [](std::size_t i) {
                                     if (i == 17) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}

TEST_CASE("worker count honours the environment") {
    ::setenv("SPECRANGE_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    ::setenv("SPECRANGE_THREADS", "0", 1);
    CHECK(worker_count() >= 1);
    ::unsetenv("SPECRANGE_THREADS");
    CHECK(worker_count() >= 1);
}
