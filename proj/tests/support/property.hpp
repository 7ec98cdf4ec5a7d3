#pragma once

// Minimal seeded property runner: draws `cases` inputs from `gen` and reports
// the first failing case index and seed through doctest.

#include <cstdint>
#include <string>

#include <doctest.h>

#include "specrange/rng.hpp"

namespace proptest {

template <typename Gen, typename Check>
void for_all(std::uint64_t seed, std::size_t cases, Gen gen, Check check) {
    for (std::size_t i = 0; i < cases; ++i) {
        auto engine = specrange::rng::make_engine(seed, i);
        auto input = gen(engine);
        INFO("property case " << i << " (seed " << seed << ")");
        check(input);
    }
}

inline double uniform(specrange::rng::Engine& e, double lo, double hi) {
    return lo + (hi - lo) * specrange::rng::unit_double(e);
}

inline std::size_t uniform_size(specrange::rng::Engine& e, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(specrange::rng::unit_double(e) * static_cast<double>(hi - lo + 1));
}

}  // namespace proptest
