#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hubmdl/codelength.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline std::uint64_t draw(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline std::vector<std::uint64_t> random_vector(Rng& rng, std::size_t n, std::uint64_t cap) {
    std::vector<std::uint64_t> k(n);
    for (auto& x : k) x = draw(rng, 0, cap);
    return k;
}

// Small instance valid for the family of `enc`: N in [1, max_n], entries <= 8
// (and <= N - 1 for simple graphs).
inline std::vector<std::uint64_t> small_instance(Rng& rng, hubmdl::EncodingKind enc,
                                                 std::size_t max_n = 10) {
    const std::size_t n = draw(rng, 1, max_n);
    const bool simple = hubmdl::family_of(enc) == hubmdl::GraphFamily::simple;
    return random_vector(rng, n, simple ? std::min<std::uint64_t>(8, n - 1) : 8);
}

}  // namespace testing
