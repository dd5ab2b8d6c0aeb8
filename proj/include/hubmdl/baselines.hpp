#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hubmdl/codelength.hpp"

namespace hubmdl {

enum class BaselineMethod { average, loubar };

std::string_view to_string(BaselineMethod method) noexcept;

struct BaselineResult {
    BaselineMethod method = BaselineMethod::average;
    std::vector<std::size_t> hub_ids;  ///< ascending node indices
    std::size_t h = 0;
};

/// Hubs are nodes with k_i >= M / N, compared exactly as k_i * N >= M.
/// An all-zero sequence makes every node a hub.
BaselineResult average_hubs(const DegreeSequence& deg);

/// Lorenz-curve ("Loubar") hotspots: the top h = ceil(N * mean / max) nodes by
/// degree, ties at the cutoff going to the smaller node index.
/// Throws DomainError when every degree is zero.
BaselineResult loubar_hubs(const DegreeSequence& deg);

/// Shannon entropy of k_i / M in bits divided by log2 N, in [0, 1].
/// Throws DomainError when M = 0 or N < 2.
double normalized_degree_entropy(const DegreeSequence& deg);

}  // namespace hubmdl
