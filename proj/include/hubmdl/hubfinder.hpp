#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hubmdl/codelength.hpp"

namespace hubmdl {

/// Outcome of an MDL hub search on one degree sequence.
struct HubResult {
    EncodingKind encoding = EncodingKind::ERm;
    std::size_t h_star = 0;
    std::vector<std::size_t> hub_ids;        ///< original node indices, ascending
    std::optional<Degree> threshold_degree;  ///< smallest hub degree; empty when h_star = 0
    Bits l_star = 0.0;
    Bits l0_er = 0.0;  ///< ER baseline of the encoding's family
    Bits l0_cm = 0.0;  ///< CM baseline of the encoding's family
    double eta = 1.0;
};

/// Greedy MDL hub identification.
///
/// Nodes are visited in descending degree order and added one block of equal
/// degree at a time, so a cutoff never splits nodes of the same degree; the
/// description length is evaluated at every block boundary and the smallest
/// one is kept (ties keep the smaller hub set). This is the f = 0 / f = 1
/// tie rule. The sort dominates: O(N log N).
///
/// An input with M = 0 returns h_star = 0 and l_star = 0.
HubResult identify_hubs(const DegreeSequence& deg, EncodingKind enc);

/// l_star / max(L0_ER, L0_CM) over the family's baseline pair. Returns 1 when
/// there is nothing to compress (M = 0 or both baselines are zero).
double inverse_compression_ratio(const DegreeSequence& deg, GraphFamily family, Bits l_star);

/// Runs the ER and CM encodings of the family and keeps the one with the
/// smaller l_star. Differences within 1e-9 bits go to ER.
std::pair<EncodingKind, HubResult> select_encoding(const DegreeSequence& deg, GraphFamily family);

inline constexpr std::size_t kBruteForceMaxNodes = 16;

/// Exhaustive minimum of the hub description length over all 2^N hub sets,
/// using exact big-integer codebook sizes. Ties prefer fewer hubs, then larger
/// cumulative hub degree, then the lexicographically smallest index set.
/// Throws SizeError for N > 16.
HubResult brute_force_hubs(const DegreeSequence& deg, EncodingKind enc);

}  // namespace hubmdl
