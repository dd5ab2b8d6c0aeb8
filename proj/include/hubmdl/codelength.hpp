#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace hubmdl {

/// Description length in bits. Real-valued: no ceiling is applied.
using Bits = double;

using Degree = std::uint64_t;

/// In- or out-degree sequence k_1..k_N together with M = sum of k_i.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<Degree> degrees);
    DegreeSequence(std::initializer_list<Degree> degrees)
        : DegreeSequence(std::vector<Degree>(degrees)) {}

    std::size_t n_nodes() const noexcept { return degrees_.size(); }
    Degree total() const noexcept { return total_; }
    std::span<const Degree> degrees() const noexcept { return degrees_; }
    Degree operator[](std::size_t i) const { return degrees_[i]; }
    Degree max() const noexcept;
    bool empty() const noexcept { return degrees_.empty(); }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<Degree> degrees_;
    Degree total_ = 0;
};

enum class EncodingKind { ERs, CMs, ERm, CMm };

enum class GraphFamily { simple, multigraph };

constexpr GraphFamily family_of(EncodingKind enc) noexcept {
    return (enc == EncodingKind::ERs || enc == EncodingKind::CMs) ? GraphFamily::simple
                                                                  : GraphFamily::multigraph;
}

constexpr bool is_er(EncodingKind enc) noexcept {
    return enc == EncodingKind::ERs || enc == EncodingKind::ERm;
}

constexpr EncodingKind er_encoding(GraphFamily f) noexcept {
    return f == GraphFamily::simple ? EncodingKind::ERs : EncodingKind::ERm;
}

constexpr EncodingKind cm_encoding(GraphFamily f) noexcept {
    return f == GraphFamily::simple ? EncodingKind::CMs : EncodingKind::CMm;
}

std::string_view to_string(EncodingKind enc) noexcept;
std::string_view to_string(GraphFamily family) noexcept;

/// Case-insensitive "ers", "cms", "erm", "cmm". Throws ParameterError.
EncodingKind parse_encoding(std::string_view name);
GraphFamily parse_family(std::string_view name);

/// log2 C(n, k). Accurate to about 1e-15 relative; exact-to-1e-9 bits for
/// small arguments. Throws DomainError when k > n.
Bits log2_binomial(std::uint64_t n, std::uint64_t k);

/// log2 of the multiset coefficient C(n + k - 1, k): ways to place k
/// indistinguishable items into n slots with repetition.
Bits log2_multiset(std::uint64_t n, std::uint64_t k);

/// Throws FeasibilityError for ERs/CMs when some k_i > N - 1 or
/// M > N(N - 1). No-op for multigraph encodings.
void check_feasible(EncodingKind enc, const DegreeSequence& deg);

/// No-hub description length L_0 for the given encoding.
Bits baseline_dl(EncodingKind enc, const DegreeSequence& deg);

/// Per-hub contribution to the CM encodings, log2 C(N-1, k) or
/// log2 multiset(N, k). Zero for ER encodings.
Bits hub_degree_term(EncodingKind enc, std::uint64_t n_nodes, Degree k);

/// Sufficient statistics of a hub set for the hub-based code lengths.
struct HubSummary {
    std::uint64_t h = 0;     ///< number of hubs
    Degree m_h = 0;          ///< cumulative hub degree
    Bits hub_terms = 0.0;    ///< sum of hub_degree_term over the hubs (CM only)
};

/// Hub-based description length from (N, M, h, M_h). Callers must handle the
/// h in {0, N} and M = 0 conventions; this evaluates the formula directly and
/// requires 1 <= h < N, M > 0.
Bits hub_dl_terms(EncodingKind enc, std::uint64_t n_nodes, Degree total,
                  const HubSummary& hubs);

/// Hub-based description length for a hub set given by its degrees (any
/// order). Applies the conventions L = L_0 for h in {0, N} and L = 0 for
/// M = 0. Throws DomainError when hub_degrees is not a sub-multiset of deg.
Bits hub_dl(EncodingKind enc, const DegreeSequence& deg, std::span<const Degree> hub_degrees);

}  // namespace hubmdl
