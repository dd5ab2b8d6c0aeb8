#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "hubmdl/codelength.hpp"
#include "hubmdl/methods.hpp"

namespace hubmdl {

using Rng = std::mt19937_64;

/// Independent generator for the stream keyed by (seed, keys...). Streams for
/// different keys do not depend on the order in which they are created.
Rng make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys = {});

// --- degree distributions ---------------------------------------------------

enum class DistFamily { poisson, geometric, zipf };

std::string_view to_string(DistFamily family) noexcept;
DistFamily parse_dist_family(std::string_view name);

/// Poisson on {0, 1, ...}; Geometric on {1, 2, ...} with p = 1 / mean; Zipf on
/// {1, ..., k_max} with the exponent solved from the mean.
struct DegreeDistribution {
    DistFamily family = DistFamily::poisson;
    double mean = 1.0;
};

/// Truncation point used for Zipf samples: max(1e7, 1e3 * mean).
std::uint64_t zipf_kmax(double mean);

/// Mean of P(k) proportional to k^-s on {1, ..., k_max}.
double zipf_truncated_mean(double s, std::uint64_t k_max);

/// Exponent s >= 0 whose truncated Zipf mean equals `mean` (relative error
/// below 1e-9), by bisection. Throws ParameterError unless
/// 1 < mean < (k_max + 1) / 2.
double solve_zipf_exponent(double mean, std::uint64_t k_max);

/// Reusable sampler; the Zipf inverse-CDF table is built once and shared by
/// copies. Thread-safe for concurrent sample() calls with distinct generators.
class DegreeSampler {
public:
    explicit DegreeSampler(const DegreeDistribution& dist);

    const DegreeDistribution& distribution() const noexcept { return dist_; }
    /// Zipf exponent in use (zipf only).
    double zipf_exponent() const noexcept { return zipf_s_; }

    DegreeSequence sample(std::size_t n, Rng& rng) const;

private:
    DegreeDistribution dist_;
    double zipf_s_ = 0.0;
    std::shared_ptr<const std::vector<double>> zipf_cdf_;
};

/// n independent draws from `dist`, deterministic in `seed`.
DegreeSequence sample_degrees(const DegreeDistribution& dist, std::size_t n, std::uint64_t seed);

// --- Price growth model -----------------------------------------------------

struct PriceParams {
    std::size_t m = 1;        ///< out-degree of each arrival and number of seed nodes
    double alpha = 0.0;       ///< attachment exponent
    std::size_t t_max = 100;  ///< number of arrivals T
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;  ///< extra RNG key separating sweep cells
    /// Draw an arrival's m targets without replacement instead of independently.
    bool distinct_targets = false;
};

void validate(const PriceParams& params);

/// In-degree sequences after every arrival: steps[t - 1] holds the m + t
/// in-degrees after step t.
struct GrowthTrace {
    std::size_t m = 0;
    double alpha = 0.0;
    std::vector<DegreeSequence> steps;
};

/// One growth run. Each of an arrival's m out-edges picks an existing node j
/// independently with probability proportional to (k_j + 1)^alpha, using the
/// in-degrees from before the arrival; repeated picks become parallel edges.
/// With distinct_targets the m picks are made one after another among the
/// nodes not yet chosen by that arrival.
GrowthTrace price_simulate(const PriceParams& params, std::uint64_t seed);
GrowthTrace price_simulate(const PriceParams& params, Rng& rng);

/// h*(t) for every trial, method and step: counts[trial][method][t - 1].
/// Trial i uses the stream (params.seed, params.stream, i).
using HubCounts = std::vector<std::vector<std::vector<double>>>;
HubCounts price_hub_counts(const PriceParams& params, std::span<const HubMethod> methods,
                           std::size_t workers = 1);

/// First step at which the trial-mean h* reaches 1, or nullopt when it never
/// does within t_max.
std::optional<std::size_t> hub_transition(const PriceParams& params, EncodingKind enc,
                                          std::size_t workers = 1);

/// First step t with mean[t - 1] >= 1.
std::optional<std::size_t> first_crossing(std::span<const double> mean_by_step);

}  // namespace hubmdl
