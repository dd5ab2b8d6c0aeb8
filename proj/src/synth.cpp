#include "hubmdl/synth.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "hubmdl/errors.hpp"
#include "hubmdl/parallel.hpp"

namespace hubmdl {

Rng make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::vector<std::uint32_t> words;
    words.reserve(2 + 2 * keys.size());
    auto push = [&](std::uint64_t v) {
        words.push_back(static_cast<std::uint32_t>(v));
        words.push_back(static_cast<std::uint32_t>(v >> 32));
    };
    push(seed);
    for (auto k : keys) push(k);
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

std::string_view to_string(DistFamily family) noexcept {
    switch (family) {
        case DistFamily::poisson: return "poisson";
        case DistFamily::geometric: return "geometric";
        case DistFamily::zipf: return "zipf";
    }
    return "?";
}

DistFamily parse_dist_family(std::string_view name) {
    if (name == "poisson") return DistFamily::poisson;
    if (name == "geometric") return DistFamily::geometric;
    if (name == "zipf") return DistFamily::zipf;
    throw ParameterError(
        fmt::format("unknown distribution '{}' (expected poisson|geometric|zipf)", name));
}

// --- Zipf ---------------------------------------------------------------------

namespace {

constexpr std::uint64_t kDirectTerms = 10000;

// sum_{k=a}^{b} k^-p. Terms up to kDirectTerms are summed directly; the rest
// uses Euler-Maclaurin with three Bernoulli corrections.
double power_sum(double p, std::uint64_t a, std::uint64_t b) {
    if (a > b) return 0.0;
    const std::uint64_t direct_end = std::min(b, std::max(a, kDirectTerms) - 1);
    double sum = 0.0;
    for (std::uint64_t k = direct_end; k >= a && k > 0; --k) {
        sum += std::pow(static_cast<double>(k), -p);
    }
    const std::uint64_t lo = std::max(a, direct_end + 1);
    if (lo > b) return sum;

    const double x0 = static_cast<double>(lo);
    const double x1 = static_cast<double>(b);
    const double t = 1.0 - p;
    const double log_ratio = std::log(x1 / x0);
    const double integral = std::abs(t) < 1e-12
                                ? log_ratio
                                : std::pow(x0, t) * std::expm1(t * log_ratio) / t;
    auto f = [&](double x, double q) { return std::pow(x, -q); };
    const double ends = 0.5 * (f(x0, p) + f(x1, p));
    // Odd derivatives of x^-p: d1 = -p x^-(p+1), d3 = -p(p+1)(p+2) x^-(p+3), ...
    const double c1 = -p;
    const double c3 = -p * (p + 1) * (p + 2);
    const double c5 = c3 * (p + 3) * (p + 4);
    const double corr = (c1 * (f(x1, p + 1) - f(x0, p + 1))) / 12.0 -
                        (c3 * (f(x1, p + 3) - f(x0, p + 3))) / 720.0 +
                        (c5 * (f(x1, p + 5) - f(x0, p + 5))) / 30240.0;
    return sum + integral + ends + corr;
}

std::shared_ptr<const std::vector<double>> zipf_cdf(double s, std::uint64_t k_max) {
    auto cdf = std::make_shared<std::vector<double>>(k_max);
    double acc = 0.0;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        acc += std::pow(static_cast<double>(k), -s);
        (*cdf)[k - 1] = acc;
    }
    for (double& c : *cdf) c /= acc;
    cdf->back() = 1.0;
    return cdf;
}

}  // namespace

std::uint64_t zipf_kmax(double mean) {
    return std::max<std::uint64_t>(10'000'000, static_cast<std::uint64_t>(std::ceil(1e3 * mean)));
}

double zipf_truncated_mean(double s, std::uint64_t k_max) {
    if (k_max == 0) throw ParameterError("zipf: k_max must be positive");
    return power_sum(s - 1.0, 1, k_max) / power_sum(s, 1, k_max);
}

double solve_zipf_exponent(double mean, std::uint64_t k_max) {
    const double upper_mean = (static_cast<double>(k_max) + 1.0) / 2.0;
    if (!(mean > 1.0) || !(mean < upper_mean)) {
        throw ParameterError(fmt::format(
            "zipf: mean {} outside the achievable range (1, {}) for support 1..{}", mean,
            upper_mean, k_max));
    }
    double lo = 0.0;
    double hi = 4.0;
    while (zipf_truncated_mean(hi, k_max) > mean) {
        hi *= 2.0;
        if (hi > 1e4) throw ParameterError(fmt::format("zipf: mean {} too close to 1", mean));
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double m = zipf_truncated_mean(mid, k_max);
        if (std::abs(m - mean) <= 1e-10 * mean) return mid;
        if (m > mean) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi);
}

// --- sampling -------------------------------------------------------------------

DegreeSampler::DegreeSampler(const DegreeDistribution& dist) : dist_(dist) {
    switch (dist.family) {
        case DistFamily::poisson:
            if (!(dist.mean > 0.0)) throw ParameterError("poisson: mean must be positive");
            break;
        case DistFamily::geometric:
            if (!(dist.mean >= 1.0)) {
                throw ParameterError("geometric: mean must be at least 1 (support starts at 1)");
            }
            break;
        case DistFamily::zipf: {
            const auto k_max = zipf_kmax(dist.mean);
            zipf_s_ = solve_zipf_exponent(dist.mean, k_max);
            zipf_cdf_ = zipf_cdf(zipf_s_, k_max);
            break;
        }
    }
}

DegreeSequence DegreeSampler::sample(std::size_t n, Rng& rng) const {
    std::vector<Degree> k(n);
    switch (dist_.family) {
        case DistFamily::poisson: {
            std::poisson_distribution<Degree> d(dist_.mean);
            for (auto& x : k) x = d(rng);
            break;
        }
        case DistFamily::geometric: {
            if (dist_.mean == 1.0) {
                std::fill(k.begin(), k.end(), Degree{1});
                break;
            }
            std::geometric_distribution<Degree> d(1.0 / dist_.mean);
            for (auto& x : k) x = d(rng) + 1;
            break;
        }
        case DistFamily::zipf: {
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const auto& cdf = *zipf_cdf_;
            for (auto& x : k) {
                const auto it = std::upper_bound(cdf.begin(), cdf.end(), u(rng));
                x = static_cast<Degree>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                                 std::ssize(cdf) - 1)) +
                    1;
            }
            break;
        }
    }
    return DegreeSequence(std::move(k));
}

DegreeSequence sample_degrees(const DegreeDistribution& dist, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ParameterError("sample_degrees: n must be positive");
    DegreeSampler sampler(dist);
    Rng rng = make_rng(seed);
    return sampler.sample(n, rng);
}

// --- Price model ------------------------------------------------------------------

void validate(const PriceParams& p) {
    if (p.m < 1) throw ParameterError("price: m must be at least 1");
    if (p.t_max < 1) throw ParameterError("price: T must be at least 1");
    if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha)) {
        throw ParameterError("price: alpha must be a finite non-negative number");
    }
    if (p.trials < 1) throw ParameterError("price: trials must be at least 1");
}

GrowthTrace price_simulate(const PriceParams& params, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    return price_simulate(params, rng);
}

GrowthTrace price_simulate(const PriceParams& params, Rng& rng) {
    validate(params);
    const std::size_t m = params.m;
    const std::size_t total_nodes = m + params.t_max;

    GrowthTrace trace;
    trace.m = m;
    trace.alpha = params.alpha;
    trace.steps.reserve(params.t_max);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Degree> k(total_nodes, 0);
    std::vector<double> weight(total_nodes, 0.0);
    std::vector<double> cumulative(total_nodes, 0.0);
    std::vector<std::size_t> chosen;
    chosen.reserve(m);

    for (std::size_t t = 1; t <= params.t_max; ++t) {
        const std::size_t existing = m + t - 1;
        for (std::size_t j = 0; j < existing; ++j) {
            weight[j] = std::pow(static_cast<double>(k[j]) + 1.0, params.alpha);
        }
        chosen.clear();
        if (!params.distinct_targets) {
            double acc = 0.0;
            for (std::size_t j = 0; j < existing; ++j) cumulative[j] = acc += weight[j];
            const auto first = cumulative.begin();
            const auto last = first + static_cast<std::ptrdiff_t>(existing);
            for (std::size_t e = 0; e < m; ++e) {
                const double target = unit(rng) * acc;
                const auto it = std::upper_bound(first, last, target);
                chosen.push_back(it == last ? existing - 1 : static_cast<std::size_t>(it - first));
            }
        } else {
            for (std::size_t e = 0; e < m; ++e) {
                double total = 0.0;
                for (std::size_t j = 0; j < existing; ++j) total += weight[j];
                const double target = unit(rng) * total;
                double acc = 0.0;
                std::size_t pick = existing;
                std::size_t last_positive = existing;
                for (std::size_t j = 0; j < existing; ++j) {
                    if (weight[j] <= 0.0) continue;
                    last_positive = j;
                    acc += weight[j];
                    if (target < acc) {
                        pick = j;
                        break;
                    }
                }
                if (pick == existing) pick = last_positive;  // rounding at the upper end
                chosen.push_back(pick);
                weight[pick] = 0.0;
            }
        }
        for (std::size_t j : chosen) ++k[j];
        trace.steps.emplace_back(
            std::vector<Degree>(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m + t)));
    }
    return trace;
}

HubCounts price_hub_counts(const PriceParams& params, std::span<const HubMethod> methods,
                           std::size_t workers) {
    validate(params);
    HubCounts counts(params.trials,
                     std::vector<std::vector<double>>(methods.size(),
                                                      std::vector<double>(params.t_max, 0.0)));
    parallel_for(params.trials, workers, [&](std::size_t trial) {
        Rng rng = make_rng(params.seed, {params.stream, trial});
        const GrowthTrace trace = price_simulate(params, rng);
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            for (std::size_t t = 0; t < trace.steps.size(); ++t) {
                counts[trial][mi][t] = static_cast<double>(methods[mi].count_hubs(trace.steps[t]));
            }
        }
    });
    return counts;
}

std::optional<std::size_t> first_crossing(std::span<const double> mean_by_step) {
    for (std::size_t t = 0; t < mean_by_step.size(); ++t) {
        if (mean_by_step[t] >= 1.0) return t + 1;
    }
    return std::nullopt;
}

std::optional<std::size_t> hub_transition(const PriceParams& params, EncodingKind enc,
                                          std::size_t workers) {
    const HubMethod method = HubMethod::mdl(enc);
    const HubCounts counts = price_hub_counts(params, std::span(&method, 1), workers);
    std::vector<double> mean(params.t_max, 0.0);
    for (const auto& trial : counts) {
        for (std::size_t t = 0; t < params.t_max; ++t) mean[t] += trial[0][t];
    }
    for (double& x : mean) x /= static_cast<double>(params.trials);
    return first_crossing(mean);
}

}  // namespace hubmdl
