#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>

#include <fmt/core.h>

#include "hubmdl/baselines.hpp"
#include "hubmdl/commands.hpp"
#include "hubmdl/errors.hpp"
#include "hubmdl/exact.hpp"
#include "hubmdl/hubfinder.hpp"
#include "hubmdl/synth.hpp"
#include "hubmdl/version.hpp"

namespace hubmdl {

namespace {

struct Failure {
    std::size_t index;
    std::string what;
};

struct CheckContext {
    Rng rng;
    std::size_t trials;
    bool corrupt;  // fault injection for this check
};

using CheckFn = std::function<std::optional<Failure>(CheckContext&, std::size_t& cases)>;

struct Check {
    const char* name;
    CheckFn run;
};

std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

DegreeSequence random_degrees(Rng& rng, std::size_t n, Degree max_degree) {
    std::vector<Degree> k(n);
    for (auto& x : k) x = uniform_int(rng, 0, max_degree);
    return DegreeSequence(std::move(k));
}

// Small instance in either family: N in [1, 10], entries <= 8 (and <= N - 1
// for simple graphs).
DegreeSequence small_instance(Rng& rng, GraphFamily family) {
    const std::size_t n = uniform_int(rng, 1, 10);
    const Degree cap = family == GraphFamily::simple ? std::min<Degree>(8, n - 1) : 8;
    return random_degrees(rng, n, cap);
}

std::string show(const DegreeSequence& deg) {
    std::string s = "[";
    for (std::size_t i = 0; i < deg.n_nodes(); ++i) s += (i ? "," : "") + std::to_string(deg[i]);
    return s + "]";
}

std::optional<Failure> check_exact_binomial(CheckContext&, std::size_t& cases) {
    for (std::uint64_t n = 0; n <= 60; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            ++cases;
            const double fast = log2_binomial(n, k);
            const double exact = exact::log2(exact::binomial(n, k));
            if (std::abs(fast - exact) > 1e-9) {
                return Failure{cases - 1, fmt::format("log2 C({}, {}) = {} but exact value is {}",
                                                      n, k, fast, exact)};
            }
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_er_global(CheckContext& ctx, std::size_t& cases) {
    for (std::size_t i = 0; i < ctx.trials; ++i) {
        const EncodingKind enc = i % 2 ? EncodingKind::ERm : EncodingKind::ERs;
        const DegreeSequence deg = small_instance(ctx.rng, family_of(enc));
        ++cases;
        const HubResult greedy = identify_hubs(deg, enc);
        const HubResult brute = brute_force_hubs(deg, enc);
        if (std::abs(greedy.l_star - brute.l_star) > 1e-9) {
            return Failure{i, fmt::format("{} on {}: greedy {} bits, exhaustive {} bits",
                                          to_string(enc), show(deg), greedy.l_star, brute.l_star)};
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_cm_swap(CheckContext& ctx, std::size_t& cases) {
    for (std::size_t i = 0; i < ctx.trials; ++i) {
        const EncodingKind enc = i % 2 ? EncodingKind::CMm : EncodingKind::CMs;
        const DegreeSequence deg = small_instance(ctx.rng, family_of(enc));
        ++cases;
        const HubResult r = identify_hubs(deg, enc);
        if (r.h_star == 0) continue;
        // Local optimality holds where candidate degrees are at least the mean.
        const auto above_mean = [&](std::size_t j) { return deg[j] * deg.n_nodes() >= deg.total(); };
        if (!std::all_of(r.hub_ids.begin(), r.hub_ids.end(), above_mean)) continue;

        std::vector<bool> is_hub(deg.n_nodes(), false);
        for (auto j : r.hub_ids) is_hub[j] = true;
        std::vector<Degree> hub_deg;
        for (auto j : r.hub_ids) hub_deg.push_back(deg[j]);
        for (std::size_t a = 0; a < r.hub_ids.size(); ++a) {
            for (std::size_t c = 0; c < deg.n_nodes(); ++c) {
                if (is_hub[c] || !above_mean(c)) continue;
                auto swapped = hub_deg;
                swapped[a] = deg[c];
                const Bits dl = hub_dl(enc, deg, swapped);
                if (dl < r.l_star - 1e-9) {
                    return Failure{i, fmt::format("{} on {}: swapping hub {} for node {} lowers {} to {}",
                                                  to_string(enc), show(deg), r.hub_ids[a], c,
                                                  r.l_star, dl)};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_er_delta(CheckContext& ctx, std::size_t& cases) {
    std::size_t i = 0;
    while (cases < ctx.trials) {
        const std::uint64_t n = uniform_int(ctx.rng, 3, 200);
        const std::uint64_t h = uniform_int(ctx.rng, 1, n - 1);
        const std::uint64_t m = uniform_int(ctx.rng, 2, n * (n - 1));
        const std::uint64_t lo = std::max<std::uint64_t>((h * m + n - 1) / n,
                                                         m > (n - h) * (n - 1) ? m - (n - h) * (n - 1) : 0);
        const std::uint64_t hi = std::min<std::uint64_t>(m - 1, h * (n - 1) - 1);
        ++i;
        if (lo > hi) continue;
        const std::uint64_t mh = uniform_int(ctx.rng, lo, hi);
        ++cases;

        HubSummary before{h, mh, 0.0};
        HubSummary after{h, mh + 1, 0.0};
        double delta = hub_dl_terms(EncodingKind::ERs, n, m, after) -
                       hub_dl_terms(EncodingKind::ERs, n, m, before);
        if (ctx.corrupt) delta = -delta;

        const double num = static_cast<double>(h * (n - 1) - mh) * static_cast<double>(m - mh);
        const double den = static_cast<double>(mh + 1) *
                           static_cast<double>((n - 1) * (n - h) - (m - mh) + 1);
        const double closed = std::log2(num / den);
        if (!(delta < 0.0) || std::abs(delta - closed) > 1e-6) {
            return Failure{i - 1, fmt::format("N={} M={} h={} M_h={}: delta {} bits, closed form {}",
                                              n, m, h, mh, delta, closed)};
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_vandermonde(CheckContext& ctx, std::size_t& cases) {
    for (std::size_t i = 0; i < 5 * ctx.trials; ++i) {
        const std::size_t len = uniform_int(ctx.rng, 1, 6);
        std::uint64_t sx = 0, sy = 0;
        double parts = 0.0;
        for (std::size_t j = 0; j < len; ++j) {
            const auto x = uniform_int(ctx.rng, 0, 50);
            const auto y = uniform_int(ctx.rng, 0, x);
            sx += x;
            sy += y;
            parts += log2_binomial(x, y);
        }
        ++cases;
        const double whole = log2_binomial(sx, sy);
        if (whole < parts - 1e-9) {
            return Failure{i, fmt::format("log2 C({}, {}) = {} < {}", sx, sy, whole, parts)};
        }
    }
    return std::nullopt;
}

// L0(ERs) against the per-node part of L0(CMs). The full CMs baseline adds
// log C(M + N - 1, N - 1), which on Poisson sequences exceeds this gap.
std::optional<Failure> check_baseline_bound(CheckContext& ctx, std::size_t& cases) {
    const DegreeSampler sampler(DegreeDistribution{DistFamily::poisson, 50.0});
    const std::size_t count = std::max<std::size_t>(1, ctx.trials / 20);
    for (std::size_t i = 0; i < count; ++i) {
        const DegreeSequence deg = sampler.sample(10'000, ctx.rng);
        ++cases;
        const std::uint64_t n = deg.n_nodes();
        const Bits er = baseline_dl(EncodingKind::ERs, deg);
        const Bits per_node = baseline_dl(EncodingKind::CMs, deg) -
                              log2_binomial(deg.total() + n - 1, n - 1);
        if (per_node > er + 1e-6 * er) {
            return Failure{i, fmt::format("Poisson(50), N=1e4: per-node CMs terms {} > L0 ERs {}",
                                          per_node, er)};
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_result_invariants(CheckContext& ctx, std::size_t& cases) {
    constexpr EncodingKind all[] = {EncodingKind::ERs, EncodingKind::CMs, EncodingKind::ERm,
                                    EncodingKind::CMm};
    for (std::size_t i = 0; i < ctx.trials; ++i) {
        const EncodingKind enc = all[i % 4];
        const std::size_t n = uniform_int(ctx.rng, 1, 60);
        Degree cap = family_of(enc) == GraphFamily::simple ? n - 1 : 200;
        cap = std::min<Degree>(cap, uniform_int(ctx.rng, 0, 200));
        DegreeSequence deg = random_degrees(ctx.rng, n, cap);
        ++cases;
        const HubResult r = identify_hubs(deg, enc);

        Degree min_hub = ~Degree{0}, max_rest = 0;
        std::vector<bool> is_hub(n, false);
        for (auto j : r.hub_ids) is_hub[j] = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_hub[j]) min_hub = std::min(min_hub, deg[j]);
            else max_rest = std::max(max_rest, deg[j]);
        }
        if (r.h_star > 0 && min_hub < max_rest) {
            return Failure{i, fmt::format("{} on {}: hub set is not a top-degree prefix",
                                          to_string(enc), show(deg))};
        }
        if (!(r.eta >= 0.0 && r.eta <= 1.0)) {
            return Failure{i, fmt::format("{} on {}: eta = {}", to_string(enc), show(deg), r.eta)};
        }
        if (r.l_star > baseline_dl(enc, deg) + 1e-9) {
            return Failure{i, fmt::format("{} on {}: l_star above baseline", to_string(enc), show(deg))};
        }

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), ctx.rng);
        std::vector<Degree> shuffled(n);
        for (std::size_t j = 0; j < n; ++j) shuffled[perm[j]] = deg[j];
        const HubResult p = identify_hubs(DegreeSequence(shuffled), enc);
        std::vector<std::size_t> mapped;
        for (auto j : r.hub_ids) mapped.push_back(perm[j]);
        std::sort(mapped.begin(), mapped.end());
        if (p.h_star != r.h_star || std::abs(p.l_star - r.l_star) > 1e-9 ||
            std::abs(p.eta - r.eta) > 1e-12 || p.hub_ids != mapped) {
            return Failure{i, fmt::format("{} on {}: result changes under node permutation",
                                          to_string(enc), show(deg))};
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_loubar(CheckContext& ctx, std::size_t& cases) {
    for (std::size_t i = 0; i < ctx.trials; ++i) {
        const std::size_t n = uniform_int(ctx.rng, 1, 500);
        std::vector<Degree> k(n);
        for (auto& x : k) x = uniform_int(ctx.rng, 0, 1000);
        k[uniform_int(ctx.rng, 0, n - 1)] += 1;  // at least one positive degree
        const DegreeSequence deg(std::move(k));
        ++cases;
        const BaselineResult r = loubar_hubs(deg);
        const double ratio = static_cast<double>(deg.total()) /
                             (static_cast<double>(n) * static_cast<double>(deg.max()));
        const double frac = static_cast<double>(r.h) / static_cast<double>(n);
        if (!(std::abs(frac - ratio) < 1.0 / static_cast<double>(n))) {
            return Failure{i, fmt::format("N={}: h/N = {} but mean/max = {}", n, frac, ratio)};
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_entropy(CheckContext& ctx, std::size_t& cases) {
    for (std::size_t i = 0; i < ctx.trials; ++i) {
        const std::size_t n = uniform_int(ctx.rng, 2, 300);
        const Degree c = uniform_int(ctx.rng, 1, 1000);
        ++cases;
        const double uniform = normalized_degree_entropy(DegreeSequence(std::vector<Degree>(n, c)));
        std::vector<Degree> star(n, 0);
        star[uniform_int(ctx.rng, 0, n - 1)] = c;
        const double single = normalized_degree_entropy(DegreeSequence(star));
        DegreeSequence random = random_degrees(ctx.rng, n, 50);
        if (random.total() == 0) random = DegreeSequence(std::vector<Degree>(n, 1));
        const double h = normalized_degree_entropy(random);
        if (uniform != 1.0 || single != 0.0 || !(h >= 0.0 && h <= 1.0)) {
            return Failure{i, fmt::format("N={}: uniform {}, single target {}, random {}", n,
                                          uniform, single, h)};
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_price(CheckContext& ctx, std::size_t& cases) {
    const std::size_t runs = std::max<std::size_t>(1, ctx.trials / 20);
    for (std::size_t i = 0; i < runs; ++i) {
        PriceParams p;
        p.m = uniform_int(ctx.rng, 1, 20);
        p.alpha = static_cast<double>(uniform_int(ctx.rng, 0, 30)) / 10.0;
        p.t_max = 100;
        const GrowthTrace trace = price_simulate(p, ctx.rng);
        ++cases;
        for (std::size_t t = 1; t <= p.t_max; ++t) {
            const auto& deg = trace.steps[t - 1];
            if (deg.total() != p.m * t || deg.n_nodes() != p.m + t) {
                return Failure{i, fmt::format("m={} alpha={} t={}: {} nodes, total in-degree {}",
                                              p.m, p.alpha, t, deg.n_nodes(), deg.total())};
            }
        }
    }
    return std::nullopt;
}

const std::vector<Check>& checks() {
    static const std::vector<Check> all = {
        {"log2-binomial-exact", check_exact_binomial},
        {"er-greedy-global-optimum", check_er_global},
        {"cm-greedy-swap-optimality", check_cm_swap},
        {"er-delta-sign", check_er_delta},
        {"vandermonde-inequality", check_vandermonde},
        {"baseline-degree-bound", check_baseline_bound},
        {"hub-result-invariants", check_result_invariants},
        {"loubar-fraction", check_loubar},
        {"entropy-bounds", check_entropy},
        {"price-conservation", check_price},
    };
    return all;
}

}  // namespace

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> verify_check_names() {
    std::vector<std::string> names;
    for (const auto& c : checks()) names.emplace_back(c.name);
    return names;
}

VerifyReport run_verify(const VerifyConfig& config) {
    if (config.trials < 1) throw ParameterError("verify: trials must be at least 1");
    if (config.inject_fault) {
        const auto names = verify_check_names();
        if (std::find(names.begin(), names.end(), *config.inject_fault) == names.end()) {
            throw ParameterError(fmt::format("unknown check '{}'", *config.inject_fault));
        }
    }

    VerifyReport report;
    report.seed = config.seed;
    std::uint64_t key = 0;
    for (const auto& check : checks()) {
        CheckContext ctx{make_rng(config.seed, {key++}), config.trials,
                         config.inject_fault && *config.inject_fault == check.name};
        CheckResult result;
        result.name = check.name;
        if (auto failure = check.run(ctx, result.cases)) {
            result.passed = false;
            result.detail = fmt::format("case {}: {} (reproduce with --seed {} --trials {})",
                                        failure->index, failure->what, config.seed, config.trials);
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

void write_report(std::ostream& out, const VerifyReport& report, const std::string& command_line) {
    out << "# " << kToolName << ' ' << kVersion << '\n';
    out << "# command: " << command_line << '\n';
    out << "# seed: " << report.seed << '\n';
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
        if (!c.passed) out << ": " << c.detail;
        out << '\n';
    }
    out << (report.ok() ? "all checks passed" : "verification FAILED") << '\n';
}

}  // namespace hubmdl
