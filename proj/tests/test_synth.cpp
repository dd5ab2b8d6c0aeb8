#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hubmdl/errors.hpp"
#include "hubmdl/methods.hpp"
#include "hubmdl/synth.hpp"

using namespace hubmdl;
using doctest::Approx;

namespace {

double mean_of(const DegreeSequence& d) {
    return static_cast<double>(d.total()) / static_cast<double>(d.n_nodes());
}

double relative_variance(const DegreeSequence& d) {
    const double mu = mean_of(d);
    double ss = 0.0;
    for (auto k : d.degrees()) ss += (static_cast<double>(k) - mu) * (static_cast<double>(k) - mu);
    return ss / static_cast<double>(d.n_nodes()) / (mu * mu);
}

// Truncated Zipf mean by direct summation.
double direct_zipf_mean(double s, std::uint64_t k_max) {
    long double num = 0.0L, den = 0.0L;
    for (std::uint64_t k = k_max; k >= 1; --k) {
        const long double w = std::pow(static_cast<long double>(k), -static_cast<long double>(s));
        num += w * static_cast<long double>(k);
        den += w;
    }
    return static_cast<double>(num / den);
}

}  // namespace

TEST_CASE("rng streams") {
    Rng a = make_rng(5, {1, 2});
    Rng b = make_rng(5, {1, 2});
    Rng c = make_rng(5, {2, 1});
    Rng d = make_rng(6, {1, 2});
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
}

TEST_CASE("poisson sampler") {
    const DegreeSequence d = sample_degrees(DegreeDistribution{DistFamily::poisson, 10.0}, 100'000, 1);
    CHECK(std::abs(mean_of(d) - 10.0) < 3.0 * std::sqrt(10.0 / 1e5));
    CHECK(d == sample_degrees(DegreeDistribution{DistFamily::poisson, 10.0}, 100'000, 1));
    CHECK_FALSE(d == sample_degrees(DegreeDistribution{DistFamily::poisson, 10.0}, 100'000, 2));
    CHECK_THROWS_AS(DegreeSampler(DegreeDistribution{DistFamily::poisson, 0.0}), ParameterError);
}

TEST_CASE("geometric sampler") {
    const DegreeSequence one = sample_degrees(DegreeDistribution{DistFamily::geometric, 1.0}, 1000, 3);
    CHECK(one == DegreeSequence(std::vector<Degree>(1000, 1)));
    const DegreeSequence d = sample_degrees(DegreeDistribution{DistFamily::geometric, 20.0}, 100'000, 4);
    CHECK(*std::min_element(d.degrees().begin(), d.degrees().end()) >= 1);
    CHECK(std::abs(mean_of(d) - 20.0) < 3.0 * std::sqrt(20.0 * 19.0 / 1e5));
    CHECK(relative_variance(d) == Approx(1.0 - 1.0 / 20.0).epsilon(0.05));
    CHECK_THROWS_AS(DegreeSampler(DegreeDistribution{DistFamily::geometric, 0.5}), ParameterError);
}

TEST_CASE("zipf exponent solver") {
    const std::uint64_t k_max = 10'000'000;
    const double s = solve_zipf_exponent(10.0, k_max);
    CHECK(std::abs(direct_zipf_mean(s, k_max) - 10.0) <= 1e-5);
    CHECK(std::abs(zipf_truncated_mean(s, k_max) - 10.0) <= 1e-6 * 10.0);

    // Near the upper end of the achievable range the exponent goes to 0.
    const double s_flat = solve_zipf_exponent(500.0, 1000);
    CHECK(s_flat >= 0.0);
    CHECK(s_flat < 0.01);
    CHECK(direct_zipf_mean(s_flat, 1000) == Approx(500.0).epsilon(1e-6));

    // Mean just above 1: nearly all mass on k = 1.
    const double eps = 1e-3;
    const double s_steep = solve_zipf_exponent(1.0 + eps, k_max);
    double z = 0.0;
    for (std::uint64_t k = 1; k <= 100'000; ++k) z += std::pow(static_cast<double>(k), -s_steep);
    CHECK(1.0 / z >= 1.0 - 2.0 * eps);

    CHECK_THROWS_AS(solve_zipf_exponent(1.0, k_max), ParameterError);
    CHECK_THROWS_AS(solve_zipf_exponent(600.0, 1000), ParameterError);
    CHECK(zipf_kmax(10.0) == 10'000'000);
    CHECK(zipf_kmax(1e5) == 100'000'000);
}

TEST_CASE("zipf is more variable than geometric") {
    const DegreeSampler zipf(DegreeDistribution{DistFamily::zipf, 10.0});
    CHECK(zipf.zipf_exponent() == Approx(solve_zipf_exponent(10.0, zipf_kmax(10.0))));
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng = make_rng(seed);
        wins += relative_variance(zipf.sample(100'000, rng)) > 1.0 - 1.0 / 10.0;
    }
    CHECK(wins >= 19);
}

TEST_CASE("sample_degrees rejects empty samples") {
    CHECK_THROWS_AS(sample_degrees(DegreeDistribution{DistFamily::poisson, 3.0}, 0, 1), ParameterError);
}

TEST_CASE("price conservation and determinism") {
    for (bool distinct : {false, true}) {
        for (std::size_t m : {1u, 3u, 18u}) {
            for (double alpha : {0.0, 0.5, 1.0, 2.7}) {
                PriceParams p;
                p.m = m;
                p.alpha = alpha;
                p.t_max = 60;
                p.distinct_targets = distinct;
                const GrowthTrace g = price_simulate(p, 9);
                REQUIRE(g.steps.size() == 60);
                for (std::size_t t = 1; t <= 60; ++t) {
                    REQUIRE(g.steps[t - 1].n_nodes() == m + t);
                    REQUIRE(g.steps[t - 1].total() == m * t);
                }
                REQUIRE(price_simulate(p, 9).steps == g.steps);
            }
        }
    }
}

TEST_CASE("price first arrival") {
    PriceParams p;
    p.m = 1;
    p.t_max = 1;
    CHECK(price_simulate(p, 1).steps[0] == DegreeSequence{1, 0});
    p.m = 5;
    p.distinct_targets = true;
    CHECK(price_simulate(p, 1).steps[0] == DegreeSequence{1, 1, 1, 1, 1, 0});
}

TEST_CASE("distinct targets give at most one edge per node and arrival") {
    PriceParams p;
    p.m = 6;
    p.alpha = 2.7;
    p.t_max = 80;
    p.distinct_targets = true;
    const GrowthTrace g = price_simulate(p, 4);
    for (std::size_t t = 1; t < p.t_max; ++t) {
        for (std::size_t j = 0; j < g.steps[t - 1].n_nodes(); ++j) {
            REQUIRE(g.steps[t][j] - g.steps[t - 1][j] <= 1);
        }
    }
}

TEST_CASE("superlinear attachment concentrates on the seeds") {
    PriceParams p;
    p.m = 4;
    p.alpha = 2.7;
    p.t_max = 100;
    int concentrated = 0;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        Rng rng = make_rng(17, {trial});
        const DegreeSequence& last = price_simulate(p, rng).steps.back();
        Degree seeds = 0;
        for (std::size_t j = 0; j < p.m; ++j) seeds += last[j];
        concentrated += static_cast<double>(seeds) >= 0.9 * static_cast<double>(last.total());
    }
    CHECK(concentrated >= 45);
}

TEST_CASE("price parameter validation") {
    PriceParams p;
    p.m = 0;
    CHECK_THROWS_AS(validate(p), ParameterError);
    p.m = 1;
    p.t_max = 0;
    CHECK_THROWS_AS(validate(p), ParameterError);
    p.t_max = 5;
    p.alpha = -1.0;
    CHECK_THROWS_AS(validate(p), ParameterError);
    p.alpha = 0.0;
    p.trials = 0;
    CHECK_THROWS_AS(validate(p), ParameterError);
}

TEST_CASE("hub counts do not depend on the worker count") {
    PriceParams p;
    p.m = 5;
    p.alpha = 1.0;
    p.t_max = 40;
    p.trials = 8;
    p.seed = 99;
    const HubMethod methods[] = {HubMethod::mdl(EncodingKind::ERm), HubMethod::mdl(EncodingKind::CMm),
                                 HubMethod::average(), HubMethod::loubar()};
    const HubCounts one = price_hub_counts(p, methods, 1);
    const HubCounts four = price_hub_counts(p, methods, 4);
    CHECK(one == four);
    CHECK(one.size() == 8);
    CHECK(one[0].size() == 4);
    CHECK(one[0][0].size() == 40);
}

TEST_CASE("first crossing") {
    const std::vector<double> xs{0.0, 0.5, 0.99, 1.0, 0.2, 3.0};
    CHECK(first_crossing(xs) == std::size_t{4});
    const std::vector<double> none{0.0, 0.9};
    CHECK_FALSE(first_crossing(none).has_value());
}

TEST_CASE("hub transitions") {
    PriceParams p;
    p.t_max = 100;
    p.trials = 50;
    p.seed = 2024;

    p.m = 1;
    p.alpha = 0.0;
    CHECK_FALSE(hub_transition(p, EncodingKind::CMm).has_value());

    p.m = 18;
    p.alpha = 0.5;
    const auto er = hub_transition(p, EncodingKind::ERm);
    REQUIRE(er.has_value());
    CHECK(*er >= 2);
    CHECK(*er <= 12);
    const auto cm = hub_transition(p, EncodingKind::CMm);
    REQUIRE(cm.has_value());
    CHECK(*cm >= 40);
    CHECK(*cm <= 85);
}

TEST_CASE("average hub count grows under linear attachment") {
    PriceParams p;
    p.m = 10;
    p.alpha = 1.0;
    p.t_max = 100;
    p.trials = 50;
    p.seed = 7;
    const HubMethod avg = HubMethod::average();
    const HubCounts counts = price_hub_counts(p, std::span(&avg, 1));
    std::vector<double> mean(p.t_max, 0.0);
    for (const auto& trial : counts) {
        for (std::size_t t = 0; t < p.t_max; ++t) mean[t] += trial[0][t] / 50.0;
    }
    // Least-squares slope over t >= m and its standard error.
    const std::size_t t0 = p.m - 1;
    const double n = static_cast<double>(p.t_max - t0);
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t t = t0; t < p.t_max; ++t) {
        st += static_cast<double>(t);
        sy += mean[t];
        stt += static_cast<double>(t * t);
        sty += static_cast<double>(t) * mean[t];
    }
    const double slope = (n * sty - st * sy) / (n * stt - st * st);
    const double icept = (sy - slope * st) / n;
    double rss = 0;
    for (std::size_t t = t0; t < p.t_max; ++t) {
        const double e = mean[t] - icept - slope * static_cast<double>(t);
        rss += e * e;
    }
    const double se = std::sqrt(rss / (n - 2) / (stt - st * st / n));
    CHECK(slope > 3.0 * se);
    CHECK(mean.back() > mean[t0]);
}
