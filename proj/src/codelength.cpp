#include "hubmdl/codelength.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <fmt/core.h>

#include "hubmdl/errors.hpp"

namespace hubmdl {

DegreeSequence::DegreeSequence(std::vector<Degree> degrees)
    : degrees_(std::move(degrees)),
      total_(std::accumulate(degrees_.begin(), degrees_.end(), Degree{0})) {}

Degree DegreeSequence::max() const noexcept {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::string_view to_string(EncodingKind enc) noexcept {
    switch (enc) {
        case EncodingKind::ERs: return "ERs";
        case EncodingKind::CMs: return "CMs";
        case EncodingKind::ERm: return "ERm";
        case EncodingKind::CMm: return "CMm";
    }
    return "?";
}

std::string_view to_string(GraphFamily family) noexcept {
    return family == GraphFamily::simple ? "simple" : "multigraph";
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Stirling series remainder: ln n! - [(n + 1/2) ln n - n + ln(2 pi)/2].
constexpr std::array<double, 16> kStirlingError = {
    0.0,
    0.08106146679532725822,
    0.041340695955409294094,
    0.027677925684998339149,
    0.020790672103765093112,
    0.016644691189821192163,
    0.013876128823070747999,
    0.011896709945891770095,
    0.010411265261972096497,
    0.0092554621827127329177,
    0.0083305634333628712565,
    0.007573675487951840795,
    0.0069428401072095298657,
    0.0064089941880042070684,
    0.0059513701127588477356,
    0.005554733551962801371,
};

double stirling_error(std::uint64_t n) {
    if (n < kStirlingError.size()) return kStirlingError[n];
    constexpr double s0 = 1.0 / 12, s1 = 1.0 / 360, s2 = 1.0 / 1260, s3 = 1.0 / 1680,
                     s4 = 1.0 / 1188;
    const double x = static_cast<double>(n);
    const double x2 = x * x;
    return (s0 - (s1 - (s2 - (s3 - s4 / x2) / x2) / x2) / x2) / x;
}

// ln C(n, k) written as a sum of terms that are each small relative to the
// result, so no cancellation between ln n! and ln k! + ln (n-k)!.
double ln_binomial(std::uint64_t n, std::uint64_t k) {
    k = std::min(k, n - k);
    if (k == 0) return 0.0;
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double rd = static_cast<double>(n - k);
    const double entropy = kd * std::log(nd / kd) + rd * std::log1p(kd / rd);
    const double prefactor = 0.5 * std::log(nd / (2.0 * std::numbers::pi * kd * rd));
    return entropy + prefactor + stirling_error(n) - stirling_error(k) - stirling_error(n - k);
}

}  // namespace

EncodingKind parse_encoding(std::string_view name) {
    const auto s = lower(name);
    if (s == "ers") return EncodingKind::ERs;
    if (s == "cms") return EncodingKind::CMs;
    if (s == "erm") return EncodingKind::ERm;
    if (s == "cmm") return EncodingKind::CMm;
    throw ParameterError(fmt::format("unknown encoding '{}' (expected ers|cms|erm|cmm)", name));
}

GraphFamily parse_family(std::string_view name) {
    const auto s = lower(name);
    if (s == "simple") return GraphFamily::simple;
    if (s == "multigraph" || s == "multi") return GraphFamily::multigraph;
    throw ParameterError(fmt::format("unknown graph family '{}' (expected simple|multigraph)", name));
}

Bits log2_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw DomainError(fmt::format("log2_binomial: k = {} exceeds n = {}", k, n));
    return ln_binomial(n, k) / std::numbers::ln2;
}

Bits log2_multiset(std::uint64_t n, std::uint64_t k) {
    if (k == 0) return 0.0;
    if (n == 0) throw DomainError(fmt::format("log2_multiset: no slots for {} items", k));
    return log2_binomial(n + k - 1, k);
}

void check_feasible(EncodingKind enc, const DegreeSequence& deg) {
    if (family_of(enc) != GraphFamily::simple) return;
    const std::uint64_t n = deg.n_nodes();
    const std::uint64_t cap = n == 0 ? 0 : n - 1;
    const auto k = deg.degrees();
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] > cap) {
            throw FeasibilityError(
                fmt::format("{}: degree k[{}] = {} exceeds N - 1 = {} for a simple graph",
                            to_string(enc), i, k[i], cap),
                i);
        }
    }
    if (deg.total() > n * cap) {
        throw FeasibilityError(fmt::format("{}: M = {} exceeds N(N - 1) = {}", to_string(enc),
                                           deg.total(), n * cap),
                               FeasibilityError::npos);
    }
}

Bits hub_degree_term(EncodingKind enc, std::uint64_t n_nodes, Degree k) {
    switch (enc) {
        case EncodingKind::CMs: return log2_binomial(n_nodes - 1, k);
        case EncodingKind::CMm: return log2_multiset(n_nodes, k);
        default: return 0.0;
    }
}

Bits baseline_dl(EncodingKind enc, const DegreeSequence& deg) {
    check_feasible(enc, deg);
    const std::uint64_t n = deg.n_nodes();
    const Degree m = deg.total();
    switch (enc) {
        case EncodingKind::ERs: return log2_binomial(n * (n - 1), m);
        case EncodingKind::ERm: return log2_multiset(n * n, m);
        case EncodingKind::CMs:
        case EncodingKind::CMm: {
            Bits total = log2_multiset(n, m);
            for (Degree k : deg.degrees()) total += hub_degree_term(enc, n, k);
            return total;
        }
    }
    return 0.0;
}

Bits hub_dl_terms(EncodingKind enc, std::uint64_t n, Degree m, const HubSummary& hubs) {
    const std::uint64_t h = hubs.h;
    const Bits prefix = std::log2(static_cast<double>(n)) + std::log2(static_cast<double>(m)) +
                        log2_binomial(n, h);
    const Degree rest = m - hubs.m_h;
    switch (enc) {
        case EncodingKind::ERs:
            return prefix + log2_binomial(h * (n - 1), hubs.m_h) +
                   log2_binomial((n - h) * (n - 1), rest);
        case EncodingKind::ERm:
            return prefix + log2_multiset(h * n, hubs.m_h) + log2_multiset((n - h) * n, rest);
        case EncodingKind::CMs:
            return prefix + log2_binomial(hubs.m_h + h - 1, h - 1) + hubs.hub_terms +
                   log2_binomial((n - h) * (n - 1), rest);
        case EncodingKind::CMm:
            return prefix + log2_binomial(hubs.m_h + h - 1, h - 1) + hubs.hub_terms +
                   log2_multiset((n - h) * n, rest);
    }
    return 0.0;
}

Bits hub_dl(EncodingKind enc, const DegreeSequence& deg, std::span<const Degree> hub_degrees) {
    const std::uint64_t n = deg.n_nodes();
    if (hub_degrees.size() > n) {
        throw DomainError(fmt::format("hub_dl: {} hubs for {} nodes", hub_degrees.size(), n));
    }
    // Sub-multiset check on sorted copies.
    std::vector<Degree> all(deg.degrees().begin(), deg.degrees().end());
    std::vector<Degree> sub(hub_degrees.begin(), hub_degrees.end());
    std::sort(all.begin(), all.end());
    std::sort(sub.begin(), sub.end());
    if (!std::includes(all.begin(), all.end(), sub.begin(), sub.end())) {
        throw DomainError("hub_dl: hub degrees are not a sub-multiset of the degree sequence");
    }

    check_feasible(enc, deg);
    if (deg.total() == 0) return 0.0;
    if (sub.empty() || sub.size() == n) return baseline_dl(enc, deg);

    HubSummary s;
    s.h = sub.size();
    for (Degree k : sub) {
        s.m_h += k;
        s.hub_terms += hub_degree_term(enc, n, k);
    }
    return hub_dl_terms(enc, n, deg.total(), s);
}

}  // namespace hubmdl
