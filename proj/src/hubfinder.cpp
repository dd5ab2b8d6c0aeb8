#include "hubmdl/hubfinder.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/core.h>

#include "hubmdl/errors.hpp"
#include "hubmdl/exact.hpp"

namespace hubmdl {

namespace {

void fill_baselines(HubResult& r, const DegreeSequence& deg) {
    const GraphFamily family = family_of(r.encoding);
    r.l0_er = baseline_dl(er_encoding(family), deg);
    r.l0_cm = baseline_dl(cm_encoding(family), deg);
    const Bits denom = std::max(r.l0_er, r.l0_cm);
    r.eta = (deg.total() == 0 || denom <= 0.0) ? 1.0 : r.l_star / denom;
}

void finish(HubResult& r, const DegreeSequence& deg) {
    std::sort(r.hub_ids.begin(), r.hub_ids.end());
    r.h_star = r.hub_ids.size();
    r.threshold_degree.reset();
    for (std::size_t i : r.hub_ids) {
        if (!r.threshold_degree || deg[i] < *r.threshold_degree) r.threshold_degree = deg[i];
    }
    fill_baselines(r, deg);
}

}  // namespace

HubResult identify_hubs(const DegreeSequence& deg, EncodingKind enc) {
    if (deg.empty()) throw DomainError("identify_hubs: empty degree sequence");
    check_feasible(enc, deg);

    HubResult result;
    result.encoding = enc;
    const std::uint64_t n = deg.n_nodes();
    const Degree m = deg.total();

    if (m == 0) {
        finish(result, deg);
        return result;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

    Bits best = baseline_dl(enc, deg);
    std::size_t best_h = 0;

    HubSummary hubs;
    // h = N reproduces the baseline by convention, so the scan stops at N - 1.
    for (std::size_t pos = 0; pos + 1 < n; ++pos) {
        const Degree k = deg[order[pos]];
        hubs.h += 1;
        hubs.m_h += k;
        hubs.hub_terms += hub_degree_term(enc, n, k);
        if (deg[order[pos + 1]] == k) continue;  // inside a block of equal degree

        const Bits dl = hub_dl_terms(enc, n, m, hubs);
        if (dl < best) {
            best = dl;
            best_h = hubs.h;
        }
    }

    result.l_star = best;
    result.hub_ids.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_h));
    finish(result, deg);
    return result;
}

double inverse_compression_ratio(const DegreeSequence& deg, GraphFamily family, Bits l_star) {
    if (deg.total() == 0) return 1.0;
    const Bits denom =
        std::max(baseline_dl(er_encoding(family), deg), baseline_dl(cm_encoding(family), deg));
    if (denom <= 0.0) return 1.0;
    return l_star / denom;
}

std::pair<EncodingKind, HubResult> select_encoding(const DegreeSequence& deg, GraphFamily family) {
    const EncodingKind er = er_encoding(family);
    const EncodingKind cm = cm_encoding(family);
    HubResult er_result = identify_hubs(deg, er);
    HubResult cm_result = identify_hubs(deg, cm);
    if (cm_result.l_star < er_result.l_star - 1e-9) return {cm, std::move(cm_result)};
    return {er, std::move(er_result)};
}

HubResult brute_force_hubs(const DegreeSequence& deg, EncodingKind enc) {
    const std::size_t n = deg.n_nodes();
    if (n == 0) throw DomainError("brute_force_hubs: empty degree sequence");
    if (n > kBruteForceMaxNodes) {
        throw SizeError(fmt::format("brute_force_hubs: N = {} exceeds the exhaustive limit of {}",
                                    n, kBruteForceMaxNodes));
    }
    check_feasible(enc, deg);

    exact::Codebook book(enc);
    exact::BigInt best_size;
    std::size_t best_h = 0;
    Degree best_mh = 0;
    std::vector<std::size_t> best_ids;
    bool have_best = false;

    std::vector<std::size_t> ids;
    std::vector<Degree> hub_degrees;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ids.clear();
        hub_degrees.clear();
        Degree m_h = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                ids.push_back(i);
                hub_degrees.push_back(deg[i]);
                m_h += deg[i];
            }
        }
        // h = N is the baseline again and is reported as h = 0.
        if (ids.size() == n && n > 0) continue;

        exact::BigInt size = book.hub(deg, hub_degrees);
        bool better = !have_best || size < best_size;
        if (!better && size == best_size) {
            if (ids.size() != best_h) {
                better = ids.size() < best_h;
            } else if (m_h != best_mh) {
                better = m_h > best_mh;
            } else {
                better = ids < best_ids;
            }
        }
        if (better) {
            have_best = true;
            best_size = std::move(size);
            best_h = ids.size();
            best_mh = m_h;
            best_ids = ids;
        }
    }

    HubResult result;
    result.encoding = enc;
    result.hub_ids = best_ids;
    result.l_star = exact::log2(best_size);
    finish(result, deg);
    return result;
}

}  // namespace hubmdl
