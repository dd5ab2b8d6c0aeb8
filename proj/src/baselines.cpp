#include "hubmdl/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hubmdl/errors.hpp"

namespace hubmdl {

std::string_view to_string(BaselineMethod method) noexcept {
    return method == BaselineMethod::average ? "Average" : "Loubar";
}

BaselineResult average_hubs(const DegreeSequence& deg) {
    if (deg.empty()) throw DomainError("average_hubs: empty degree sequence");
    BaselineResult r;
    r.method = BaselineMethod::average;
    // k_i >= M / N, compared exactly as floor(M / N) plus remainder.
    const Degree n = deg.n_nodes();
    const Degree q = deg.total() / n;
    const Degree rem = deg.total() % n;
    for (std::size_t i = 0; i < deg.n_nodes(); ++i) {
        if (deg[i] > q || (deg[i] == q && rem == 0)) r.hub_ids.push_back(i);
    }
    r.h = r.hub_ids.size();
    return r;
}

BaselineResult loubar_hubs(const DegreeSequence& deg) {
    if (deg.empty()) throw DomainError("loubar_hubs: empty degree sequence");
    const Degree kmax = deg.max();
    if (kmax == 0) throw DomainError("loubar_hubs: all degrees are zero, threshold undefined");

    // N * mean / max = M / max, so h = ceil(M / max).
    const Degree m = deg.total();
    const std::size_t h = static_cast<std::size_t>((m + kmax - 1) / kmax);

    std::vector<std::size_t> order(deg.n_nodes());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

    BaselineResult r;
    r.method = BaselineMethod::loubar;
    r.hub_ids.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(h));
    std::sort(r.hub_ids.begin(), r.hub_ids.end());
    r.h = h;
    return r;
}

double normalized_degree_entropy(const DegreeSequence& deg) {
    if (deg.n_nodes() < 2) throw DomainError("normalized_degree_entropy: needs N >= 2");
    if (deg.total() == 0) throw DomainError("normalized_degree_entropy: needs M > 0");
    // Summing per distinct degree keeps the extremes exact: a uniform
    // sequence gives log2(M / k) = log2 N, a single target gives log2 1 = 0.
    std::vector<Degree> sorted(deg.degrees().begin(), deg.degrees().end());
    std::sort(sorted.begin(), sorted.end());
    const double m = static_cast<double>(deg.total());
    double h = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const Degree k = sorted[i];
        if (k > 0) {
            const double mass = static_cast<double>(k * (j - i)) / m;
            h += mass * std::log2(m / static_cast<double>(k));
        }
        i = j;
    }
    const double v = h / std::log2(static_cast<double>(deg.n_nodes()));
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace hubmdl
