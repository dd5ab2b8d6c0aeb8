#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "hubmdl/baselines.hpp"
#include "hubmdl/codelength.hpp"
#include "hubmdl/hubfinder.hpp"

namespace hubmdl {

/// One of the four hub classifiers: MDL under a given encoding, Average, or
/// Loubar.
struct HubMethod {
    enum class Kind { mdl, average, loubar };

    Kind kind = Kind::mdl;
    EncodingKind encoding = EncodingKind::ERm;

    static HubMethod mdl(EncodingKind enc) { return {Kind::mdl, enc}; }
    static HubMethod average() { return {Kind::average, EncodingKind::ERm}; }
    static HubMethod loubar() { return {Kind::loubar, EncodingKind::ERm}; }

    std::string name() const {
        switch (kind) {
            case Kind::mdl: return std::string(to_string(encoding));
            case Kind::average: return "Average";
            case Kind::loubar: return "Loubar";
        }
        return "?";
    }

    std::size_t count_hubs(const DegreeSequence& deg) const {
        switch (kind) {
            case Kind::mdl: return identify_hubs(deg, encoding).h_star;
            case Kind::average: return average_hubs(deg).h;
            case Kind::loubar: return loubar_hubs(deg).h;
        }
        return 0;
    }
};

/// Sample mean and two standard errors of the mean.
struct MeanSe {
    double mean = 0.0;
    double two_se = 0.0;
};

inline MeanSe summarize(std::span<const double> xs) {
    MeanSe r;
    if (xs.empty()) return r;
    double sum = 0.0;
    for (double x : xs) sum += x;
    r.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - r.mean) * (x - r.mean);
        const double var = ss / static_cast<double>(xs.size() - 1);
        r.two_se = 2.0 * std::sqrt(var / static_cast<double>(xs.size()));
    }
    return r;
}

}  // namespace hubmdl
