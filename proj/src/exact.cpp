#include "hubmdl/exact.hpp"

#include <cmath>

#include "hubmdl/errors.hpp"

namespace hubmdl::exact {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw DomainError("exact::binomial: k exceeds n");
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt multiset(std::uint64_t n, std::uint64_t k) {
    if (k == 0) return 1;
    if (n == 0) throw DomainError("exact::multiset: no slots");
    return binomial(n + k - 1, k);
}

Bits log2(const BigInt& x) {
    if (x <= 0) throw DomainError("exact::log2: non-positive argument");
    const std::size_t msb = boost::multiprecision::msb(x);
    if (msb < 63) return std::log2(static_cast<double>(static_cast<std::uint64_t>(x)));
    const std::size_t shift = msb - 62;
    const auto top = static_cast<std::uint64_t>(x >> shift);
    return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

const BigInt& Codebook::choose(std::uint64_t n, std::uint64_t k) {
    // Multiset entries are keyed through choose() as well, so key on (n, k).
    auto [it, inserted] = cache_.try_emplace({n, k});
    if (inserted) it->second = binomial(n, k);
    return it->second;
}

const BigInt& Codebook::multichoose(std::uint64_t n, std::uint64_t k) {
    if (k == 0) return choose(0, 0);
    if (n == 0) throw DomainError("exact::multiset: no slots");
    return choose(n + k - 1, k);
}

const BigInt& Codebook::hub_factor(std::uint64_t n, Degree k) {
    if (enc_ == EncodingKind::CMs) return choose(n - 1, k);
    return multichoose(n, k);
}

BigInt Codebook::baseline(const DegreeSequence& deg) {
    check_feasible(enc_, deg);
    const std::uint64_t n = deg.n_nodes();
    const Degree m = deg.total();
    switch (enc_) {
        case EncodingKind::ERs: return choose(n * (n - 1), m);
        case EncodingKind::ERm: return multichoose(n * n, m);
        case EncodingKind::CMs:
        case EncodingKind::CMm: {
            BigInt r = multichoose(n, m);
            for (Degree k : deg.degrees()) r *= hub_factor(n, k);
            return r;
        }
    }
    return 1;
}

BigInt Codebook::hub(const DegreeSequence& deg, std::span<const Degree> hub_degrees) {
    const std::uint64_t n = deg.n_nodes();
    const Degree m = deg.total();
    const std::uint64_t h = hub_degrees.size();
    if (m == 0) return 1;
    if (h == 0 || h == n) return baseline(deg);

    Degree m_h = 0;
    for (Degree k : hub_degrees) m_h += k;
    if (m_h > m) throw DomainError("exact hub code: hub degree exceeds M");

    BigInt r = BigInt(n) * m;
    r *= choose(n, h);
    switch (enc_) {
        case EncodingKind::ERs:
            r *= choose(h * (n - 1), m_h);
            r *= choose((n - h) * (n - 1), m - m_h);
            break;
        case EncodingKind::ERm:
            r *= multichoose(h * n, m_h);
            r *= multichoose((n - h) * n, m - m_h);
            break;
        case EncodingKind::CMs:
        case EncodingKind::CMm:
            r *= choose(m_h + h - 1, h - 1);
            for (Degree k : hub_degrees) r *= hub_factor(n, k);
            r *= enc_ == EncodingKind::CMs ? choose((n - h) * (n - 1), m - m_h)
                                           : multichoose((n - h) * n, m - m_h);
            break;
    }
    return r;
}

}  // namespace hubmdl::exact
