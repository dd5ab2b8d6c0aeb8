#pragma once

// Exact big-integer evaluation of the code lengths. Slow; only the brute-force
// hub search and the verification suite use it.

#include <cstdint>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hubmdl/codelength.hpp"

namespace hubmdl::exact {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt multiset(std::uint64_t n, std::uint64_t k);

/// log2 of a positive big integer, correct to double rounding.
Bits log2(const BigInt& x);

/// Memoizing evaluator of codebook sizes: the description length in bits is
/// log2 of the returned integer.
class Codebook {
public:
    explicit Codebook(EncodingKind enc) : enc_(enc) {}

    BigInt baseline(const DegreeSequence& deg);

    /// Codebook size of the hub encoding for the hub set whose degrees are
    /// given, with the h in {0, N} and M = 0 conventions applied.
    BigInt hub(const DegreeSequence& deg, std::span<const Degree> hub_degrees);

private:
    const BigInt& choose(std::uint64_t n, std::uint64_t k);
    const BigInt& multichoose(std::uint64_t n, std::uint64_t k);
    const BigInt& hub_factor(std::uint64_t n, Degree k);

    EncodingKind enc_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, BigInt> cache_;
};

}  // namespace hubmdl::exact
