#pragma once

// Seeded sampling of Omega-words, uniform within a fixed degree.

#include <cstdint>
#include <random>
#include <vector>

#include "rbs/terms.hpp"

namespace rbs {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n); independent of the standard library's
/// distribution implementations so that seeded runs are reproducible.
std::uint64_t draw_below(Rng& rng, std::uint64_t n);

class WordSampler {
public:
    /// Throws std::overflow_error if the number of words of degree
    /// max_degree does not fit in 64 bits.
    WordSampler(const Signature& sig, std::size_t max_degree);

    /// Number of words of exactly this degree.
    std::uint64_t count(std::size_t degree) const { return words_.at(degree); }

    /// Uniform among all words of the given degree.
    Word word(std::size_t degree, Rng& rng) const;
    /// Uniform among RBS words of the given degree (rejection sampling).
    Word rbs_word(std::size_t degree, Rng& rng) const;

private:
    Prime prime(std::size_t degree, Rng& rng) const;

    std::size_t generators_;
    std::size_t operators_;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> primes_;
};

}  // namespace rbs
