#include "rbs/random.hpp"

#include <limits>
#include <stdexcept>

#include "rbs/rewriting.hpp"

namespace rbs {

std::uint64_t draw_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("draw_below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("word count overflow");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("word count overflow");
    return r;
}

}  // namespace

WordSampler::WordSampler(const Signature& sig, std::size_t max_degree)
    : generators_(sig.generator_count()), operators_(sig.operator_count()),
      words_(max_degree + 1, 0), primes_(max_degree + 1, 0) {
    words_[0] = 1;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        primes_[d] = checked_add(d == 1 ? generators_ : 0, checked_mul(operators_, words_[d - 1]));
        for (std::size_t i = 1; i <= d; ++i)
            words_[d] = checked_add(words_[d], checked_mul(primes_[i], words_[d - i]));
    }
}

Prime WordSampler::prime(std::size_t degree, Rng& rng) const {
    if (degree == 1) {
        auto k = draw_below(rng, primes_[1]);
        if (k < generators_) return Prime::generator(static_cast<SymbolId>(k));
        return Prime::apply(static_cast<SymbolId>(k - generators_), Word::unit());
    }
    auto op = static_cast<SymbolId>(draw_below(rng, operators_));
    return Prime::apply(op, word(degree - 1, rng));
}

Word WordSampler::word(std::size_t degree, Rng& rng) const {
    std::vector<Prime> factors;
    std::size_t left = degree;
    while (left > 0) {
        // first prime has degree i with weight primes_[i] * words_[left - i]
        std::uint64_t k = draw_below(rng, words_.at(left));
        std::size_t i = 1;
        for (;; ++i) {
            std::uint64_t weight = primes_[i] * words_[left - i];
            if (k < weight) break;
            k -= weight;
        }
        factors.push_back(prime(i, rng));
        left -= i;
    }
    return Word(std::move(factors));
}

Word WordSampler::rbs_word(std::size_t degree, Rng& rng) const {
    for (;;) {
        Word w = word(degree, rng);
        if (is_rbs_word(w)) return w;
    }
}

}  // namespace rbs
